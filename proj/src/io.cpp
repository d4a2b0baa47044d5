#include "wildns/io.hpp"

#include <bit>
#include <cstring>

namespace wildns::field3 {

std::string rank_name(Rank r) {
  switch (r) {
    case Rank::Scalar:
      return "scalar";
    case Rank::Vector:
      return "vector";
    case Rank::SymTensor:
      return "symtensor";
  }
  return "?";
}

Rank rank_from_name(const std::string& s) {
  if (s == "scalar") return Rank::Scalar;
  if (s == "vector") return Rank::Vector;
  if (s == "symtensor") return Rank::SymTensor;
  throw WildError("unknown rank: " + s);
}

static_assert(std::endian::native == std::endian::little,
              "wf1 writer assumes a little-endian host");

void write_wf1(const std::filesystem::path& path, const RealField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw WildError("cannot open " + path.string());
  out << "WF1 " << rank_name(f.rank) << " " << f.grid.n << "\n";
  for (int c = 0; c < ncomp(f.rank); ++c)
    out.write(reinterpret_cast<const char*>(f.c[c].data()),
              std::streamsize(f.c[c].size() * sizeof(double)));
  if (!out) throw WildError("write failed: " + path.string());
}

RealField read_wf1(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WildError("cannot open " + path.string());
  std::string magic, rank;
  int n = 0;
  in >> magic >> rank >> n;
  if (magic != "WF1") throw WildError("not a WF1 file: " + path.string());
  in.get();  // newline
  RealField f(Grid3(n), rank_from_name(rank));
  for (int c = 0; c < ncomp(f.rank); ++c)
    in.read(reinterpret_cast<char*>(f.c[c].data()),
            std::streamsize(f.c[c].size() * sizeof(double)));
  if (!in) throw WildError("truncated WF1 file: " + path.string());
  return f;
}

}  // namespace wildns::field3
