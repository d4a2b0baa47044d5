#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "wildns/field.hpp"

namespace wildns::field3 {

// Field dump: header "WF1 <rank> <n>\n", then little-endian float64 samples,
// row-major grid order, component-major.
void write_wf1(const std::filesystem::path& path, const RealField& f);
RealField read_wf1(const std::filesystem::path& path);

std::string rank_name(Rank r);
Rank rank_from_name(const std::string& s);

}  // namespace wildns::field3

namespace wildns::io {

class CsvWriter {
 public:
  explicit CsvWriter(const std::filesystem::path& path) : out_(path) {
    if (!out_) throw WildError("cannot open " + path.string());
  }
  void header(const std::string& line) { out_ << line << "\n"; }
  template <typename... Ts>
  void row(const Ts&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << format(cells), first = false), ...);
    out_ << "\n";
  }
  void comment(const std::string& line) { out_ << "# " << line << "\n"; }

 private:
  static std::string format(const std::string& s) { return s; }
  static std::string format(const char* s) { return s; }
  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
  static std::string format(int v) { return std::to_string(v); }
  static std::string format(long v) { return std::to_string(v); }
  static std::string format(std::size_t v) { return std::to_string(v); }
  static std::string format(bool v) { return v ? "pass" : "FAIL"; }
  std::ofstream out_;
};

}  // namespace wildns::io
