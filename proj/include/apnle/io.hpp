#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apnle/lut.hpp"

namespace apnle {

/// Malformed LUT input; `line` is 1-based.
class LutParseError : public std::runtime_error {
 public:
  LutParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One function per line: 2^n space-separated hex fields, each padded to
/// ceil(n/4) digits.
inline std::string format_lut_line(const Lut& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int width = (f.n + 3) / 4;
  std::string out;
  out.reserve(f.size() * static_cast<std::size_t>(width + 1));
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (x) out.push_back(' ');
    for (int d = width - 1; d >= 0; --d) out.push_back(kDigits[(f.table[x] >> (4 * d)) & 0xF]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Lut& f) { return os << '[' << format_lut_line(f) << ']'; }

inline void write_luts(std::ostream& os, const std::vector<Lut>& fs) {
  for (const auto& f : fs) os << format_lut_line(f) << '\n';
}

/// Parses one line. The field count fixes n unless `expected_n` is given.
inline Lut parse_lut_line(const std::string& line, std::size_t line_no, std::optional<int> expected_n = std::nullopt) {
  std::istringstream is(line);
  std::vector<std::uint32_t> vals;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok.size() > 4) throw LutParseError(line_no, "bad hex field '" + tok + "'");
    vals.push_back(static_cast<std::uint32_t>(v));
  }
  if (vals.size() < 2 || !std::has_single_bit(vals.size())) {
    throw LutParseError(line_no, "expected 2^n fields, got " + std::to_string(vals.size()));
  }
  const int n = std::countr_zero(vals.size());
  if (expected_n && *expected_n != n) {
    throw LutParseError(line_no, "expected " + std::to_string(std::size_t{1} << *expected_n) + " fields, got " + std::to_string(vals.size()));
  }
  for (auto v : vals) {
    if (v >= vals.size()) throw LutParseError(line_no, "value out of range");
  }
  return Lut(n, std::move(vals));
}

/// Blank lines and lines starting with '#' are skipped. All functions must
/// share one n.
inline std::vector<Lut> read_luts(std::istream& is, std::optional<int> expected_n = std::nullopt) {
  std::vector<Lut> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_lut_line(line, line_no, expected_n));
    if (!expected_n) expected_n = out.back().n;
  }
  return out;
}

}  // namespace apnle
