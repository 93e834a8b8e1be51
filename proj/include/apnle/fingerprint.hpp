#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "apnle/lut.hpp"
#include "json.hpp"

namespace apnle {

/// Histograms that are invariant under CCZ equivalence. Equal fingerprints do
/// not prove equivalence; different ones prove inequivalence.
struct CczFingerprint {
  static constexpr int kSchemaVersion = 2;
  /// Largest n for which the zero-flat histogram is computed.
  static constexpr int kMaxFlatsDim = 7;

  int n = 0;
  /// |W(a, b)| over all a and b != 0.
  std::map<std::uint32_t, std::uint64_t> extended_walsh;
  /// DDT entries over alpha != 0, all beta.
  std::map<std::uint32_t, std::uint64_t> differential_spectrum;
  /// For each 2-dim linear subspace U inside the Walsh zero set Z (with 0
  /// adjoined), the number of w with w + U inside Z. Empty when n > 7.
  std::map<std::uint64_t, std::uint64_t> walsh_zero_flats;
  bool has_flats = false;

  friend bool operator==(const CczFingerprint&, const CczFingerprint&) = default;

  nlohmann::ordered_json to_json() const {
    auto hist = [](const auto& m) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& [k, v] : m) arr.push_back({k, v});
      return arr;
    };
    nlohmann::ordered_json j;
    j["schema"] = kSchemaVersion;
    j["n"] = n;
    j["extended_walsh"] = hist(extended_walsh);
    j["differential_spectrum"] = hist(differential_spectrum);
    if (has_flats) j["walsh_zero_flats"] = hist(walsh_zero_flats);
    return j;
  }

  /// FNV-1a 64 over the canonical JSON, as 16 hex digits.
  std::string digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json().dump()) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kDigits[h & 0xF];
    return out;
  }
};

namespace detail {

inline std::map<std::uint64_t, std::uint64_t> walsh_zero_flats(int n, const std::vector<std::int32_t>& w) {
  const std::size_t q = std::size_t{1} << n;
  const std::size_t m = q * q;
  const std::size_t words = (m + 63) / 64;
  // Point u = a | (b << n) with w indexed [b][a].
  std::vector<char> in_z(m, 0);
  for (std::size_t b = 0; b < q; ++b) {
    for (std::size_t a = 0; a < q; ++a) in_z[a | (b << n)] = w[b * q + a] == 0;
  }
  in_z[0] = 1;
  std::vector<std::uint32_t> zs;
  for (std::size_t u = 1; u < m; ++u) {
    if (in_z[u]) zs.push_back(static_cast<std::uint32_t>(u));
  }
  // shifted[u] = bitset of {v in Z : v + u in Z}, for u in Z.
  std::vector<std::uint64_t> shifted(m * words, 0);
  for (auto u : zs) {
    std::uint64_t* row = &shifted[u * words];
    for (std::size_t v = 0; v < m; ++v) {
      if (in_z[v] && in_z[v ^ u]) row[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  std::map<std::uint64_t, std::uint64_t> hist;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::uint32_t u = zs[i];
    const std::uint64_t* ru = &shifted[u * words];
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      const std::uint32_t v = zs[j];
      const std::uint32_t s = u ^ v;
      if (s < v || !in_z[s]) continue;
      const std::uint64_t* rv = &shifted[v * words];
      const std::uint64_t* rs = &shifted[std::size_t{s} * words];
      std::uint64_t cnt = 0;
      for (std::size_t k = 0; k < words; ++k) cnt += static_cast<std::uint64_t>(std::popcount(ru[k] & rv[k] & rs[k]));
      ++hist[cnt];
    }
  }
  return hist;
}

}  // namespace detail

inline CczFingerprint fingerprint(const Lut& f) {
  CczFingerprint fp;
  fp.n = f.n;
  const std::size_t q = f.size();
  const auto w = walsh_table(f);
  for (std::size_t b = 1; b < q; ++b) {
    for (std::size_t a = 0; a < q; ++a) ++fp.extended_walsh[static_cast<std::uint32_t>(std::abs(w[b * q + a]))];
  }
  const auto d = ddt(f);
  for (std::size_t i = q; i < d.counts.size(); ++i) ++fp.differential_spectrum[d.counts[i]];
  if (f.n <= CczFingerprint::kMaxFlatsDim) {
    fp.walsh_zero_flats = detail::walsh_zero_flats(f.n, w);
    fp.has_flats = true;
  }
  return fp;
}

}  // namespace apnle
