#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apnle/classify.hpp"
#include "apnle/linalg.hpp"
#include "json.hpp"

namespace apnle {

struct Verdict {
  enum class Kind { RejectedDim, RejectedQuadrinomial, Undecided };
  Kind kind = Kind::Undecided;
  // RejectedDim: Ord(A, i) and Ord(B, i) dimensions.
  std::uint64_t i = 0;
  int dim_a = 0;
  int dim_b = 0;
  // RejectedQuadrinomial: A^a + A^b + A^c + I = 0, same for B.
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;

  bool rejected() const { return kind != Kind::Undecided; }
};

inline std::string kind_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::RejectedDim: return "rejected-dim";
    case Verdict::Kind::RejectedQuadrinomial: return "rejected-quadrinomial";
    case Verdict::Kind::Undecided: return "undecided";
  }
  return "?";
}

/// An APN permutation maps Ord(A, i) onto Ord(B, i), so their dimensions
/// agree, and a proper invariant subspace cannot have dimension 2, 4 or n-1.
inline Verdict dim_filter(const AutoTuple& t) {
  for (std::uint64_t i : {std::uint64_t{1}, t.p}) {
    const int da = fixed_space(t.A, i).dim;
    const int db = fixed_space(t.B, i).dim;
    const bool mismatch = da != db;
    const bool forbidden = da > 0 && da < t.n && (da == 2 || da == 4 || da == t.n - 1);
    if (mismatch || forbidden) {
      Verdict v;
      v.kind = Verdict::Kind::RejectedDim;
      v.i = i;
      v.dim_a = da;
      v.dim_b = db;
      return v;
    }
  }
  return {};
}

/// Looks for 0 < c < b < a < p with A^a + A^b + A^c + I = 0 and the same
/// relation for B. Scans a downward, then b, then c; first hit wins.
inline Verdict quadrinomial_filter(const AutoTuple& t) {
  const std::uint64_t p = t.p;
  std::vector<Gf2Matrix> pa(p);
  std::vector<Gf2Matrix> pb(p);
  pa[0] = Gf2Matrix::identity(t.n);
  pb[0] = Gf2Matrix::identity(t.n);
  for (std::uint64_t k = 1; k < p; ++k) {
    pa[k] = pa[k - 1] * t.A;
    pb[k] = pb[k - 1] * t.B;
  }
  for (std::uint64_t a = p - 1; a >= 3 && a < p; --a) {
    for (std::uint64_t b = a - 1; b >= 2; --b) {
      const Gf2Matrix sa = pa[a] + pa[b] + pa[0];
      const Gf2Matrix sb = pb[a] + pb[b] + pb[0];
      for (std::uint64_t c = b - 1; c >= 1; --c) {
        if (sa == pa[c] && sb == pb[c]) {
          Verdict v;
          v.kind = Verdict::Kind::RejectedQuadrinomial;
          v.a = a;
          v.b = b;
          v.c = c;
          return v;
        }
      }
    }
  }
  return {};
}

/// Dimension filter first, then the quadrinomial filter.
inline Verdict admissibility(const AutoTuple& t) {
  if (auto v = dim_filter(t); v.rejected()) return v;
  return quadrinomial_filter(t);
}

inline nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = kind_name(v.kind);
  if (v.kind == Verdict::Kind::RejectedDim) {
    j["witness"] = {{"i", v.i}, {"dim_A", v.dim_a}, {"dim_B", v.dim_b}};
  } else if (v.kind == Verdict::Kind::RejectedQuadrinomial) {
    j["witness"] = {{"a", v.a}, {"b", v.b}, {"c", v.c}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

/// Reference verdict code for a table row: dim, quad, search, yes, open.
inline bool verdict_matches_reference(const Verdict& v, const std::string& ref) {
  if (ref == "dim") return v.kind == Verdict::Kind::RejectedDim;
  if (ref == "quad") return v.kind == Verdict::Kind::RejectedQuadrinomial;
  return v.kind == Verdict::Kind::Undecided;
}

}  // namespace apnle
