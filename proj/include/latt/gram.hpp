#pragma once

#include <vector>

#include "latt/checked.hpp"

namespace latt {

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

/// Symmetric integer Gram matrix.  Rows are basis vectors; entry (i,j) is
/// the pairing of basis vectors i and j, so the diagonal carries the form
/// values.
struct GramMatrix {
  int rank = 0;
  Mat entries;
};

struct Lattice {
  GramMatrix gram;
  bool definite = false;
};

/// Norm-3 vector whose orthogonal complement is an even sublattice.
struct DistinguishedElement {
  Vec vector;
};

/// Invariant factors d1 | d2 | ... | dn of an integer matrix, all positive.
struct DiscriminantGroup {
  std::vector<i64> invariant_factors;
  int l() const {
    int c = 0;
    for (i64 f : invariant_factors)
      if (f > 1) ++c;
    return c;
  }
};

inline i64 pairing(const GramMatrix& g, const Vec& u, const Vec& v) {
  i128 acc = 0;
  for (int i = 0; i < g.rank; ++i) {
    if (u[i] == 0) continue;
    i128 row = 0;
    for (int j = 0; j < g.rank; ++j)
      row = chk_add128(row, chk_mul128(g.entries[i][j], v[j]));
    acc = chk_add128(acc, chk_mul128(u[i], row));
  }
  return narrow(acc);
}

inline i64 norm(const GramMatrix& g, const Vec& v) { return pairing(g, v, v); }

inline i64 content(const Vec& v) {
  i64 g = 0;
  for (i64 c : v) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

/// Primitive iff the coordinate gcd is 1; the zero vector is not primitive.
inline bool is_primitive(const Vec& v) { return content(v) == 1; }

inline bool is_zero(const Vec& v) {
  for (i64 c : v)
    if (c != 0) return false;
  return true;
}

/// Canonical sign: first nonzero coordinate positive.
inline Vec canonical_sign(Vec v) {
  for (i64 c : v) {
    if (c > 0) return v;
    if (c < 0) {
      for (i64& x : v) x = -x;
      return v;
    }
  }
  return v;
}

/// Deterministic coordinate order: entries compare by absolute value first,
/// positive before negative on ties.  Under this order (0,0,0,1) precedes
/// (0,0,1,0)-style vectors with earlier support, and small-magnitude
/// solutions come first.
inline bool coord_less(i64 a, i64 b) {
  i64 aa = a < 0 ? -a : a;
  i64 ab = b < 0 ? -b : b;
  if (aa != ab) return aa < ab;
  return a > b;  // positive before negative
}

inline bool vec_less(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return coord_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

}  // namespace latt
