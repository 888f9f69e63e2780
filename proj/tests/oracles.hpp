// Independent reference implementations used to check the library.  These
// deliberately avoid the library's computation paths: determinants by
// cofactor expansion, value sets by plain box search with a coordinate
// bound read off the adjugate, three-squares classification by a triple
// loop, Smith invariants by determinantal divisors.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Mat = std::vector<std::vector<i64>>;
using Vec = std::vector<i64>;

inline i64 cofactor_det(const Mat& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i64 det = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Mat sub;
    for (size_t r = 1; r < n; ++r) {
      Vec row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(row);
    }
    i64 term = m[0][j] * cofactor_det(sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline i64 eval(const Mat& g, const Vec& x) {
  i64 q = 0;
  size_t n = g.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q += g[i][j] * x[i] * x[j];
  return q;
}

inline i64 vgcd(const Vec& v) {
  i64 g = 0;
  for (i64 c : v) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

// Coordinate bound for q(x) <= bound: x_i^2 <= bound * (A^{-1})_{ii} where
// A^{-1} = adj(A)/det(A); we use x_i^2 <= bound * adj_ii / det, rounded up.
inline i64 coord_bound(const Mat& g, size_t i, i64 bound) {
  size_t n = g.size();
  Mat sub;
  for (size_t r = 0; r < n; ++r) {
    if (r == i) continue;
    Vec row;
    for (size_t c = 0; c < n; ++c)
      if (c != i) row.push_back(g[r][c]);
    sub.push_back(row);
  }
  i64 det = cofactor_det(g);
  i64 adj = cofactor_det(sub);
  // ceil(sqrt(bound * adj / det)) + 1 slack
  long double v = static_cast<long double>(bound) * adj / det;
  i64 b = static_cast<i64>(v >= 0 ? __builtin_sqrtl(v) : 0) + 2;
  return b;
}

// All values <= bound taken by the form, by exhaustive box search.
// With primitive_only, only gcd-1 vectors contribute.  Also fills
// `witness` (least vector under plain lexicographic order of the search)
// when non-null.
inline std::set<i64> box_image(const Mat& g, i64 bound, bool primitive_only) {
  size_t n = g.size();
  std::vector<i64> bnd(n);
  for (size_t i = 0; i < n; ++i) bnd[i] = coord_bound(g, i, bound);
  std::set<i64> out;
  Vec x(n, 0);
  // odometer over the box
  std::vector<i64> lo(n), hi(n);
  for (size_t i = 0; i < n; ++i) {
    lo[i] = -bnd[i];
    hi[i] = bnd[i];
    x[i] = lo[i];
  }
  while (true) {
    i64 q = eval(g, x);
    if (q >= 1 && q <= bound && (!primitive_only || vgcd(x) == 1))
      out.insert(q);
    size_t k = 0;
    while (k < n && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == n) break;
    ++x[k];
  }
  return out;
}

// Three-squares classifier: 0 = no representation, 1 = only trivial ones
// (some coordinate pair zero in every representation), 2 = nontrivial
// representation exists.
inline int three_squares_class(i64 n) {
  bool any = false;
  for (i64 a = 0; a * a <= n; ++a)
    for (i64 b = a; a * a + b * b <= n; ++b) {
      i64 rem = n - a * a - b * b;
      i64 c = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(rem)));
      while (c * c > rem) --c;
      while ((c + 1) * (c + 1) <= rem) ++c;
      if (c * c == rem && c >= b) {
        any = true;
        if (a * b != 0 || b * c != 0 || c * a != 0) return 2;
      }
    }
  return any ? 1 : 0;
}

inline std::vector<i64> squarefree_up_to(i64 bound) {
  std::vector<char> sf(static_cast<size_t>(bound) + 1, 1);
  for (i64 p = 2; p * p <= bound; ++p)
    for (i64 q = p * p; q <= bound; q += p * p) sf[static_cast<size_t>(q)] = 0;
  std::vector<i64> out;
  for (i64 v = 1; v <= bound; ++v)
    if (sf[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

// Smith invariants via determinantal divisors: d_k = gcd of all k x k
// minors, invariant k = d_k / d_{k-1}.  Exponential in rank; fine for the
// small matrices the tests feed it.
inline std::vector<i64> snf_divisors(const Mat& m) {
  size_t nr = m.size();
  size_t nc = m.empty() ? 0 : m[0].size();
  size_t n = nr < nc ? nr : nc;
  std::vector<i64> d(n + 1, 0);
  d[0] = 1;
  auto combinations = [](size_t total, size_t k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur;
    std::function<void(size_t)> gen = [&](size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (size_t i = start; i < total; ++i) {
        cur.push_back(i);
        gen(i + 1);
        cur.pop_back();
      }
    };
    gen(0);
    return out;
  };
  for (size_t k = 1; k <= n; ++k) {
    i64 g = 0;
    for (const auto& rs : combinations(nr, k))
      for (const auto& cs : combinations(nc, k)) {
        Mat sub(k, Vec(k));
        for (size_t i = 0; i < k; ++i)
          for (size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
        i64 det = cofactor_det(sub);
        g = std::gcd(g, det < 0 ? -det : det);
      }
    d[k] = g;
  }
  std::vector<i64> inv(n);
  for (size_t k = 1; k <= n; ++k) inv[k - 1] = d[k] / d[k - 1];
  return inv;
}

}  // namespace oracle
