#include "latt/core.hpp"

#include <algorithm>
#include <functional>

#include "latt/enumerate.hpp"

namespace latt {

namespace {

GramMatrix make_gram(const Mat& m) {
  GramMatrix g;
  g.rank = static_cast<int>(m.size());
  g.entries = m;
  return g;
}

void check_symmetric(const Mat& m) {
  size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty matrix");
  for (const auto& row : m) {
    if (row.size() != n)
      throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i])
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
}

// Bareiss fraction-free elimination; returns the upper-triangular working
// matrix whose diagonal holds the leading principal minors.  Exact division
// at every step.
std::vector<std::vector<i128>> bareiss(const GramMatrix& g) {
  int n = g.rank;
  std::vector<std::vector<i128>> b(n, std::vector<i128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = g.entries[i][j];
  i128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      // Zero pivot: the leading minor vanishes, handled by the caller.
      return b;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        i128 t = chk_sub128(chk_mul128(b[k][k], b[i][j]),
                            chk_mul128(b[i][k], b[k][j]));
        b[i][j] = t / prev;
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  return b;
}

}  // namespace

Lattice validate(const Mat& gram) {
  check_symmetric(gram);
  Lattice l;
  l.gram = make_gram(gram);
  auto minors = leading_minors(l.gram);
  l.definite = std::all_of(minors.begin(), minors.end(),
                           [](i64 m) { return m > 0; });
  return l;
}

Lattice validate_definite(const Mat& gram) {
  Lattice l = validate(gram);
  if (!l.definite) {
    auto minors = leading_minors(l.gram);
    int pivot = 1;
    for (size_t i = 0; i < minors.size(); ++i) {
      if (minors[i] <= 0) {
        pivot = static_cast<int>(i) + 1;
        break;
      }
    }
    throw NotPositiveDefiniteError(pivot);
  }
  return l;
}

std::vector<i64> leading_minors(const GramMatrix& g) {
  auto b = bareiss(g);
  std::vector<i64> minors(g.rank);
  for (int k = 0; k < g.rank; ++k) minors[k] = narrow(b[k][k]);
  // A zero pivot aborts elimination early; the remaining minors are then
  // computed directly by recursing on leading submatrices.
  for (int k = 0; k < g.rank; ++k) {
    if (minors[k] == 0 && k + 1 < g.rank) {
      for (int m = k + 1; m < g.rank; ++m) {
        GramMatrix sub;
        sub.rank = m + 1;
        sub.entries.assign(m + 1, Vec(m + 1));
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j <= m; ++j) sub.entries[i][j] = g.entries[i][j];
        minors[m] = determinant(sub);
      }
      break;
    }
  }
  return minors;
}

i64 determinant(const GramMatrix& g) {
  int n = g.rank;
  // Fraction-free elimination with row pivoting (zero pivots allowed).
  std::vector<std::vector<i128>> b(n, std::vector<i128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = g.entries[i][j];
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (b[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(b[k], b[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        i128 t = chk_sub128(chk_mul128(b[k][k], b[i][j]),
                            chk_mul128(b[i][k], b[k][j]));
        b[i][j] = t / prev;
      }
      b[i][k] = 0;
    }
    prev = b[k][k];
  }
  return narrow(sign * b[n - 1][n - 1]);
}

bool is_even(const GramMatrix& g) {
  for (int i = 0; i < g.rank; ++i)
    if (g.entries[i][i] % 2 != 0) return false;
  return true;
}

Mat hermite_rows(Mat rows) {
  if (rows.empty()) return rows;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    // Reduce column c below row r to a single pivot by gcd row operations.
    while (true) {
      size_t best = r;
      i64 bestabs = 0;
      for (size_t i = r; i < rows.size(); ++i) {
        i64 a = rows[i][c] < 0 ? -rows[i][c] : rows[i][c];
        if (a != 0 && (bestabs == 0 || a < bestabs)) {
          bestabs = a;
          best = i;
        }
      }
      if (bestabs == 0) break;
      std::swap(rows[r], rows[best]);
      if (rows[r][c] < 0)
        for (i64& x : rows[r]) x = chk_sub(0, x);
      bool done = true;
      for (size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        i64 q = rows[i][c] / rows[r][c];
        for (size_t j = 0; j < ncols; ++j)
          rows[i][j] = chk_sub(rows[i][j], chk_mul(q, rows[r][j]));
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] != 0) {
      // Reduce entries above the pivot into [0, pivot).
      for (size_t i = 0; i < r; ++i) {
        i64 q = static_cast<i64>(floor_div(rows[i][c], rows[r][c]));
        if (q != 0)
          for (size_t j = 0; j < ncols; ++j)
            rows[i][j] = chk_sub(rows[i][j], chk_mul(q, rows[r][j]));
      }
      ++r;
    }
  }
  return rows;
}

Mat integer_kernel(const Vec& a) {
  size_t n = a.size();
  if (is_zero(a))
    throw Error(ErrorCode::InvalidInput, "kernel of the zero functional");
  // Rows e_i carrying values a_i; gcd-combine until one row holds the gcd.
  Mat rows(n, Vec(n, 0));
  Vec val = a;
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  size_t pivot = 0;
  while (val[pivot] == 0) ++pivot;
  for (size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    // Euclid on (val[pivot], val[j]); the gcd ends in the pivot row and
    // row j becomes a kernel row.
    while (val[j] != 0) {
      i64 q = val[pivot] / val[j];
      if (q != 0) {
        val[pivot] = chk_sub(val[pivot], chk_mul(q, val[j]));
        for (size_t c = 0; c < n; ++c)
          rows[pivot][c] = chk_sub(rows[pivot][c], chk_mul(q, rows[j][c]));
      }
      std::swap(val[pivot], val[j]);
      std::swap(rows[pivot], rows[j]);
    }
  }
  Mat kernel;
  for (size_t i = 0; i < n; ++i)
    if (i != pivot) kernel.push_back(rows[i]);
  return hermite_rows(std::move(kernel));
}

Mat unimodular_completion(const Vec& o) {
  size_t n = o.size();
  if (content(o) != 1)
    throw Error(ErrorCode::InvalidInput, "completion of a non-primitive vector");
  // Column-reduce o to e_1 while tracking the inverse transform V; rows of
  // V are then a basis of Z^n whose first row is o.
  Vec c = o;
  Mat v(n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1;
  auto col_add = [&](size_t dst, size_t src, i64 t) {
    // c[dst] += t*c[src]  <=>  V.row(src) -= t*V.row(dst)
    c[dst] = chk_add(c[dst], chk_mul(t, c[src]));
    for (size_t k = 0; k < n; ++k)
      v[src][k] = chk_sub(v[src][k], chk_mul(t, v[dst][k]));
  };
  auto col_swap = [&](size_t i, size_t j) {
    std::swap(c[i], c[j]);
    std::swap(v[i], v[j]);
  };
  for (size_t j = 1; j < n; ++j) {
    while (c[j] != 0) {
      if (c[0] != 0) {
        i64 q = c[0] / c[j];
        if (q != 0) col_add(0, j, -q);
        if (c[0] == 0) {
          col_swap(0, j);
          break;
        }
      }
      col_swap(0, j);
    }
  }
  if (c[0] < 0) {
    c[0] = -c[0];
    for (i64& x : v[0]) x = -x;
  }
  return v;
}

Complement orthogonal_complement(const Lattice& l, const Vec& v) {
  if (is_zero(v))
    throw Error(ErrorCode::InvalidInput, "complement of the zero vector");
  int n = l.gram.rank;
  Vec a(n);
  for (int i = 0; i < n; ++i) {
    i128 s = 0;
    for (int j = 0; j < n; ++j)
      s = chk_add128(s, chk_mul128(l.gram.entries[i][j], v[j]));
    a[i] = narrow(s);
  }
  Complement comp;
  comp.basis = integer_kernel(a);
  int m = static_cast<int>(comp.basis.size());
  comp.gram.rank = m;
  comp.gram.entries.assign(m, Vec(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      comp.gram.entries[i][j] = pairing(l.gram, comp.basis[i], comp.basis[j]);
  return comp;
}

DiscriminantGroup smith_normal_form(const Mat& m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw Error(ErrorCode::InvalidInput, "SNF requires a square matrix");
  Mat a = m;
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      size_t pi = n, pj = n;
      i64 best = 0;
      for (size_t i = t; i < n; ++i)
        for (size_t j = t; j < n; ++j) {
          i64 v = a[i][j] < 0 ? -a[i][j] : a[i][j];
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      if (pi == n) throw Error(ErrorCode::Singular, "singular matrix in SNF");
      std::swap(a[t], a[pi]);
      for (size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
      if (a[t][t] < 0)
        for (size_t j = 0; j < n; ++j) a[t][j] = chk_sub(0, a[t][j]);
      bool clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        i64 q = a[i][t] / a[t][t];
        for (size_t j = t; j < n; ++j)
          a[i][j] = chk_sub(a[i][j], chk_mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        i64 q = a[t][j] / a[t][t];
        for (size_t i = t; i < n; ++i)
          a[i][j] = chk_sub(a[i][j], chk_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry.
      for (size_t i = t + 1; i < n && clean; ++i)
        for (size_t j = t + 1; j < n && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (size_t c = t; c < n; ++c)
              a[t][c] = chk_add(a[t][c], a[i][c]);
            clean = false;
          }
      if (clean) break;
    }
  }
  DiscriminantGroup dg;
  for (size_t i = 0; i < n; ++i)
    dg.invariant_factors.push_back(a[i][i] < 0 ? -a[i][i] : a[i][i]);
  return dg;
}

std::vector<DistinguishedElement> find_distinguished(const Lattice& l) {
  std::vector<DistinguishedElement> out;
  for (const Vec& v : vectors_with_norm(l, 3)) {
    if (is_even(orthogonal_complement(l, v).gram)) out.push_back({v});
  }
  return out;
}

i64 span2_disc(const Lattice& l, const Vec& o, const Vec& v) {
  if (norm(l.gram, o) != 3)
    throw Error(ErrorCode::NotDistinguished, "element does not have norm 3");
  i64 p = pairing(l.gram, o, v);
  return chk_sub(chk_mul(3, norm(l.gram, v)), chk_mul(p, p));
}

}  // namespace latt
