#include "latt/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace latt {

namespace {

// Fraction-free Cholesky data.  With leading principal minors m_0..m_{n-1}
// (m_{-1} = 1) and the Bareiss upper-triangular rows U (U[k][k] = m_k),
//
//   q(x) = sum_k (U[k] . x)^2 / (m_{k-1} m_k),
//
// all exactly over the integers after scaling by D = lcm_k(m_{k-1} m_k).
struct ScaledCholesky {
  int n = 0;
  std::vector<std::vector<i128>> rows;  // U
  std::vector<i128> minors;             // m_k > 0
  std::vector<i128> weight;             // D / (m_{k-1} m_k)
  i128 scale = 1;                       // D
};

i128 lcm128(i128 a, i128 b) {
  u128 x = static_cast<u128>(a), y = static_cast<u128>(b);
  u128 g = x;
  u128 t = y;
  while (t != 0) {
    u128 r = g % t;
    g = t;
    t = r;
  }
  return chk_mul128(a / static_cast<i128>(g), b);
}

ScaledCholesky scaled_cholesky(const GramMatrix& g) {
  int n = g.rank;
  ScaledCholesky sc;
  sc.n = n;
  sc.rows.assign(n, std::vector<i128>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sc.rows[i][j] = g.entries[i][j];
  i128 prev = 1;
  for (int k = 0; k < n; ++k) {
    if (sc.rows[k][k] <= 0) throw NotPositiveDefiniteError(k + 1);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        i128 t = chk_sub128(chk_mul128(sc.rows[k][k], sc.rows[i][j]),
                            chk_mul128(sc.rows[i][k], sc.rows[k][j]));
        sc.rows[i][j] = t / prev;
      }
      sc.rows[i][k] = 0;
    }
    prev = sc.rows[k][k];
  }
  sc.minors.resize(n);
  for (int k = 0; k < n; ++k) sc.minors[k] = sc.rows[k][k];
  i128 d = 1;
  for (int k = 0; k < n; ++k) {
    i128 denom = chk_mul128(k == 0 ? 1 : sc.minors[k - 1], sc.minors[k]);
    d = lcm128(d, denom);
  }
  sc.scale = d;
  sc.weight.resize(n);
  for (int k = 0; k < n; ++k) {
    i128 denom = chk_mul128(k == 0 ? 1 : sc.minors[k - 1], sc.minors[k]);
    sc.weight[k] = d / denom;
  }
  return sc;
}

struct Enumerator {
  const ScaledCholesky& sc;
  i64 budget;
  const std::function<bool(const Vec&, i64)>& visit;
  Vec coords;
  i128 total;  // budget * scale
  bool stopped = false;

  Enumerator(const ScaledCholesky& s, i64 b,
             const std::function<bool(const Vec&, i64)>& v)
      : sc(s), budget(b), visit(v), coords(s.n, 0) {
    total = chk_mul128(i128(b), sc.scale);
  }

  void run() {
    if (budget < 0) return;
    descend(sc.n - 1, total);
  }

  // Level k assigns x_k; remaining is the scaled budget left for levels
  // k..0.  The linear form at level k is w = m_k x_k + C with
  // C = sum_{j>k} U[k][j] x_j.
  void descend(int k, i128 remaining) {
    if (stopped) return;
    if (k < 0) {
      i128 used = total - remaining;
      // q(x) is an integer, so `used` is an exact multiple of the scale.
      i64 q = static_cast<i64>(used / sc.scale);
      if (q > 0) {
        // One representative per +- pair: first nonzero coordinate positive.
        for (i64 c : coords) {
          if (c < 0) return;
          if (c > 0) break;
        }
        if (!visit(coords, q)) stopped = true;
      }
      return;
    }
    i128 c = 0;
    for (int j = k + 1; j < sc.n; ++j)
      c = chk_add128(c, chk_mul128(sc.rows[k][j], coords[j]));
    i128 m = sc.minors[k];
    i128 cap = remaining / sc.weight[k];
    i128 s = isqrt128(cap);
    i64 lo = narrow(ceil_div(-s - c, m));
    i64 hi = narrow(floor_div(s - c, m));
    for (i64 x = lo; x <= hi && !stopped; ++x) {
      i128 w = chk_add128(chk_mul128(m, x), c);
      i128 term = chk_mul128(sc.weight[k], chk_mul128(w, w));
      coords[k] = x;
      descend(k - 1, remaining - term);
    }
    coords[k] = 0;
  }
};

void require_definite(const Lattice& l) {
  if (!l.definite)
    throw Error(ErrorCode::NotPositiveDefinite,
                "operation requires a positive-definite lattice");
}

}  // namespace

RationalCholesky cholesky(const GramMatrix& g) {
  for (int i = 0; i < g.rank; ++i)
    for (int j = i + 1; j < g.rank; ++j)
      if (g.entries[i][j] != g.entries[j][i])
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  ScaledCholesky sc = scaled_cholesky(g);
  RationalCholesky rc;
  rc.diag.resize(g.rank);
  rc.upper.assign(g.rank, std::vector<Rat>(g.rank, Rat(0)));
  for (int k = 0; k < g.rank; ++k) {
    i128 mprev = k == 0 ? 1 : sc.minors[k - 1];
    rc.diag[k] = Rat::make128(sc.minors[k], mprev);
    for (int j = k + 1; j < g.rank; ++j)
      rc.upper[k][j] = Rat::make128(sc.rows[k][j], sc.minors[k]);
  }
  return rc;
}

void enumerate_up_to(const GramMatrix& g, i64 budget,
                     const std::function<bool(const Vec&, i64)>& visit) {
  ScaledCholesky sc = scaled_cholesky(g);
  Enumerator e(sc, budget, visit);
  e.run();
}

std::vector<Vec> vectors_with_norm(const Lattice& l, i64 n) {
  require_definite(l);
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative norm");
  std::vector<Vec> out;
  if (n == 0) return out;
  enumerate_up_to(l.gram, n, [&](const Vec& v, i64 q) {
    if (q == n) {
      // Re-evaluate through the integer Gram, independent of the
      // decomposition path.
      if (norm(l.gram, v) != n)
        throw Error(ErrorCode::InternalContradiction,
                    "enumeration value mismatch");
      out.push_back(v);
    }
    return true;
  });
  std::sort(out.begin(), out.end(), vec_less);
  return out;
}

i64 min_norm(const Lattice& l) {
  require_definite(l);
  i64 cap = l.gram.entries[0][0];
  for (int i = 1; i < l.gram.rank; ++i)
    cap = std::min(cap, l.gram.entries[i][i]);
  i64 best = cap;
  enumerate_up_to(l.gram, cap, [&](const Vec&, i64 q) {
    best = std::min(best, q);
    return best > 1;  // norm 1 is already minimal
  });
  return best;
}

ImageReport image_up_to(const Lattice& l, i64 bound, bool primitive_only,
                        bool with_witnesses) {
  require_definite(l);
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "bound must be >= 1");
  std::vector<unsigned char> seen(static_cast<size_t>(bound) + 1, 0);
  std::map<i64, Vec> wit;
  enumerate_up_to(l.gram, bound, [&](const Vec& v, i64 q) {
    if (primitive_only && !is_primitive(v)) return true;
    seen[static_cast<size_t>(q)] = 1;
    if (with_witnesses) {
      auto it = wit.find(q);
      if (it == wit.end() || vec_less(v, it->second)) wit[q] = v;
    }
    return true;
  });
  ImageReport r;
  r.bound = bound;
  for (i64 q = 1; q <= bound; ++q)
    if (seen[static_cast<size_t>(q)]) r.values.push_back(q);
  if (with_witnesses) {
    for (auto& [q, v] : wit) {
      if (norm(l.gram, v) != q)
        throw Error(ErrorCode::InternalContradiction, "witness value mismatch");
    }
    r.witnesses = std::move(wit);
  }
  return r;
}

std::optional<Vec> represents_primitively(const Lattice& l, i64 n) {
  require_definite(l);
  if (n < 1) throw Error(ErrorCode::InvalidInput, "target must be >= 1");
  std::optional<Vec> best;
  enumerate_up_to(l.gram, n, [&](const Vec& v, i64 q) {
    if (q == n && is_primitive(v) && (!best || vec_less(v, *best))) best = v;
    return true;
  });
  return best;
}

}  // namespace latt
