#include "latt/hassett.hpp"

#include <algorithm>

#include "latt/arith.hpp"
#include "latt/digest.hpp"
#include "latt/json_io.hpp"

namespace latt {

bool in_hassett(i64 d) {
  if (d <= 6) return false;
  i64 r = d % 6;
  return r == 0 || r == 2;
}

std::vector<i64> hassett_range(i64 bound) {
  std::vector<i64> out;
  for (i64 d = 8; d <= bound; ++d)
    if (in_hassett(d)) out.push_back(d);
  return out;
}

GramMatrix m0_gram() {
  GramMatrix g;
  g.rank = 5;
  g.entries = {{3, 1, 0, 0, 0},
               {1, 3, 2, 0, 2},
               {0, 2, 6, 2, 0},
               {0, 0, 2, 4, 0},
               {0, 2, 0, 0, 4}};
  return g;
}

GramMatrix dm0_gram() {
  GramMatrix g;
  g.rank = 4;
  g.entries = {{8, 6, 0, 6}, {6, 18, 6, 0}, {0, 6, 12, 0}, {6, 0, 0, 12}};
  return g;
}

i64 f0(i64 x, i64 y, i64 z, i64 u) {
  return 8 * x * x + 12 * x * y + 18 * y * y + 12 * y * z + 12 * z * z +
         12 * u * u + 12 * x * u;
}

namespace {

void require_distinguished(const Lattice& l, const Vec& o) {
  if (norm(l.gram, o) != 3)
    throw Error(ErrorCode::NotDistinguished, "element does not have norm 3");
  if (!is_even(orthogonal_complement(l, o).gram))
    throw Error(ErrorCode::NotDistinguished,
                "orthogonal complement is not even");
}

}  // namespace

Lattice dm_quotient(const Lattice& l, const Vec& o) {
  require_distinguished(l, o);
  // ||o|| = 3 is squarefree, so o is automatically primitive.
  Mat basis = unimodular_completion(o);
  int n = l.gram.rank;
  Mat q(n - 1, Vec(n - 1));
  for (int i = 1; i < n; ++i) {
    i64 oi = pairing(l.gram, o, basis[i]);
    for (int j = 1; j < n; ++j) {
      i64 oj = pairing(l.gram, o, basis[j]);
      q[i - 1][j - 1] =
          chk_sub(chk_mul(3, pairing(l.gram, basis[i], basis[j])),
                  chk_mul(oi, oj));
    }
  }
  return validate(q);
}

LiftResult lift_form(const Lattice& f) {
  if (!f.definite)
    throw Error(ErrorCode::NotPositiveDefinite,
                "lift requires a positive-definite form");
  int n = f.gram.rank;
  // Working basis of the form lattice, tracked as integer combinations of
  // the original basis; norms and pairings are evaluated through F.
  Mat basis(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  auto value_of = [&](const Vec& v) { return norm(f.gram, v); };
  auto reject = [&](const Vec& w) -> void {
    throw NotSupportedInHError(w, value_of(w));
  };
  for (int i = 0; i < n; ++i) {
    i64 d = value_of(basis[i]);
    i64 r = ((d % 6) + 6) % 6;
    if (r != 0 && r != 2) reject(basis[i]);
  }
  // Normalize so every basis norm but the first is 0 mod 6: replace v_k by
  // v_{k-1} +- v_k (one sign works, since the other combination would have
  // norm 4 mod 6, outside H), or swap when the predecessor is already 0.
  for (int k = n - 1; k >= 1; --k) {
    if (value_of(basis[k]) % 6 != 2) continue;
    if (value_of(basis[k - 1]) % 6 == 0) {
      std::swap(basis[k], basis[k - 1]);
      continue;
    }
    Vec plus(n), minus(n);
    for (int c = 0; c < n; ++c) {
      plus[c] = chk_add(basis[k - 1][c], basis[k][c]);
      minus[c] = chk_sub(basis[k - 1][c], basis[k][c]);
    }
    i64 vp = ((value_of(plus) % 6) + 6) % 6;
    i64 vm = ((value_of(minus) % 6) + 6) % 6;
    if (vp == 0) {
      basis[k] = plus;
    } else if (vm == 0) {
      basis[k] = minus;
    } else {
      reject(vp == 4 ? plus : minus);
    }
  }
  // All mixed pairings must be 0 mod 3; a violation exhibits a combination
  // with norm 4 mod 6.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      i64 p = pairing(f.gram, basis[i], basis[j]);
      if (((p % 3) + 3) % 3 == 0) continue;
      Vec plus(n), minus(n);
      for (int c = 0; c < n; ++c) {
        plus[c] = chk_add(basis[i][c], basis[j][c]);
        minus[c] = chk_sub(basis[i][c], basis[j][c]);
      }
      i64 rp = value_of(plus) % 6;
      i64 rm = value_of(minus) % 6;
      if (rp != 0 && rp != 2) reject(plus);
      if (rm != 0 && rm != 2) reject(minus);
      throw Error(ErrorCode::InternalContradiction,
                  "nonzero mod-3 pairing with both combinations in H");
    }
  }
  i64 first = value_of(basis[0]);
  int parity = first % 6 == 2 ? 1 : 0;
  // Gram of the lifted lattice on the normalized basis {o, v_1', ..., v_n'}.
  Mat m(n + 1, Vec(n + 1, 0));
  m[0][0] = 3;
  m[0][1] = parity;
  m[1][0] = parity;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      i64 p = pairing(f.gram, basis[i - 1], basis[j - 1]);
      if (i == 1 && j == 1) p = chk_add(p, parity);
      if (p % 3 != 0)
        throw Error(ErrorCode::InternalContradiction,
                    "lift template entry not divisible by 3");
      m[i][j] = p / 3;
    }
  }
  // Change back to the original basis in the quotient directions so that
  // dm_quotient round-trips to F entrywise.  The normalization transform T
  // (normalized = T * original) is unimodular; apply T^{-1} on the v'
  // block.  T is `basis` itself.
  Mat tinv = [&] {
    // Exact inverse of a unimodular integer matrix via adjugate.
    GramMatrix t;
    t.rank = n;
    t.entries = basis;
    i64 det = determinant(t);
    if (det != 1 && det != -1)
      throw Error(ErrorCode::InternalContradiction,
                  "basis transform is not unimodular");
    Mat inv(n, Vec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GramMatrix sub;
        sub.rank = n - 1;
        for (int r = 0; r < n; ++r) {
          if (r == j) continue;
          Vec row;
          for (int c = 0; c < n; ++c)
            if (c != i) row.push_back(basis[r][c]);
          sub.entries.push_back(row);
        }
        i64 cof = n == 1 ? 1 : determinant(sub);
        if ((i + j) % 2 != 0) cof = -cof;
        inv[i][j] = det == 1 ? cof : -cof;
      }
    return inv;
  }();
  GramMatrix mm;
  mm.rank = n + 1;
  mm.entries = m;
  Mat w(n + 1, Vec(n + 1, 0));
  w[0][0] = 1;  // o stays
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) w[i][j] = tinv[i - 1][j - 1];
  Mat out(n + 1, Vec(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out[i][j] = pairing(mm, w[i], w[j]);
  LiftResult res;
  res.lattice = validate(out);
  if (!res.lattice.definite)
    throw Error(ErrorCode::InternalContradiction, "lift is not definite");
  Vec o(n + 1, 0);
  o[0] = 1;
  res.distinguished = {o};
  res.parity_flag = parity;
  require_distinguished(res.lattice, o);
  return res;
}

Lattice k_lattice(i64 d) {
  if (!in_hassett(d))
    throw Error(ErrorCode::NotInHassett,
                std::to_string(d) + " is not a Hassett discriminant");
  i64 m = d / 6;
  Mat g;
  if (d % 6 == 2)
    g = {{3, 1}, {1, 2 * m + 1}};
  else
    g = {{3, 0}, {0, 2 * m}};
  return validate_definite(g);
}

YangYuReport yang_yu_check(const Lattice& l) {
  int r = l.gram.rank;
  if (r < 2 || r > 21)
    throw Error(ErrorCode::RankOutOfRange, "rank must be in [2, 21]");
  YangYuReport rep;
  rep.rank = r;
  auto dist = find_distinguished(l);
  if (!dist.empty()) rep.has_distinguished = dist.front().vector;
  rep.roots = vectors_with_norm(l, 2);
  rep.l = smith_normal_form(l.gram.entries).l();
  rep.passes = rep.has_distinguished.has_value() && rep.roots.empty() &&
               rep.rank + rep.l <= 20;
  rep.codimension = rep.passes ? r - 1 : 0;
  return rep;
}

std::optional<Vec> cm_in_cd(const Lattice& l, const Vec& o, i64 d) {
  if (!in_hassett(d))
    throw Error(ErrorCode::NotInHassett,
                std::to_string(d) + " is not a Hassett discriminant");
  return represents_primitively(dm_quotient(l, o), d);
}

ZCertificate verify_z_membership(const Lattice& l, const Vec& o, i64 bound,
                                 ZMode mode) {
  if (bound < 8) throw Error(ErrorCode::InvalidInput, "bound must be >= 8");
  Lattice dm = dm_quotient(l, o);
  ZCertificate cert;
  cert.lattice_digest = sha256_hex(canonical_dump(gram_to_json(l.gram)));
  cert.bound = bound;
  cert.mode = mode;
  std::vector<i64> missing;
  if (mode == ZMode::Proof) {
    if (dm.gram.entries != dm0_gram().entries)
      throw Error(ErrorCode::InvalidInput,
                  "proof mode requires the quotient to be the reference "
                  "rank-4 form");
    for (i64 d : hassett_range(bound)) {
      F0Solution s = solve_hassett_proof(d);
      Vec v{s.x, s.y, s.z, s.u};
      if (s.value != d || !is_primitive(v) || norm(dm.gram, v) != d)
        throw Error(ErrorCode::InternalContradiction,
                    "proof witness failed verification");
      cert.witnesses[d] = canonical_sign(v);
    }
    return cert;
  }
  ImageReport rep = image_up_to(dm, bound, /*primitive_only=*/true,
                                /*with_witnesses=*/true);
  for (i64 d : hassett_range(bound)) {
    auto it = rep.witnesses->find(d);
    if (it == rep.witnesses->end()) {
      missing.push_back(d);
    } else {
      cert.witnesses[d] = it->second;
    }
  }
  if (!missing.empty()) throw MissingDiscriminantsError(std::move(missing));
  return cert;
}

}  // namespace latt
