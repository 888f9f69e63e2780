#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "latt/core.hpp"
#include "latt/rational.hpp"

namespace latt {

/// Exact rational Cholesky data: Q(x) = sum_i diag[i] * (x_i + sum_{j>i}
/// upper[i][j] x_j)^2, reproduced exactly in rational arithmetic.
struct RationalCholesky {
  std::vector<Rat> diag;
  std::vector<std::vector<Rat>> upper;
};

struct ImageReport {
  i64 bound = 0;
  std::vector<i64> values;                    // sorted, distinct
  std::optional<std::map<i64, Vec>> witnesses;  // value -> least witness
};

/// Exact decomposition; throws NotPositiveDefiniteError (with the 1-based
/// failing pivot) unless the matrix is positive-definite.
RationalCholesky cholesky(const GramMatrix& g);

/// Complete enumeration of all x with 0 < Q(x) <= budget, one callback per
/// canonical-sign vector.  Return false from the callback to stop early.
/// Exact integer arithmetic throughout (scaled fraction-free Cholesky).
void enumerate_up_to(const GramMatrix& g, i64 budget,
                     const std::function<bool(const Vec&, i64)>& visit);

/// All solutions of q(v) = n, one per +- pair, canonical sign, sorted.
std::vector<Vec> vectors_with_norm(const Lattice& l, i64 n);

/// Minimal nonzero norm.
i64 min_norm(const Lattice& l);

/// Exact represented set up to the bound; with primitive_only, only gcd-1
/// witnesses count.  Witness map filled on request, least witness per value.
ImageReport image_up_to(const Lattice& l, i64 bound, bool primitive_only,
                        bool with_witnesses = false);

/// Least primitive witness of q(v) = n, or absent.
std::optional<Vec> represents_primitively(const Lattice& l, i64 n);

}  // namespace latt
