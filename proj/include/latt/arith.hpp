#pragma once

#include <optional>
#include <vector>

#include "latt/enumerate.hpp"

namespace latt {

struct ThreeSquares {
  i64 a = 0, b = 0, c = 0;
  bool nontrivial() const { return a * b != 0 || b * c != 0 || c * a != 0; }
};

struct TwoSquares {
  i64 x = 0, y = 0;
};

struct F0Solution {
  i64 x = 0, y = 0, z = 0, u = 0;
  i64 value = 0;
};

/// Some decomposition n = a^2+b^2+c^2, or absent iff n = 4^k(8m+7).
std::optional<ThreeSquares> three_squares(i64 n);

/// Nontrivial decomposition (at most one coordinate zero).  Throws
/// OnlyTrivial for n = 4^k and NotRepresentable for n = 4^k(8m+7).
ThreeSquares nontrivial_three_squares(i64 n);

/// Decomposition n = x^2+y^2 per Fermat's criterion, or absent.
std::optional<TwoSquares> two_squares(i64 n);

/// (x,y) with 5 | x^2+y^2 maps to a solution of (x^2+y^2)/5.
TwoSquares lagrange5_down(i64 x, i64 y);

/// (x,y) maps to (2x+y, x-2y) of value 5(x^2+y^2).
TwoSquares lagrange5_up(i64 x, i64 y);

/// Solution of x^2+y^2 = 5n with x^2 = 1 and y^2 = 4 (mod 5).  Throws
/// NotRepresentable when 5n is not a sum of two squares or n = 0.
TwoSquares lower_five_height(i64 n);

/// Given x^2+5y^2 = v, returns a solution of the same value with both
/// coordinates nonzero mod 3, iterating the 3-height-lowering identity.
/// Throws NotApplicable when no step applies and a coordinate is 0 mod 3.
std::pair<i64, i64> mod3_adjust(i64 x, i64 y);

/// Congruence invariants shared by any two solutions of x^2+5y^2 = v:
/// x1 = y1 = x2 = y2 (mod 2) and x1 = +-x2 (mod 5).  Throws ValueMismatch
/// if the two pairs have different values.
bool mod3_invariants_check(std::pair<i64, i64> s1, std::pair<i64, i64> s2);

/// Constructive primitive representation of d in H by f0, dispatching on
/// d mod 24 per the case table; first coordinate in {0,+-1,+-2,+-3,+-6}.
/// Throws NotInHassett for d outside H; InternalContradiction must never
/// fire and firing is a bug certificate.
F0Solution solve_hassett_proof(i64 d);

/// Least primitive representation of d in H by f0 via enumeration.
F0Solution solve_hassett_enum(i64 d);

/// All square-free n <= bound not integrally represented by the rank-3
/// form F.  Integral proxy for the rational-representability statement.
std::vector<i64> ternary_missed_squarefree(const Lattice& f, i64 bound);

}  // namespace latt
