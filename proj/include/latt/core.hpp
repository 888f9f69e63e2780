#pragma once

#include <utility>
#include <vector>

#include "latt/gram.hpp"

namespace latt {

/// Validates symmetry and decides positive-definiteness by exact
/// fraction-free elimination.  Throws NotSymmetric for a non-symmetric or
/// non-square input; never throws for an indefinite one (the flag is just
/// false).
Lattice validate(const Mat& gram);

/// Like validate but requires definiteness.
Lattice validate_definite(const Mat& gram);

/// Exact determinant by Bareiss elimination.
i64 determinant(const GramMatrix& g);

/// Leading principal minors m_1..m_n.
std::vector<i64> leading_minors(const GramMatrix& g);

/// True iff every diagonal entry is even (equivalent to evenness of the
/// whole lattice, since ||u+w|| = ||u|| + ||w|| + 2<u,w>).
bool is_even(const GramMatrix& g);

/// Integer kernel of the row functional x -> sum a_i x_i, as rows of a
/// saturated basis in Hermite normal form.  Requires a != 0.
Mat integer_kernel(const Vec& a);

/// Row-style Hermite normal form of the given basis rows (pivots positive,
/// entries above each pivot reduced into [0, pivot)).  Rows must be
/// linearly independent.
Mat hermite_rows(Mat rows);

/// Unimodular completion: returns an n x n matrix with determinant +-1
/// whose first row is the primitive vector o.  When o is a standard basis
/// vector e_k the remaining rows are the other standard basis vectors in
/// order.
Mat unimodular_completion(const Vec& o);

struct Complement {
  Mat basis;        // rows: integer basis of the saturated sublattice v^perp
  GramMatrix gram;  // Gram matrix of that basis
};

/// Orthogonal complement of a nonzero vector v, via the integer kernel of
/// the functional <v,->.
Complement orthogonal_complement(const Lattice& l, const Vec& v);

/// Smith normal form invariant factors of a square nonsingular matrix.
DiscriminantGroup smith_normal_form(const Mat& m);

/// All distinguished elements (norm 3, even complement), one per +- pair
/// with canonical sign, sorted.
std::vector<DistinguishedElement> find_distinguished(const Lattice& l);

/// disc(Span(o, v)) = 3 ||v|| - <o,v>^2 for a norm-3 element o.
i64 span2_disc(const Lattice& l, const Vec& o, const Vec& v);

}  // namespace latt
