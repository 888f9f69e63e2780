#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latt/enumerate.hpp"

namespace latt {

/// d in H iff d > 6 and d = 0 or 2 (mod 6).
bool in_hassett(i64 d);

/// H intersected with [8, bound], ascending.
std::vector<i64> hassett_range(i64 bound);

/// The rank-5 lattice whose distinguished-element quotient is the rank-4
/// form with primitive image H.
GramMatrix m0_gram();

/// The rank-4 quotient Gram of m0: [[8,6,0,6],[6,18,6,0],[0,6,12,0],[6,0,0,12]].
GramMatrix dm0_gram();

/// f0(x,y,z,u) = 8x^2+12xy+18y^2+12yz+12z^2+12u^2+12xu.
i64 f0(i64 x, i64 y, i64 z, i64 u);

/// Quotient M/Zo with norm disc(Span(o,v)); the polarized pairing is
/// B(u,w) = 3<u,w> - <o,u><o,w>.  Basis from a unimodular completion of o,
/// so a standard-basis o reproduces the remaining basis vectors in order.
/// Throws NotDistinguished unless ||o|| = 3 and o-perp is even.
Lattice dm_quotient(const Lattice& l, const Vec& o);

struct LiftResult {
  Lattice lattice;            // rank n+1, distinguished first basis vector
  DistinguishedElement distinguished;
  int parity_flag = 0;        // 0 if f(v1) = 0 (mod 6), 1 if f(v1) = 2 (mod 6)
};

/// Builds a rank n+1 lattice M with distinguished element o such that
/// f(c) = 3||c||_M - <o,c>^2 and dm_quotient(M, o) reproduces F entrywise.
/// Throws NotSupportedInHError with a witness whenever a normalization or
/// divisibility step constructively exhibits a value outside H.
LiftResult lift_form(const Lattice& f);

/// K_{6m+2} = [[3,1],[1,2m+1]], K_{6m} = [[3,0],[0,2m]] with m = d/6.
Lattice k_lattice(i64 d);

struct YangYuReport {
  std::optional<Vec> has_distinguished;
  std::vector<Vec> roots;
  int rank = 0;
  int l = 0;
  bool passes = false;
  int codimension = 0;  // rank - 1 when passes
};

/// Admissibility check: distinguished element exists, no roots, rank + l <= 20.
YangYuReport yang_yu_check(const Lattice& l);

/// Least primitive class of D(l,o) with norm d, or absent.
std::optional<Vec> cm_in_cd(const Lattice& l, const Vec& o, i64 d);

enum class ZMode { Enumeration, Proof };

struct ZCertificate {
  std::string lattice_digest;
  i64 bound = 0;
  ZMode mode = ZMode::Enumeration;
  std::map<i64, Vec> witnesses;  // d -> primitive quotient vector of norm d
};

/// Primitive witness in D(l,o) for every d in H up to the bound.  Proof
/// mode requires the quotient Gram to equal dm0_gram() exactly and derives
/// witnesses from the constructive case solver.  Throws
/// MissingDiscriminantsError listing every unrepresented d.
ZCertificate verify_z_membership(const Lattice& l, const Vec& o, i64 bound,
                                 ZMode mode);

}  // namespace latt
