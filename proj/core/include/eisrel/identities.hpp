#pragma once

#include "eisrel/polynomial.hpp"
#include "eisrel/relation.hpp"

namespace eisrel {

/// Applies (d/dx - d/dy)^{r-1} (d/dy - d/dz)^{s-1} (d/dz - d/dx)^{t-1} to a
/// Laurent polynomial in independent x, y, z. The operator is expanded
/// multinomially into pure partial derivatives, which act on monomials in
/// closed form (falling factorials), so the result is exact.
LaurentPoly3 apply_difference_operator(const Triple& t, const LaurentPoly3& f);

/// Closed-form expansions of the difference operator applied to 1/(xy),
/// 1/(yz) and 1/(zx); each is (r-1)!(s-1)!(t-1)! times a single binomial
/// sum over pole splittings of the combined weight.
LaurentPoly3 difference_operator_expansion_xy(const Triple& t);
LaurentPoly3 difference_operator_expansion_yz(const Triple& t);
LaurentPoly3 difference_operator_expansion_zx(const Triple& t);

struct ExpansionCheck {
    bool xy;
    bool yz;
    bool zx;
    bool all() const { return xy && yz && zx; }
};

/// Compares apply_difference_operator on the three basic pole products
/// against the closed-form expansions, exactly.
ExpansionCheck check_difference_operator_expansions(const Triple& t);

/// Substitutes y = -(x + z) and multiplies by (x z (x+z))^clearing_power,
/// expanding exactly. Every pole order in the input must be bounded by
/// clearing_power (domain error otherwise).
BivarPolynomial substitute_and_clear(const LaurentPoly3& f, int clearing_power);

/// Cleared-denominator residue of the cyclic three-sum pole identity
/// attached to (r, s, t) under x + y + z = 0: the three binomial sums over
/// x^{-i}y^{-j}, y^{-j}z^{-h}, z^{-h}x^{-i} are substituted and cleared by
/// (x z (x+z))^k with k = r+s+t-1. Identically zero exactly when the
/// identity holds.
BivarPolynomial cyclic_pfd_residue(const Triple& t);

/// Cleared residue of the partial fraction decomposition of x^{-r} z^{-s}
/// into pole terms at x, z and x+z, over the denominator
/// (x z (x+z))^{r+s}. Zero when the decomposition is exact. r, s >= 1.
BivarPolynomial pfd_residue(int r, int s);

}  // namespace eisrel
