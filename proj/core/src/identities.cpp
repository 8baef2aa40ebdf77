#include "eisrel/identities.hpp"

#include <stdexcept>

#include "eisrel/number_theory.hpp"

namespace eisrel {

namespace {

int parity_sign(int e) {
    return e % 2 == 0 ? 1 : -1;
}

/// e (e-1) ... (e-order+1); exact for negative e, zero when a natural
/// exponent is differentiated past its degree.
Integer falling_factorial(int e, int order) {
    Integer out(1);
    for (int v = 0; v < order; ++v) {
        out *= Integer(e - v);
    }
    return out;
}

Rational factorial_prefactor(const Triple& t) {
    return Rational(factorial(t.r - 1) * factorial(t.s - 1) * factorial(t.t - 1));
}

// One binomial pole sum over ordered splittings (first, second) of k.
// `axes` maps (first, second) onto the variable slots of the monomial
// x^a y^b z^c. The sign sits on the *second* pole index: expanding the
// difference operator term by term produces (-1)^{second + base}, which
// for odd combined weight differs from putting it on the first index by a
// global flip (immaterial to the vanishing sums, but the expansions are
// compared exactly).
LaurentPoly3 pole_sum(const Triple& t, int first_choose, int second_choose,
                      int sign_base, int first_axis, int second_axis,
                      const Rational& scale) {
    const int k = t.weight();
    LaurentPoly3 out;
    for (int first = 1; first < k; ++first) {
        const int second = k - first;
        const Integer b = binomial(first - 1, first_choose) *
                          binomial(second - 1, second_choose);
        if (sgn(b) == 0) {
            continue;
        }
        int exps[3] = {0, 0, 0};
        exps[first_axis] = -first;
        exps[second_axis] = -second;
        out.add_term(exps[0], exps[1], exps[2],
                     scale * Rational(b) * Rational(parity_sign(second + sign_base)));
    }
    return out;
}

}  // namespace

LaurentPoly3 difference_operator_expansion_xy(const Triple& t) {
    return pole_sum(t, t.t - 1, t.s - 1, t.r, 0, 1, factorial_prefactor(t));
}

LaurentPoly3 difference_operator_expansion_yz(const Triple& t) {
    return pole_sum(t, t.r - 1, t.t - 1, t.s, 1, 2, factorial_prefactor(t));
}

LaurentPoly3 difference_operator_expansion_zx(const Triple& t) {
    return pole_sum(t, t.s - 1, t.r - 1, t.t, 2, 0, factorial_prefactor(t));
}

LaurentPoly3 apply_difference_operator(const Triple& t, const LaurentPoly3& f) {
    LaurentPoly3 out;
    // Expand (dx-dy)^{r-1} (dy-dz)^{s-1} (dz-dx)^{t-1} into pure
    // dx^a dy^b dz^c terms, then act monomial by monomial.
    for (int p = 0; p <= t.r - 1; ++p) {
        const Integer cp = binomial(t.r - 1, p);
        for (int q = 0; q <= t.s - 1; ++q) {
            const Integer cq = binomial(t.s - 1, q);
            for (int u = 0; u <= t.t - 1; ++u) {
                const Rational op_coeff =
                    Rational(cp * cq * binomial(t.t - 1, u)) *
                    Rational(parity_sign(p + q + u));
                const int order_x = (t.r - 1 - p) + u;
                const int order_y = p + (t.s - 1 - q);
                const int order_z = q + (t.t - 1 - u);
                for (const auto& [exps, coeff] : f.terms()) {
                    const Integer factor = falling_factorial(exps[0], order_x) *
                                           falling_factorial(exps[1], order_y) *
                                           falling_factorial(exps[2], order_z);
                    if (sgn(factor) == 0) {
                        continue;
                    }
                    out.add_term(exps[0] - order_x, exps[1] - order_y,
                                 exps[2] - order_z,
                                 op_coeff * Rational(factor) * coeff);
                }
            }
        }
    }
    return out;
}

ExpansionCheck check_difference_operator_expansions(const Triple& t) {
    LaurentPoly3 xy;
    xy.add_term(-1, -1, 0, Rational(1));
    LaurentPoly3 yz;
    yz.add_term(0, -1, -1, Rational(1));
    LaurentPoly3 zx;
    zx.add_term(-1, 0, -1, Rational(1));
    return ExpansionCheck{
        apply_difference_operator(t, xy) == difference_operator_expansion_xy(t),
        apply_difference_operator(t, yz) == difference_operator_expansion_yz(t),
        apply_difference_operator(t, zx) == difference_operator_expansion_zx(t),
    };
}

BivarPolynomial substitute_and_clear(const LaurentPoly3& f, int clearing_power) {
    if (clearing_power < 0) {
        throw std::domain_error("substitute_and_clear: clearing power must be >= 0");
    }
    BivarPolynomial out;
    for (const auto& [exps, coeff] : f.terms()) {
        const int ex = exps[0] + clearing_power;      // x exponent after clearing
        const int ey = exps[1] + clearing_power;      // (x+z) exponent after clearing
        const int ez = exps[2] + clearing_power;
        if (ex < 0 || ey < 0 || ez < 0) {
            throw std::domain_error("substitute_and_clear: pole order exceeds clearing power");
        }
        // y^b = (-1)^b (x+z)^b, so the term becomes
        // (-1)^b coeff * x^ex z^ez (x+z)^ey, expanded binomially.
        const Rational signed_coeff = coeff * Rational(parity_sign(exps[1]));
        for (int w = 0; w <= ey; ++w) {
            out.add_term(ex + w, ez + ey - w, signed_coeff * Rational(binomial(ey, w)));
        }
    }
    return out;
}

BivarPolynomial cyclic_pfd_residue(const Triple& t) {
    const int k = t.weight();
    LaurentPoly3 rhs = pole_sum(t, t.t - 1, t.s - 1, t.r, 0, 1, Rational(1));
    rhs += pole_sum(t, t.r - 1, t.t - 1, t.s, 1, 2, Rational(1));
    rhs += pole_sum(t, t.s - 1, t.r - 1, t.t, 2, 0, Rational(1));
    BivarPolynomial residue = substitute_and_clear(rhs, k);
    if (residue.max_exponent() > 3 * k) {
        throw std::logic_error("cyclic_pfd_residue: exponent bound exceeded");
    }
    return residue;
}

BivarPolynomial pfd_residue(int r, int s) {
    if (r < 1 || s < 1) {
        throw std::domain_error("pfd_residue: indices must be positive");
    }
    const int k = r + s;
    // The decomposition of x^{-r} z^{-s} into pole terms at x+z; with
    // x + y + z = 0 every (x+z)^{-i} is (-1)^i y^{-i}.
    LaurentPoly3 bracket;
    for (int i = 1; i < k; ++i) {
        const int j = k - i;
        const Rational sign(parity_sign(i));
        const Integer cx = binomial(i - 1, s - 1);
        if (sgn(cx) != 0) {
            bracket.add_term(-j, -i, 0, sign * Rational(cx));
        }
        const Integer cz = binomial(i - 1, r - 1);
        if (sgn(cz) != 0) {
            bracket.add_term(0, -i, -j, sign * Rational(cz));
        }
    }
    bracket.add_term(-r, 0, -s, Rational(-1));
    BivarPolynomial residue = substitute_and_clear(bracket, k);
    if (residue.max_exponent() > 3 * k) {
        throw std::logic_error("pfd_residue: exponent bound exceeded");
    }
    return residue;
}

}  // namespace eisrel
