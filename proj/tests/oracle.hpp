#pragma once

// Dense brute-force polynomial arithmetic, independent of the sparse
// implementation it cross-checks. Test-only.

#include <vector>

#include "floer/polynomial.hpp"

namespace floer::testing {

struct DensePoly {
    // coef[a][b][c] is the coefficient of alpha^a beta^b gamma^c.
    std::vector<std::vector<std::vector<Rational>>> coef;

    explicit DensePoly(unsigned bound)
        : coef(bound, std::vector<std::vector<Rational>>(bound, std::vector<Rational>(bound, Rational(0)))) {}

    unsigned bound() const { return static_cast<unsigned>(coef.size()); }

    static DensePoly from(const Polynomial& p, unsigned bound) {
        DensePoly d(bound);
        for (const auto& [m, c] : p.terms()) d.coef[m.alpha][m.beta][m.gamma] = c;
        return d;
    }

    Polynomial to_sparse() const {
        Polynomial p;
        for (unsigned a = 0; a < bound(); ++a)
            for (unsigned b = 0; b < bound(); ++b)
                for (unsigned c = 0; c < bound(); ++c)
                    p.add_term(Monomial{a, b, c}, coef[a][b][c]);
        return p;
    }

    friend DensePoly add(const DensePoly& x, const DensePoly& y) {
        DensePoly r(x.bound());
        for (unsigned a = 0; a < x.bound(); ++a)
            for (unsigned b = 0; b < x.bound(); ++b)
                for (unsigned c = 0; c < x.bound(); ++c)
                    r.coef[a][b][c] = x.coef[a][b][c] + y.coef[a][b][c];
        return r;
    }

    friend DensePoly mul(const DensePoly& x, const DensePoly& y) {
        DensePoly r(x.bound() + y.bound());
        for (unsigned a1 = 0; a1 < x.bound(); ++a1)
            for (unsigned b1 = 0; b1 < x.bound(); ++b1)
                for (unsigned c1 = 0; c1 < x.bound(); ++c1) {
                    if (is_zero(x.coef[a1][b1][c1])) continue;
                    for (unsigned a2 = 0; a2 < y.bound(); ++a2)
                        for (unsigned b2 = 0; b2 < y.bound(); ++b2)
                            for (unsigned c2 = 0; c2 < y.bound(); ++c2)
                                r.coef[a1 + a2][b1 + b2][c1 + c2] +=
                                    x.coef[a1][b1][c1] * y.coef[a2][b2][c2];
                }
        return r;
    }
};

}  // namespace floer::testing
