#pragma once

#include <cstdint>
#include <string>

namespace floer {

// Variable mask for the ambient polynomial ring. The engine works in
// subrings of Q[alpha,beta,gamma]; a quotient is finite-dimensional only
// relative to its ambient variable set, so Groebner data carries one.
enum VarSet : unsigned {
    VAR_ALPHA = 1u,
    VAR_BETA = 2u,
    VAR_GAMMA = 4u,
    VARS_ABG = 7u,
    VARS_AG = 5u,
    VARS_A = 1u,
};

// Monomial alpha^a * beta^b * gamma^c. Grading conventions:
// alpha has Z-degree 2, beta 4, gamma 6; mod 4 both alpha and gamma sit
// in degree 2 while beta contributes 0.
struct Monomial {
    unsigned alpha = 0;
    unsigned beta = 0;
    unsigned gamma = 0;

    int z_degree() const { return int(2 * alpha + 4 * beta + 6 * gamma); }
    int z4_degree() const { return int((2 * alpha + 2 * gamma) % 4); }
    unsigned total_degree() const { return alpha + beta + gamma; }

    bool is_one() const { return alpha == 0 && beta == 0 && gamma == 0; }

    bool divides(const Monomial& m) const {
        return alpha <= m.alpha && beta <= m.beta && gamma <= m.gamma;
    }

    bool uses_only(VarSet vars) const {
        if (alpha > 0 && !(vars & VAR_ALPHA)) return false;
        if (beta > 0 && !(vars & VAR_BETA)) return false;
        if (gamma > 0 && !(vars & VAR_GAMMA)) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return {x.alpha + y.alpha, x.beta + y.beta, x.gamma + y.gamma};
    }

    // Quotient of divisible monomials; caller guarantees divisibility.
    friend Monomial operator/(const Monomial& x, const Monomial& y) {
        return {x.alpha - y.alpha, x.beta - y.beta, x.gamma - y.gamma};
    }

    friend Monomial lcm(const Monomial& x, const Monomial& y) {
        return {x.alpha > y.alpha ? x.alpha : y.alpha,
                x.beta > y.beta ? x.beta : y.beta,
                x.gamma > y.gamma ? x.gamma : y.gamma};
    }

    friend bool operator==(const Monomial& x, const Monomial& y) {
        return x.alpha == y.alpha && x.beta == y.beta && x.gamma == y.gamma;
    }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

    std::string str() const;
};

// Lexicographic order with alpha > beta > gamma; the one global order of
// the engine. Restricted to beta-free monomials it is lex with alpha > gamma.
inline int lex_cmp(const Monomial& x, const Monomial& y) {
    if (x.alpha != y.alpha) return x.alpha < y.alpha ? -1 : 1;
    if (x.beta != y.beta) return x.beta < y.beta ? -1 : 1;
    if (x.gamma != y.gamma) return x.gamma < y.gamma ? -1 : 1;
    return 0;
}

struct LexLess {
    bool operator()(const Monomial& x, const Monomial& y) const { return lex_cmp(x, y) < 0; }
};

// Descending order: polynomial term maps keyed by LexGreater start at the
// leading monomial.
struct LexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const { return lex_cmp(x, y) > 0; }
};

}  // namespace floer
