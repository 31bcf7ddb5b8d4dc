#pragma once

#include <string>
#include <vector>

#include "floer/poincare.hpp"
#include "floer/polynomial.hpp"

namespace floer {

// The engine uses a single monomial order: lex with alpha > beta > gamma.
// For beta-free ideals this restricts to lex with alpha > gamma.
struct MonomialOrder {
    enum Kind { LexAlphaBetaGamma } kind = LexAlphaBetaGamma;
};

// Reduced Groebner basis. Generators are monic, pairwise tail-reduced and
// sorted by descending leading monomial; `vars` is the ambient variable set
// of the ring the ideal lives in.
struct GroebnerBasis {
    std::vector<Polynomial> gens;
    VarSet vars = VARS_ABG;
    MonomialOrder order;

    bool is_unit_ideal() const {
        return gens.size() == 1 && !gens[0].is_zero() && gens[0].leading_monomial().is_one();
    }
};

// Standard monomials of a finite-dimensional quotient, sorted ascending so
// that index 0 is the constant monomial.
struct QuotientBasis {
    std::vector<Monomial> monomials;
    std::size_t dim() const { return monomials.size(); }
};

// Remainder of p on division by the given polynomials: no term of the
// result is divisible by any divisor's leading monomial, and p - result
// lies in the ideal they generate. Unique (hence idempotent) when the
// divisors form a Groebner basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger's algorithm with the product and chain criteria, normal
// selection strategy, and full inter-reduction of the output. Deterministic
// for a fixed generator list. Throws std::invalid_argument if every
// generator is zero or the list is empty.
GroebnerBasis buchberger(std::vector<Polynomial> generators, VarSet vars = VARS_ABG);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

// Leading monomials of the reduced basis, descending.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

// Enumerates the staircase complement. Throws std::runtime_error when the
// quotient is infinite-dimensional over the ambient variable set.
QuotientBasis quotient_basis(const GroebnerBasis& gb);

// Z/4 graded dimensions of the quotient ring.
PoincarePoly graded_poincare(const GroebnerBasis& gb);

bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace floer
