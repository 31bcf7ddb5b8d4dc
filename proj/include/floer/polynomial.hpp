#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floer/monomial.hpp"
#include "floer/rational.hpp"

namespace floer {

// Sparse polynomial in Q[alpha,beta,gamma]. Terms are kept in descending
// lex order (leading term first) and never store a zero coefficient; the
// zero polynomial is the empty map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, LexGreater>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c) { add_term(Monomial{}, c); }

    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    // In-place accumulation of c * m; erases the entry when it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator-(const Polynomial& p) { return rat(-1) * p; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    Polynomial pow(unsigned n) const;

    // Exact substitution alpha -> a, beta -> b, gamma -> c.
    Rational evaluate(const Rational& a, const Rational& b, const Rational& c) const;

    // Image under beta -> +8 or beta -> -8; result is beta-free.
    Polynomial specialize_beta(int sign) const;

    // Image under gamma -> 0.
    Polynomial set_gamma_zero() const;

    bool uses_only(VarSet vars) const;

    // Z/4 degree if every term agrees, otherwise nullopt.
    std::optional<int> z4_homogeneous_degree() const;
    // Z degree (2,4,6 weights) if homogeneous, otherwise nullopt.
    std::optional<int> z_homogeneous_degree() const;

    // Rendered with spelled-out variables, e.g. "alpha^2*beta - 8".
    std::string str() const;

private:
    TermMap terms_;
};

// Generators of the ring, for readable construction in code and tests.
Polynomial poly_alpha();
Polynomial poly_beta();
Polynomial poly_gamma();
Polynomial poly_const(long n);
Polynomial poly_const(const Rational& q);

}  // namespace floer
