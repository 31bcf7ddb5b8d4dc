#include "floer/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace floer {

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::ostringstream out;
    const char* names[3] = {"alpha", "beta", "gamma"};
    unsigned exps[3] = {alpha, beta, gamma};
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (exps[i] == 0) continue;
        if (!first) out << "*";
        out << names[i];
        if (exps[i] > 1) out << "^" << exps[i];
        first = false;
    }
    return out.str();
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (floer::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (floer::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r;
    if (floer::is_zero(c)) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = poly_const(1);
    Polynomial base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

namespace {
Rational rational_pow(const Rational& q, unsigned n) {
    Rational r(1);
    Rational base = q;
    while (n) {
        if (n & 1) r *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return r;
}
}  // namespace

Rational Polynomial::evaluate(const Rational& a, const Rational& b, const Rational& c) const {
    Rational total(0);
    for (const auto& [m, coeff] : terms_)
        total += coeff * rational_pow(a, m.alpha) * rational_pow(b, m.beta) *
                 rational_pow(c, m.gamma);
    return total;
}

Polynomial Polynomial::specialize_beta(int sign) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("specialize_beta: sign must be +1 or -1");
    const Rational v = rat(8 * sign);
    Polynomial r;
    for (const auto& [m, c] : terms_)
        r.add_term(Monomial{m.alpha, 0, m.gamma}, c * rational_pow(v, m.beta));
    return r;
}

Polynomial Polynomial::set_gamma_zero() const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.gamma == 0) r.add_term(m, c);
    return r;
}

bool Polynomial::uses_only(VarSet vars) const {
    for (const auto& [m, c] : terms_)
        if (!m.uses_only(vars)) return false;
    return true;
}

std::optional<int> Polynomial::z4_homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        int d = m.z4_degree();
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::optional<int> Polynomial::z_homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        int d = m.z_degree();
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            a = abs(a);
        }
        if (m.is_one()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << m.str();
        }
        first = false;
    }
    return out.str();
}

Polynomial poly_alpha() { return Polynomial::term(Monomial{1, 0, 0}, rat(1)); }
Polynomial poly_beta() { return Polynomial::term(Monomial{0, 1, 0}, rat(1)); }
Polynomial poly_gamma() { return Polynomial::term(Monomial{0, 0, 1}, rat(1)); }
Polynomial poly_const(long n) { return n == 0 ? Polynomial() : Polynomial(rat(n)); }
Polynomial poly_const(const Rational& q) { return is_zero(q) ? Polynomial() : Polynomial(q); }

}  // namespace floer
