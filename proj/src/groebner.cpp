#include "floer/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace floer {

namespace {

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return (rat(1) / p.leading_coeff()) * p;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    Polynomial remainder;
    Polynomial work = p;
    while (!work.is_zero()) {
        const Monomial& m = work.leading_monomial();
        const Rational& c = work.leading_coeff();
        bool reduced = false;
        for (const Polynomial& d : divisors) {
            if (d.is_zero()) continue;
            const Monomial& lm = d.leading_monomial();
            if (lm.divides(m)) {
                work -= (c / d.leading_coeff()) * (Polynomial::term(m / lm, rat(1)) * d);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(m, c);
            Polynomial t = Polynomial::term(m, c);
            work -= t;
        }
    }
    return remainder;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.gens);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial L = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial sf = Polynomial::term(L / f.leading_monomial(), rat(1) / f.leading_coeff()) * f;
    Polynomial sg = Polynomial::term(L / g.leading_monomial(), rat(1) / g.leading_coeff()) * g;
    return sf - sg;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial l;  // lcm of the two leading monomials
};

// Normal strategy: smallest lcm total degree first, ties broken by the
// monomial order on lcms, then by index.
bool pair_before(const Pair& a, const Pair& b) {
    unsigned da = a.l.total_degree(), db = b.l.total_degree();
    if (da != db) return da < db;
    int c = lex_cmp(a.l, b.l);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

// Minimalize and tail-reduce: canonical reduced basis, monic, sorted by
// descending leading monomial.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
    // Drop generators whose leading monomial another one divides.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Reduce each generator against the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others);
            if (r != minimal[i]) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    minimal[i] = r;
                }
            }
        }
    }
    for (Polynomial& p : minimal) p = make_monic(p);
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return lex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> generators, VarSet vars) {
    if (generators.empty()) throw std::invalid_argument("buchberger: empty generator list");
    for (const Polynomial& g : generators)
        if (!g.uses_only(vars))
            throw std::invalid_argument("buchberger: generator uses a variable outside the ambient ring");

    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators)
        if (!g.is_zero()) basis.push_back(make_monic(g));
    if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

    std::vector<Pair> pending;
    auto add_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pending.push_back({i, k, lcm(basis[i].leading_monomial(), basis[k].leading_monomial())});
    };
    for (std::size_t k = 1; k < basis.size(); ++k) add_pairs(k);

    auto coprime = [&](const Pair& p) {
        // Product criterion: disjoint leading monomials give S-poly -> 0.
        return p.l == basis[p.i].leading_monomial() * basis[p.j].leading_monomial();
    };
    auto pending_has = [&](std::size_t a, std::size_t b) {
        for (const Pair& p : pending)
            if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
        return false;
    };

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_before);
        Pair p = *it;
        pending.erase(it);

        if (coprime(p)) continue;
        // Chain criterion: skip when some other leading monomial divides the
        // lcm and both side pairs were already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].leading_monomial().divides(p.l) && !pending_has(p.i, k) &&
                !pending_has(p.j, k))
                chained = true;
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis);
        if (!r.is_zero()) {
            basis.push_back(make_monic(r));
            add_pairs(basis.size() - 1);
        }
    }

    GroebnerBasis gb;
    gb.gens = interreduce(std::move(basis));
    gb.vars = vars;
    return gb;
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb).is_zero();
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lead;
    lead.reserve(gb.gens.size());
    for (const Polynomial& g : gb.gens) lead.push_back(g.leading_monomial());
    return lead;
}

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
    const std::vector<Monomial> lead = initial_ideal(gb);
    for (const Monomial& m : lead)
        if (m.is_one()) return {};  // unit ideal, zero-dimensional quotient

    // Finite-dimensional iff every ambient variable has a pure power among
    // the leading monomials; that power is an exclusive exponent bound.
    const unsigned bits[3] = {VAR_ALPHA, VAR_BETA, VAR_GAMMA};
    unsigned bound[3];
    for (int v = 0; v < 3; ++v) {
        if (!(gb.vars & bits[v])) {
            bound[v] = 1;  // variable absent from the ring, exponent stays 0
            continue;
        }
        bool found = false;
        unsigned best = 0;
        for (const Monomial& m : lead) {
            const unsigned e[3] = {m.alpha, m.beta, m.gamma};
            if (e[v] > 0 && e[(v + 1) % 3] == 0 && e[(v + 2) % 3] == 0) {
                if (!found || e[v] < best) best = e[v];
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error(
                "quotient_basis: infinite staircase (quotient not finite-dimensional)");
        bound[v] = best;
    }

    QuotientBasis qb;
    for (unsigned a = 0; a < bound[0]; ++a)
        for (unsigned b = 0; b < bound[1]; ++b)
            for (unsigned c = 0; c < bound[2]; ++c) {
                Monomial m{a, b, c};
                bool in_ideal = false;
                for (const Monomial& l : lead)
                    if (l.divides(m)) {
                        in_ideal = true;
                        break;
                    }
                if (!in_ideal) qb.monomials.push_back(m);
            }
    std::sort(qb.monomials.begin(), qb.monomials.end(), LexLess{});
    return qb;
}

PoincarePoly graded_poincare(const GroebnerBasis& gb) {
    return z4_poincare_of_monomials(quotient_basis(gb).monomials);
}

bool gb_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.vars == b.vars && a.gens == b.gens;
}

}  // namespace floer
