#include "floer/munoz.hpp"

#include <sstream>
#include <stdexcept>

#include "floer/rng.hpp"

namespace floer {

VarSet vars_for(IdealKind kind) {
    switch (kind) {
        case IdealKind::J: return VARS_ABG;
        case IdealKind::Jplus:
        case IdealKind::Jminus:
        case IdealKind::Jclassical: return VARS_AG;
        case IdealKind::Iplus:
        case IdealKind::Iminus: return VARS_A;
    }
    throw std::logic_error("vars_for: bad kind");
}

ZetaKind zeta_kind_for(IdealKind kind) {
    switch (kind) {
        case IdealKind::J: return ZetaKind::Full;
        case IdealKind::Jplus:
        case IdealKind::Iplus: return ZetaKind::Plus;
        case IdealKind::Jminus:
        case IdealKind::Iminus: return ZetaKind::Minus;
        case IdealKind::Jclassical: return ZetaKind::Classical;
    }
    throw std::logic_error("zeta_kind_for: bad kind");
}

std::string ideal_kind_name(IdealKind kind) {
    switch (kind) {
        case IdealKind::J: return "J";
        case IdealKind::Jplus: return "Jplus";
        case IdealKind::Jminus: return "Jminus";
        case IdealKind::Jclassical: return "Jclassical";
        case IdealKind::Iplus: return "Iplus";
        case IdealKind::Iminus: return "Iminus";
    }
    throw std::logic_error("ideal_kind_name: bad kind");
}

Polynomial Engine::compute_zeta(ZetaKind kind, int k, const std::vector<Polynomial>& lower) {
    // lower holds zeta_0 .. zeta_{k-1}; computes zeta_k via the recursion
    // with index k-1.
    const int r = k - 1;
    auto at = [&](int i) -> Polynomial {
        return i < 0 ? Polynomial() : lower[static_cast<std::size_t>(i)];
    };
    Polynomial result = poly_alpha() * at(r);

    const long rr = static_cast<long>(r);
    bool middle = false;
    Polynomial middle_factor;
    switch (kind) {
        case ZetaKind::Full:
            middle = true;
            middle_factor = rat(rr * rr) * (poly_beta() + poly_const((r % 2 == 0) ? 8 : -8));
            break;
        case ZetaKind::Plus:
            if (r % 2 == 0) {
                middle = true;
                middle_factor = poly_const(16 * rr * rr);
            }
            break;
        case ZetaKind::Minus:
            if (r % 2 != 0) {
                middle = true;
                middle_factor = poly_const(-16 * rr * rr);
            }
            break;
        case ZetaKind::Classical: break;
    }
    if (middle) result += middle_factor * at(r - 1);

    // Mutation-testing hook: perturb one coefficient of the minus-family
    // recursion. The minus ideals stay two-variable, so every downstream
    // check still terminates while several of them must trip.
    long gamma_coeff = 2 * rr * (rr - 1);
    if (corrupt_zeta_ && kind == ZetaKind::Minus && k == 4) gamma_coeff = 2 * rr * (rr + 1);
    if (gamma_coeff != 0) result += rat(gamma_coeff) * (poly_gamma() * at(r - 2));
    return result;
}

Polynomial Engine::zeta(ZetaKind kind, int k) {
    if (k < 0) return Polynomial();
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<Polynomial>& cache = zeta_cache_[kind];
    if (cache.empty()) cache.push_back(poly_const(1));
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(compute_zeta(kind, static_cast<int>(cache.size()), cache));
    return cache[static_cast<std::size_t>(k)];
}

std::vector<Polynomial> Engine::ideal_generators(IdealKind kind, int genus) {
    if (genus < 0) throw std::invalid_argument("ideal_generators: genus must be >= 0");
    const ZetaKind zk = zeta_kind_for(kind);
    std::vector<Polynomial> gens;
    for (int k = genus; k <= genus + 2; ++k) {
        Polynomial z = zeta(zk, k);
        if (kind == IdealKind::Iplus || kind == IdealKind::Iminus) z = z.set_gamma_zero();
        gens.push_back(z);
    }
    return gens;
}

const GroebnerBasis& Engine::groebner(IdealKind kind, int genus) {
    const auto key = std::make_pair(static_cast<int>(kind), genus);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = gb_cache_.find(key);
        if (it != gb_cache_.end()) return it->second;
    }
    GroebnerBasis gb = buchberger(ideal_generators(kind, genus), vars_for(kind));
    std::lock_guard<std::mutex> lock(mutex_);
    return gb_cache_.emplace(key, std::move(gb)).first->second;
}

int Engine::nilpotency_degree(int genus) {
    if (genus < 1) throw std::invalid_argument("nilpotency_degree: genus must be >= 1");
    const GroebnerBasis& gb = groebner(IdealKind::J, genus);
    const Polynomial u = poly_beta() * poly_beta() - poly_const(64);
    Polynomial power = normal_form(u, gb);
    int n = 1;
    const int cap = 4 * genus + 8;
    while (!power.is_zero()) {
        power = normal_form(power * u, gb);
        ++n;
        if (n > cap) throw std::runtime_error("nilpotency_degree: no nilpotency within bound");
    }
    return n;
}

Polynomial Engine::beta_r(int r) {
    return poly_beta() + poly_const((r % 2 == 0) ? 8 : -8);
}

namespace {
Polynomial beta_minus() { return poly_beta() - poly_const(8); }
Polynomial beta_plus() { return poly_beta() + poly_const(8); }
}  // namespace

Polynomial Engine::phi(int r) {
    return beta_minus().pow(static_cast<unsigned>(r / 2 + 1)) *
           beta_plus().pow(static_cast<unsigned>((r + 1) / 2));
}

Polynomial Engine::psi(int r) {
    return beta_minus().pow(static_cast<unsigned>(r / 2)) *
           beta_plus().pow(static_cast<unsigned>((r + 1) / 2));
}

Polynomial Engine::rho(int j) {
    if (j < 1) return poly_const(1);
    return beta_minus().pow(static_cast<unsigned>(2 * ((j - 1) / 2))) *
           beta_plus().pow(static_cast<unsigned>(j - 1));
}

Polynomial Engine::eta(int j) {
    if (j < 1) return poly_const(1);
    return beta_minus().pow(static_cast<unsigned>(j - 1)) *
           beta_plus().pow(static_cast<unsigned>(j - 1));
}

EvValue ev_map(int g, int j, int sign, ZetaKind family, const Polynomial& p) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("ev_map: sign must be +1 or -1");
    if (!p.uses_only(VARS_AG)) throw std::invalid_argument("ev_map: polynomial must be beta-free");
    if (family == ZetaKind::Minus) {
        if (g < 1 || g % 2 == 0 || j < 1 || j > (g - 1) / 2)
            throw std::invalid_argument("ev_map: j out of range for the minus family");
        Rational a = rat(static_cast<long>(sign) * 4 * (g - 2 * j));
        return {p.evaluate(a, rat(0), rat(0)), rat(0)};
    }
    if (family == ZetaKind::Plus) {
        if (g < 2 || g % 2 != 0 || j < 1 || j > g / 2)
            throw std::invalid_argument("ev_map: j out of range for the plus family");
        // alpha = sign*4(g-2j)*sqrt(-1), gamma = 0: substitute
        // alpha^2 -> -16(g-2j)^2 in the even and odd alpha-degree parts.
        const Rational a = rat(static_cast<long>(sign) * 4 * (g - 2 * j));
        const Rational a2 = -a * a;
        Rational re(0), im(0);
        const Polynomial at_gamma_zero = p.set_gamma_zero();
        for (const auto& [m, c] : at_gamma_zero.terms()) {
            Rational sq(1);
            for (unsigned i = 0; i < m.alpha / 2; ++i) sq *= a2;
            if (m.alpha % 2 == 0)
                re += c * sq;
            else
                im += c * sq * a;
        }
        return {re, im};
    }
    throw std::invalid_argument("ev_map: family must be plus or minus");
}

namespace {

CheckResult make_result(const std::string& name, bool pass, const std::string& detail) {
    return CheckResult{name, pass, detail};
}

}  // namespace

std::vector<CheckResult> check_lemma_memberships(Engine& engine, int r_max) {
    std::vector<CheckResult> results;
    for (int r = 1; r <= r_max; ++r) {
        const GroebnerBasis& gb = engine.groebner(IdealKind::J, r);
        std::ostringstream failures;
        bool pass = true;
        for (int j = 0; j <= r; ++j) {
            Polynomial lhs1 = Engine::rho(j) * Engine::phi(r - j) * engine.zeta(ZetaKind::Full, r - j);
            Polynomial lhs2 = poly_alpha() * Engine::eta(j) * Engine::psi(r - j) *
                              engine.zeta(ZetaKind::Full, r - j);
            if (!ideal_member(lhs1, gb)) {
                pass = false;
                failures << " rho_" << j << "*phi_" << (r - j) << "*zeta_" << (r - j);
            }
            if (!ideal_member(lhs2, gb)) {
                pass = false;
                failures << " alpha*eta_" << j << "*psi_" << (r - j) << "*zeta_" << (r - j);
            }
        }
        std::ostringstream name;
        name << "membership.r=" << r;
        results.push_back(make_result(
            name.str(), pass,
            pass ? "all members of J_" + std::to_string(r) : "not in ideal:" + failures.str()));
    }
    return results;
}

std::vector<CheckResult> check_lemma_proportionality(Engine& engine, int g_max) {
    std::vector<CheckResult> results;
    for (int g = 1; g <= g_max; g += 2) {
        const GroebnerBasis& gb = engine.groebner(IdealKind::J, g);
        const Polynomial target = normal_form(poly_gamma().pow(static_cast<unsigned>(g - 1)), gb);
        bool pass = !target.is_zero();
        std::ostringstream detail;
        if (!pass) detail << "gamma^" << (g - 1) << " lies in J_" << g;
        for (int j = 0; pass && j <= (g - 1) / 2; ++j) {
            Polynomial lhs = beta_minus().pow(static_cast<unsigned>(j + (g - 1) / 2)) *
                             beta_plus().pow(static_cast<unsigned>(g - 1)) *
                             engine.zeta(ZetaKind::Full, g - 2 * j - 1);
            Polynomial reduced = normal_form(lhs, gb);
            if (reduced.is_zero()) {
                pass = false;
                detail << "j=" << j << ": reduced to zero";
                break;
            }
            Rational c = reduced.leading_coeff() / target.leading_coeff();
            if (reduced != c * target || sgn(c) <= 0) {
                pass = false;
                detail << "j=" << j << ": not a positive multiple";
                break;
            }
            if (j > 0) detail << ", ";
            detail << "c_" << j << "=" << c.get_str();
        }
        std::ostringstream name;
        name << "proportionality.g=" << g;
        results.push_back(make_result(name.str(), pass, detail.str()));
    }
    return results;
}

namespace {

// Ideal equality via canonical reduced bases of two generating sets.
bool same_ideal(Engine& engine, IdealKind kind, int genus, std::vector<Polynomial> other_gens) {
    GroebnerBasis other = buchberger(std::move(other_gens), vars_for(kind));
    return gb_equal(engine.groebner(kind, genus), other);
}

}  // namespace

std::vector<CheckResult> check_section5_structure(Engine& engine, int g_max, std::uint64_t seed) {
    std::vector<CheckResult> results;
    Rng rng(seed);
    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        results.push_back(make_result(name, pass, detail));
    };

    for (int g = 1; g <= g_max; ++g) {
        const std::string gs = std::to_string(g);
        if (g >= 2 && g % 2 == 0) {
            // J_g^- = (zeta_g^-, gamma * J_{g-2}^-)
            std::vector<Polynomial> gens = {engine.zeta(ZetaKind::Minus, g)};
            for (const Polynomial& z : engine.ideal_generators(IdealKind::Jminus, g - 2))
                gens.push_back(poly_gamma() * z);
            push("structure.minus_gamma_step.g=" + gs,
                 same_ideal(engine, IdealKind::Jminus, g, std::move(gens)),
                 "J-_" + gs + " = (zeta-_" + gs + ", gamma*J-_" + std::to_string(g - 2) + ")");
        }
        if (g % 2 == 1) {
            // J_g^- = J_{g-1}^-
            push("structure.minus_odd_collapse.g=" + gs,
                 gb_equal(engine.groebner(IdealKind::Jminus, g),
                          engine.groebner(IdealKind::Jminus, g - 1)),
                 "J-_" + gs + " = J-_" + std::to_string(g - 1));
        }
        if (g >= 3 && g % 2 == 1) {
            // J_g^+ = (zeta_g^+, gamma * J_{g-2}^+)
            std::vector<Polynomial> gens = {engine.zeta(ZetaKind::Plus, g)};
            for (const Polynomial& z : engine.ideal_generators(IdealKind::Jplus, g - 2))
                gens.push_back(poly_gamma() * z);
            push("structure.plus_gamma_step.g=" + gs,
                 same_ideal(engine, IdealKind::Jplus, g, std::move(gens)),
                 "J+_" + gs + " = (zeta+_" + gs + ", gamma*J+_" + std::to_string(g - 2) + ")");
        }
        if (g % 2 == 0 && g % 4 == 0) {
            // J_g^+ = J_{g-1}^+
            push("structure.plus_even_collapse.g=" + gs,
                 gb_equal(engine.groebner(IdealKind::Jplus, g),
                          engine.groebner(IdealKind::Jplus, g - 1)),
                 "J+_" + gs + " = J+_" + std::to_string(g - 1));
        }
        if (g % 2 == 0 && g % 4 == 2) {
            // deg jumps by one and J_{g-1}^+ = (J_g^+, gamma^{g/2})
            bool deg_ok =
                quotient_basis(engine.groebner(IdealKind::Jplus, g)).dim() ==
                quotient_basis(engine.groebner(IdealKind::Jplus, g - 1)).dim() + 1;
            std::vector<Polynomial> gens = engine.ideal_generators(IdealKind::Jplus, g);
            gens.push_back(poly_gamma().pow(static_cast<unsigned>(g / 2)));
            bool gen_ok = same_ideal(engine, IdealKind::Jplus, g - 1, std::move(gens));
            push("structure.plus_even_jump.g=" + gs, deg_ok && gen_ok,
                 "deg J+_" + gs + " = deg J+_" + std::to_string(g - 1) + " + 1 and J+_" +
                     std::to_string(g - 1) + " = (J+_" + gs + ", gamma^" + std::to_string(g / 2) +
                     ")");
        }
        if (g == 2) {
            push("structure.gamma_not_in_plus2",
                 !ideal_member(poly_gamma(), engine.groebner(IdealKind::Jplus, 2)),
                 "gamma not in J+_2");
        }
        if (g % 2 == 0 && g - 4 >= 1) {
            // Contrapositive sample of the gamma-jump lemma: u outside
            // J_{g-4}^+ must keep gamma^2 u outside J_g^+.
            const QuotientBasis qb = quotient_basis(engine.groebner(IdealKind::Jplus, g - 4));
            const GroebnerBasis& gb_g = engine.groebner(IdealKind::Jplus, g);
            bool pass = true;
            const int samples = 5;
            for (int s = 0; s < samples && pass; ++s) {
                Polynomial u;
                while (u.is_zero())
                    for (const Monomial& m : qb.monomials)
                        u.add_term(m, rng.small_rational(4, 3));
                if (ideal_member(poly_gamma().pow(2) * u, gb_g)) pass = false;
            }
            push("structure.plus_gamma_jump.g=" + gs, pass,
                 "sampled u outside J+_" + std::to_string(g - 4) +
                     ": gamma^2*u outside J+_" + gs);
        }
    }
    return results;
}

}  // namespace floer
