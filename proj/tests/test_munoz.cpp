#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floer/munoz.hpp"
#include "floer/groebner.hpp"

using namespace floer;

namespace {

Engine& engine() {
    static Engine e;
    return e;
}

}  // namespace

TEST_CASE("zeta base cases and small values") {
    CHECK(engine().zeta(ZetaKind::Full, -1) == Polynomial());
    CHECK(engine().zeta(ZetaKind::Full, 0) == poly_const(1));
    CHECK(engine().zeta(ZetaKind::Full, 1) == poly_alpha());
    CHECK(engine().zeta(ZetaKind::Full, 2) ==
          poly_alpha() * poly_alpha() + poly_beta() - poly_const(8));
    Polynomial zeta3 = poly_alpha().pow(3) + rat(5) * (poly_alpha() * poly_beta()) +
                       rat(24) * poly_alpha() + rat(4) * poly_gamma();
    CHECK(engine().zeta(ZetaKind::Full, 3) == zeta3);
}

TEST_CASE("specialized zeta values") {
    CHECK(engine().zeta(ZetaKind::Plus, 2) == poly_alpha() * poly_alpha());
    CHECK(engine().zeta(ZetaKind::Minus, 2) == poly_alpha() * poly_alpha() - poly_const(16));
    CHECK(engine().zeta(ZetaKind::Minus, 3) ==
          poly_alpha().pow(3) - rat(16) * poly_alpha() + rat(4) * poly_gamma());
    CHECK(engine().zeta(ZetaKind::Classical, 3) == poly_alpha().pow(3) + rat(4) * poly_gamma());
}

TEST_CASE("full recursion satisfied directly") {
    for (int k = 1; k <= 10; ++k) {
        Polynomial lhs = engine().zeta(ZetaKind::Full, k + 1);
        Polynomial rhs = poly_alpha() * engine().zeta(ZetaKind::Full, k) +
                         rat(static_cast<long>(k) * k) * (Engine::beta_r(k) *
                         engine().zeta(ZetaKind::Full, k - 1)) +
                         rat(2L * k * (k - 1)) *
                             (poly_gamma() * engine().zeta(ZetaKind::Full, k - 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("specialization coherence up to k = 14") {
    for (int k = 0; k <= 14; ++k) {
        Polynomial full = engine().zeta(ZetaKind::Full, k);
        CHECK(full.specialize_beta(1) == engine().zeta(ZetaKind::Plus, k));
        CHECK(full.specialize_beta(-1) == engine().zeta(ZetaKind::Minus, k));
    }
}

TEST_CASE("leading term of zeta_g is alpha^g") {
    for (int k = 1; k <= 12; ++k)
        for (ZetaKind kind : {ZetaKind::Full, ZetaKind::Plus, ZetaKind::Minus, ZetaKind::Classical}) {
            const Polynomial z = engine().zeta(kind, k);
            CHECK(z.leading_monomial() == Monomial{static_cast<unsigned>(k), 0, 0});
            CHECK(z.leading_coeff() == 1);
        }
}

TEST_CASE("zeta gradings") {
    for (int k = 0; k <= 12; ++k) {
        auto d4 = engine().zeta(ZetaKind::Full, k).z4_homogeneous_degree();
        REQUIRE(d4);
        CHECK(*d4 == (2 * k) % 4);
        auto dz = engine().zeta(ZetaKind::Classical, k).z_homogeneous_degree();
        REQUIRE(dz);
        CHECK(*dz == 2 * k);
    }
}

TEST_CASE("beta helper monomials") {
    Polynomial bm = poly_beta() - poly_const(8), bp = poly_beta() + poly_const(8);
    CHECK(Engine::phi(0) == bm);
    CHECK(Engine::psi(0) == poly_const(1));
    CHECK(Engine::rho(1) == poly_const(1));
    CHECK(Engine::eta(1) == poly_const(1));
    CHECK(Engine::rho(0) == poly_const(1));
    for (int r = 0; r <= 6; ++r) {
        CHECK(Engine::phi(r + 1) == Engine::beta_r(r) * Engine::phi(r));
        CHECK(Engine::psi(r + 1) == Engine::beta_r(r) * Engine::psi(r));
        CHECK(Engine::phi(r) == bm * Engine::psi(r));
    }
    for (int j = 2; j <= 7; ++j) {
        if (j % 2 == 1) {
            CHECK(Engine::rho(j) == bm * bm * bp * Engine::rho(j - 1));
            CHECK(Engine::rho(j) == Engine::eta(j));
        } else {
            CHECK(Engine::rho(j) == bp * Engine::rho(j - 1));
            CHECK(bm * Engine::rho(j) == Engine::eta(j));
        }
    }
}

TEST_CASE("reduced basis of J_1 and the genus-0 minus ideal") {
    const GroebnerBasis& gb = engine().groebner(IdealKind::J, 1);
    REQUIRE(gb.gens.size() == 3);
    CHECK(gb.gens[0] == poly_alpha());
    CHECK(gb.gens[1] == poly_beta() - poly_const(8));
    CHECK(gb.gens[2] == poly_gamma());

    const GroebnerBasis& g0 = engine().groebner(IdealKind::Jminus, 0);
    CHECK(g0.is_unit_ideal());
    CHECK(quotient_basis(g0).dim() == 0);
}

TEST_CASE("plus family even-index degrees") {
    // deg J_2^+ = deg J_1^+ + 1, with gamma the extra standard monomial
    CHECK(quotient_basis(engine().groebner(IdealKind::Jplus, 2)).dim() == 2);
    CHECK(quotient_basis(engine().groebner(IdealKind::Jplus, 1)).dim() == 1);
    // 4 = 0 mod 4: J_4^+ = J_3^+
    CHECK(gb_equal(engine().groebner(IdealKind::Jplus, 4), engine().groebner(IdealKind::Jplus, 3)));
}

TEST_CASE("nilpotency degrees match the closed form 2*ceil(g/2) - 1") {
    const int expected[6] = {1, 1, 3, 3, 5, 5};
    for (int g = 1; g <= 5; ++g) CHECK(engine().nilpotency_degree(g) == expected[g - 1]);
}

TEST_CASE("I family ideals are principal, of degree g at the generating parity") {
    // The gamma = 0 recursions keep zeta_{g+1}, zeta_{g+2} multiples of
    // zeta_g exactly when g is even (minus) or odd (plus); the opposite
    // parity collapses onto the previous ideal like the J families do.
    for (int g = 1; g <= 6; ++g)
        for (IdealKind kind : {IdealKind::Iminus, IdealKind::Iplus}) {
            const GroebnerBasis& gb = engine().groebner(kind, g);
            REQUIRE(gb.gens.size() == 1);  // principal always
            const bool generating_parity =
                (kind == IdealKind::Iminus) == (g % 2 == 0);
            if (generating_parity) {
                CHECK(gb.gens[0].leading_monomial() == Monomial{static_cast<unsigned>(g), 0, 0});
                CHECK(quotient_basis(gb).dim() == static_cast<std::size_t>(g));
                CHECK(gb.gens[0] == engine().zeta(zeta_kind_for(kind), g).set_gamma_zero());
            } else {
                CHECK(gb_equal(gb, engine().groebner(kind, g - 1)));
            }
        }
}

TEST_CASE("ev_map evaluation points") {
    CHECK(ev_map(3, 1, 1, ZetaKind::Minus, poly_alpha()).re == 4);
    CHECK(ev_map(3, 1, -1, ZetaKind::Minus, poly_alpha()).re == -4);
    CHECK(ev_map(3, 1, 1, ZetaKind::Minus, poly_gamma()).re == 0);
    for (int sign : {1, -1}) {
        EvValue v = ev_map(3, 1, sign, ZetaKind::Minus, engine().zeta(ZetaKind::Minus, 3));
        CHECK(is_zero(v.re));
        CHECK(is_zero(v.im));
    }
    // plus family: alpha evaluates to 4(g-2j)i; check alpha and alpha^2
    EvValue a = ev_map(4, 1, 1, ZetaKind::Plus, poly_alpha());
    CHECK(a.re == 0);
    CHECK(a.im == 8);
    EvValue a2 = ev_map(4, 1, 1, ZetaKind::Plus, poly_alpha() * poly_alpha());
    CHECK(a2.re == -64);
    CHECK(a2.im == 0);
}

TEST_CASE("ev_map rejects bad arguments") {
    CHECK_THROWS_AS(ev_map(3, 0, 1, ZetaKind::Minus, poly_alpha()), std::invalid_argument);
    CHECK_THROWS_AS(ev_map(3, 2, 1, ZetaKind::Minus, poly_alpha()), std::invalid_argument);
    CHECK_THROWS_AS(ev_map(4, 1, 1, ZetaKind::Minus, poly_alpha()), std::invalid_argument);
    CHECK_THROWS_AS(ev_map(4, 1, 1, ZetaKind::Plus, poly_beta()), std::invalid_argument);
    CHECK_THROWS_AS(ev_map(4, 1, 2, ZetaKind::Plus, poly_alpha()), std::invalid_argument);
}

TEST_CASE("lemma membership checks pass for r <= 4") {
    for (const CheckResult& r : check_lemma_memberships(engine(), 4)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("proportionality constants exist and are positive for g <= 5") {
    auto results = check_lemma_proportionality(engine(), 5);
    REQUIRE(results.size() == 3);  // g = 1, 3, 5
    for (const CheckResult& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
    CHECK(results[0].detail == "c_0=1");
}

TEST_CASE("section 5 structural identities hold through genus 7") {
    for (const CheckResult& r : check_section5_structure(engine(), 7, 42)) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("corrupted recursion is caught by specialization coherence") {
    Engine corrupted(/*corrupt_zeta=*/true);
    bool mismatch = false;
    for (int k = 0; k <= 6 && !mismatch; ++k)
        mismatch = corrupted.zeta(ZetaKind::Full, k).specialize_beta(-1) !=
                   corrupted.zeta(ZetaKind::Minus, k);
    CHECK(mismatch);
}

TEST_CASE("ideal generators require genus >= 0") {
    CHECK_THROWS_AS(engine().ideal_generators(IdealKind::J, -1), std::invalid_argument);
    CHECK_THROWS_AS(engine().nilpotency_degree(0), std::invalid_argument);
}
