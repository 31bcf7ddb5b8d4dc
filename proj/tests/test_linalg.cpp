#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floer/linalg.hpp"
#include "floer/munoz.hpp"

using namespace floer;

namespace {

Engine& engine() {
    static Engine e;
    return e;
}

}  // namespace

TEST_CASE("rank of small matrices") {
    RatMatrix m(3, 3);
    m.at(0, 0) = 1;
    m.at(1, 1) = 2;
    CHECK(rank(m) == 2);
    CHECK(rank(RatMatrix::identity(4)) == 4);
    CHECK(rank(RatMatrix(3, 3)) == 0);
}

TEST_CASE("mult by beta on the J_1 quotient is the scalar 8") {
    MultOperator op = mult_operator(poly_beta(), engine().groebner(IdealKind::J, 1));
    REQUIRE(op.matrix.rows() == 1);
    CHECK(op.matrix.at(0, 0) == 8);
    auto cp = char_poly(op.matrix);
    REQUIRE(cp.size() == 2);
    CHECK(cp[0] == -8);
    CHECK(cp[1] == 1);
}

TEST_CASE("mult by one is the identity") {
    const GroebnerBasis& gb = engine().groebner(IdealKind::J, 2);
    MultOperator op = mult_operator(poly_const(1), gb);
    CHECK(op.matrix == RatMatrix::identity(op.basis.dim()));
    CHECK(kernel_graded_dims(op).total() == 0);
}

TEST_CASE("column j is the normal form of element * monomial_j") {
    const GroebnerBasis& gb = engine().groebner(IdealKind::J, 2);
    MultOperator op = mult_operator(poly_gamma(), gb);
    for (std::size_t j = 0; j < op.basis.dim(); ++j) {
        Polynomial expected =
            normal_form(poly_gamma() * Polynomial::term(op.basis.monomials[j], rat(1)), gb);
        Polynomial from_matrix;
        for (std::size_t i = 0; i < op.basis.dim(); ++i)
            from_matrix.add_term(op.basis.monomials[i], op.matrix.at(i, j));
        CHECK(from_matrix == expected);
    }
}

TEST_CASE("mult by gamma is nilpotent of index g") {
    for (int g = 2; g <= 4; ++g) {
        MultOperator op = mult_operator(poly_gamma(), engine().groebner(IdealKind::J, g));
        RatMatrix power = op.matrix;
        for (int k = 1; k < g - 1; ++k) power = power * op.matrix;
        CHECK(!power.is_zero());  // gamma^{g-1} nonzero in the quotient
        power = power * op.matrix;
        CHECK(power.is_zero());  // gamma^g acts as zero
    }
}

TEST_CASE("multiplication operators commute") {
    for (int g = 1; g <= 3; ++g) {
        const GroebnerBasis& gb = engine().groebner(IdealKind::J, g);
        RatMatrix a = mult_operator(poly_alpha(), gb).matrix;
        RatMatrix b = mult_operator(poly_beta(), gb).matrix;
        RatMatrix c = mult_operator(poly_gamma(), gb).matrix;
        CHECK(a * b == b * a);
        CHECK(a * c == c * a);
        CHECK(b * c == c * b);
    }
}

TEST_CASE("graded kernel of beta^2 - 64 at genus 1 is the whole quotient") {
    const GroebnerBasis& gb = engine().groebner(IdealKind::J, 1);
    MultOperator op = mult_operator(poly_beta() * poly_beta() - poly_const(64), gb);
    CHECK(op.matrix.is_zero());
    CHECK(kernel_graded_dims(op) == graded_poincare(gb));
}

TEST_CASE("graded kernels match the specialized ideals") {
    for (int g = 1; g <= 4; ++g) {
        const GroebnerBasis& gb = engine().groebner(IdealKind::J, g);
        CHECK(kernel_graded_dims(mult_operator(poly_beta() + poly_const(8), gb)) ==
              graded_poincare(engine().groebner(IdealKind::Jminus, g)));
        CHECK(kernel_graded_dims(mult_operator(poly_beta() - poly_const(8), gb)) ==
              graded_poincare(engine().groebner(IdealKind::Jplus, g)));
    }
}

TEST_CASE("grading violation raises") {
    // alpha shifts the Z/4 degree by 2, so it cannot preserve the grading on
    // a quotient with classes in two degrees.
    MultOperator op = mult_operator(poly_alpha(), engine().groebner(IdealKind::Jminus, 2));
    CHECK_THROWS_AS(kernel_graded_dims(op), std::invalid_argument);
}

TEST_CASE("char_poly of the identity is (x-1)^n") {
    auto cp = char_poly(RatMatrix::identity(3));
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == -1);
    CHECK(cp[1] == 3);
    CHECK(cp[2] == -3);
    CHECK(cp[3] == 1);
}

TEST_CASE("char_poly of alpha on the J_3^- quotient has roots in {+-4}") {
    auto cp = char_poly(mult_operator(poly_alpha(), engine().groebner(IdealKind::Jminus, 3)).matrix);
    strip_factor(cp, {rat(-16), rat(0), rat(1)});  // x^2 - 16
    CHECK(is_constant_one(cp));
}

TEST_CASE("char_poly of beta on J_g factors as (x-8)^a (x+8)^b") {
    for (int g = 1; g <= 3; ++g) {
        auto cp = char_poly(mult_operator(poly_beta(), engine().groebner(IdealKind::J, g)).matrix);
        strip_factor(cp, {rat(-8), rat(1)});
        strip_factor(cp, {rat(8), rat(1)});
        CHECK(is_constant_one(cp));
    }
}

TEST_CASE("cayley-hamilton holds for the beta operator") {
    const GroebnerBasis& gb = engine().groebner(IdealKind::J, 3);
    RatMatrix b = mult_operator(poly_beta(), gb).matrix;
    auto cp = char_poly(b);
    RatMatrix acc(b.rows(), b.cols());
    RatMatrix power = RatMatrix::identity(b.rows());
    for (std::size_t k = 0; k < cp.size(); ++k) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) acc.at(i, j) += cp[k] * power.at(i, j);
        if (k + 1 < cp.size()) power = power * b;
    }
    CHECK(acc.is_zero());
}

TEST_CASE("exact polynomial division helpers") {
    // (x^2 - 16) = (x-4)(x+4)
    std::vector<Rational> p = {rat(-16), rat(0), rat(1)};
    std::vector<Rational> q;
    CHECK(divide_exact(q, p, {rat(-4), rat(1)}));
    CHECK(q == std::vector<Rational>{rat(4), rat(1)});
    CHECK(!divide_exact(q, p, {rat(-3), rat(1)}));
    std::vector<Rational> cube = {rat(-1), rat(3), rat(-3), rat(1)};  // (x-1)^3
    CHECK(strip_factor(cube, {rat(-1), rat(1)}) == 3);
    CHECK(is_constant_one(cube));
}
