#pragma once

#include <cstddef>
#include <vector>

#include "floer/groebner.hpp"
#include "floer/poincare.hpp"
#include "floer/polynomial.hpp"
#include "floer/rational.hpp"

namespace floer {

// Dense matrix over Q.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const;
    Rational trace() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Exact row-echelon rank.
std::size_t rank(RatMatrix m);

// Multiplication operator on a quotient's standard-monomial basis: column j
// is the normal form of element * monomial_j expanded over the basis.
struct MultOperator {
    RatMatrix matrix;
    Polynomial element;
    QuotientBasis basis;
};

MultOperator mult_operator(const Polynomial& element, const GroebnerBasis& gb);

// Graded kernel dimensions of an operator that preserves the Z/4 grading of
// its basis; throws std::invalid_argument when a matrix entry crosses
// grading blocks. Cokernel dimensions per degree coincide blockwise.
PoincarePoly kernel_graded_dims(const MultOperator& op);
PoincarePoly cokernel_graded_dims(const MultOperator& op);

// Exact characteristic polynomial, coefficients ascending and monic
// (Faddeev-LeVerrier over Q).
std::vector<Rational> char_poly(const RatMatrix& m);

// Quotient of univariate polynomials when the division is exact; returns
// false (and leaves q unspecified) when a nonzero remainder appears.
bool divide_exact(std::vector<Rational>& q, const std::vector<Rational>& p,
                  const std::vector<Rational>& d);

// Strips every factor d from p; returns the number removed.
unsigned strip_factor(std::vector<Rational>& p, const std::vector<Rational>& d);

bool is_constant_one(const std::vector<Rational>& p);

}  // namespace floer
