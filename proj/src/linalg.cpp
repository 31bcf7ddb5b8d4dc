#include "floer/linalg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace floer {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    RatMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    RatMatrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

bool RatMatrix::is_zero() const {
    for (const Rational& x : data_)
        if (!floer::is_zero(x)) return false;
    return true;
}

Rational RatMatrix::trace() const {
    Rational t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

std::size_t rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && is_zero(m.at(pivot, col))) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        const Rational inv = rat(1) / m.at(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

MultOperator mult_operator(const Polynomial& element, const GroebnerBasis& gb) {
    MultOperator op;
    op.element = element;
    op.basis = quotient_basis(gb);
    const std::size_t n = op.basis.dim();
    op.matrix = RatMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial image =
            normal_form(element * Polynomial::term(op.basis.monomials[j], rat(1)), gb);
        for (const auto& [m, c] : image.terms()) {
            auto it = std::lower_bound(op.basis.monomials.begin(), op.basis.monomials.end(), m,
                                       LexLess{});
            if (it == op.basis.monomials.end() || *it != m)
                throw std::logic_error("mult_operator: normal form left the standard basis");
            op.matrix.at(static_cast<std::size_t>(it - op.basis.monomials.begin()), j) = c;
        }
    }
    return op;
}

namespace {

// Indices of basis monomials in each Z/4 degree.
std::array<std::vector<std::size_t>, 4> grading_blocks(const QuotientBasis& basis) {
    std::array<std::vector<std::size_t>, 4> blocks;
    for (std::size_t i = 0; i < basis.dim(); ++i)
        blocks[static_cast<std::size_t>(basis.monomials[i].z4_degree())].push_back(i);
    return blocks;
}

void check_grading_preserved(const MultOperator& op,
                             const std::array<std::vector<std::size_t>, 4>& blocks) {
    std::vector<int> degree_of(op.basis.dim());
    for (int d = 0; d < 4; ++d)
        for (std::size_t i : blocks[static_cast<std::size_t>(d)]) degree_of[i] = d;
    for (std::size_t i = 0; i < op.basis.dim(); ++i)
        for (std::size_t j = 0; j < op.basis.dim(); ++j)
            if (!is_zero(op.matrix.at(i, j)) && degree_of[i] != degree_of[j])
                throw std::invalid_argument(
                    "kernel_graded_dims: operator does not preserve the Z/4 grading");
}

RatMatrix restrict_block(const RatMatrix& m, const std::vector<std::size_t>& idx) {
    RatMatrix b(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) b.at(i, j) = m.at(idx[i], idx[j]);
    return b;
}

}  // namespace

PoincarePoly kernel_graded_dims(const MultOperator& op) {
    auto blocks = grading_blocks(op.basis);
    check_grading_preserved(op, blocks);
    PoincarePoly p;
    for (int d = 0; d < 4; ++d) {
        const auto& idx = blocks[static_cast<std::size_t>(d)];
        p[d] = Int(static_cast<long>(idx.size() - rank(restrict_block(op.matrix, idx))));
    }
    return p;
}

PoincarePoly cokernel_graded_dims(const MultOperator& op) {
    // Square blocks: dim coker_d = dim_d - rank_d = dim ker_d.
    return kernel_graded_dims(op);
}

std::vector<Rational> char_poly(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    if (n == 0) return c;
    RatMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        c[n - k] = -m.trace() / rat(static_cast<long>(k));
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) += c[n - k];
        m = a * m;
    }
    return c;
}

bool divide_exact(std::vector<Rational>& q, const std::vector<Rational>& p,
                  const std::vector<Rational>& d) {
    if (d.empty() || is_zero(d.back())) throw std::invalid_argument("divide_exact: zero divisor");
    if (p.size() < d.size()) return false;
    std::vector<Rational> rem = p;
    q.assign(p.size() - d.size() + 1, Rational(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Rational f = rem[i + d.size() - 1] / d.back();
        q[i] = f;
        if (is_zero(f)) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
    }
    for (const Rational& x : rem)
        if (!is_zero(x)) return false;
    return true;
}

unsigned strip_factor(std::vector<Rational>& p, const std::vector<Rational>& d) {
    unsigned count = 0;
    std::vector<Rational> q;
    while (divide_exact(q, p, d)) {
        p = q;
        ++count;
        if (p.size() == 1) break;
    }
    return count;
}

bool is_constant_one(const std::vector<Rational>& p) {
    if (p.empty()) return false;
    if (p[0] != 1) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!is_zero(p[i])) return false;
    return true;
}

}  // namespace floer
