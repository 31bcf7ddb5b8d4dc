#pragma once

#include <array>
#include <string>
#include <vector>

#include "floer/monomial.hpp"
#include "floer/rational.hpp"

namespace floer {

// Element of Z[t]/(t^4-1): the mod-4 graded dimension vector of a quotient
// ring or homology group.
class PoincarePoly {
public:
    PoincarePoly() : c_{Int(0), Int(0), Int(0), Int(0)} {}
    explicit PoincarePoly(std::array<Int, 4> c) : c_(std::move(c)) {}

    static PoincarePoly one() { return monomial(0); }
    static PoincarePoly monomial(int k, Int coeff = Int(1)) {
        PoincarePoly p;
        p.c_[((k % 4) + 4) % 4] = std::move(coeff);
        return p;
    }

    const Int& operator[](int i) const { return c_[((i % 4) + 4) % 4]; }
    Int& operator[](int i) { return c_[((i % 4) + 4) % 4]; }

    Int total() const { return c_[0] + c_[1] + c_[2] + c_[3]; }
    bool is_zero() const { return total() == 0 && c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    // Multiplication by t^k in Z[t]/(t^4-1).
    PoincarePoly shifted(int k) const {
        PoincarePoly r;
        for (int i = 0; i < 4; ++i) r[i + k] = c_[i];
        return r;
    }

    PoincarePoly& operator+=(const PoincarePoly& q) {
        for (int i = 0; i < 4; ++i) c_[i] += q.c_[i];
        return *this;
    }
    friend PoincarePoly operator+(PoincarePoly p, const PoincarePoly& q) { return p += q; }

    friend PoincarePoly operator*(const PoincarePoly& p, const PoincarePoly& q) {
        PoincarePoly r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i + j] += p.c_[i] * q.c_[j];
        return r;
    }

    friend PoincarePoly operator*(const Int& s, const PoincarePoly& p) {
        PoincarePoly r;
        for (int i = 0; i < 4; ++i) r.c_[i] = s * p.c_[i];
        return r;
    }

    friend bool operator==(const PoincarePoly& p, const PoincarePoly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const PoincarePoly& p, const PoincarePoly& q) { return !(p == q); }

    // The mapping-cone factor (1 + t^3) applied to a kernel polynomial.
    PoincarePoly cone() const { return *this + shifted(3); }

    std::string str() const;

private:
    std::array<Int, 4> c_;
};

// Counts a monomial set by Z/4 degree.
PoincarePoly z4_poincare_of_monomials(const std::vector<Monomial>& monomials);

}  // namespace floer
