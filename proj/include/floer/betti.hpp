#pragma once

#include <array>
#include <string>
#include <vector>

#include "floer/munoz.hpp"
#include "floer/poincare.hpp"
#include "floer/rational.hpp"

namespace floer {

// Binomial coefficient with the clamping convention C(n,k) = 0 for k < 0 or
// k > n, used by every formula below.
Int binom(long n, long k);

// Parity shift of the table layout: 1 for odd genus, 0 for even.
int epsilon(int g);

// s_i(g) = sum of C(2g,k) over 0 <= k < g with k = i (mod 4).
Int s_func(int i, int g);

// Coefficients of the Poincare polynomial of the stable-bundle moduli space
// N^g, degrees 0..6g-6:
//   ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4)).
// Throws std::runtime_error when the division leaves a remainder.
std::vector<Int> poincare_Ng(int g);

// Betti numbers h_0..h_{6g-3} of the framed moduli space N_0^g.
std::vector<Int> newstead_h(int g);

// Mod-4 collapse of newstead_h.
std::array<Int, 4> newstead_mod4_collapse(int g);

// Graded betti numbers of two copies of N_0^g (twice the collapse),
// absolute Z/4 labels.
std::array<Int, 4> critical_betti(int g);

// Framed betti numbers from the closed forms, absolute Z/4 labels, with the
// signed splitting (plus = mapping cone of u+8, minus = of u-8).
struct FramedBetti {
    std::array<Int, 4> total, plus, minus;
};
FramedBetti framed_betti_closed_form(int g);

// Framed Poincare polynomial assembled from Groebner quotient data:
//   (1+t^3) sum_k (C(2g,k) - C(2g,k-2)) t^{3k} P_t(K_{g-k})
// with sign +1 / -1 selecting the kernel of beta+8 / beta-8 (the minus /
// plus specialized ideals respectively) and 0 their sum.
PoincarePoly framed_poincare_assembly(Engine& engine, int g, int sign);

// Same quantity from exact linear algebra: graded kernel and cokernel of
// the multiplication operator on each three-variable quotient.
PoincarePoly framed_cone_linear_algebra(Engine& engine, int g, int sign);

// The classical analogue of the assembly with the J' ideals; equals the
// mod-4 collapse of newstead_h.
PoincarePoly classical_assembly(Engine& engine, int g);

// Invariant-part dimensions: closed-form total g(g+1) + 2*[g+2 = 0 mod 4]
// and the two signed cone polynomials (1+t^3) P_t(J_g^-+).
struct InvariantDims {
    Int total_closed_form;
    PoincarePoly plus, minus;
};
InvariantDims invariant_framed_dims(Engine& engine, int g);

// Everything computed for one genus, for machine-readable output. Absolute
// Z/4 labels throughout; the epsilon relabeling is presentation-only.
struct GenusReport {
    int genus = 0;
    int eps = 0;
    int nilpotency_computed = -1;  // -1 when not requested
    int nilpotency_closed_form = 0;
    bool nilpotency_match = true;
    std::array<Int, 4> framed, framed_plus, framed_minus, critical;
    std::vector<Int> newstead;
    Int framed_total, critical_total, invariant_total;
    std::vector<std::string> framed_paths;  // provenance of the framed numbers
    bool paths_agree = true;
};

struct ReportOptions {
    bool with_nilpotency = false;
    bool with_assembly = false;
    bool with_cone = false;
};

GenusReport build_genus_report(Engine& engine, int g, const ReportOptions& options);

}  // namespace floer
