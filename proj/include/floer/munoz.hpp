#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "floer/groebner.hpp"
#include "floer/polynomial.hpp"

namespace floer {

// The four recursive generator families. All satisfy zeta_k = 0 for k < 0
// and zeta_0 = 1.
//
//   Full:      zeta_{k+1} = alpha*zeta_k + k^2(beta + (-1)^k 8) zeta_{k-1}
//                           + 2k(k-1) gamma zeta_{k-2}
//   Plus:      image of Full under beta -> +8 (built by its own recursion)
//   Minus:     image of Full under beta -> -8 (built by its own recursion)
//   Classical: the deformation term removed, beta set to 0:
//              zeta'_{k+1} = alpha*zeta'_k + 2k(k-1) gamma zeta'_{k-2}
enum class ZetaKind { Full, Plus, Minus, Classical };

// Ideal families. Every kind is generated by three consecutive zetas of the
// matching generator family; the I kinds take their gamma = 0 images and
// live in Q[alpha].
enum class IdealKind { J, Jplus, Jminus, Jclassical, Iplus, Iminus };

VarSet vars_for(IdealKind kind);
ZetaKind zeta_kind_for(IdealKind kind);
std::string ideal_kind_name(IdealKind kind);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Evaluation at the quotient's simultaneous eigenvalue pairs. The minus
// family evaluates at (sign*4(g-2j), 0); the plus family evaluates at a
// purely imaginary alpha, returned as (real, imaginary) parts computed by
// the substitution alpha^2 -> -16(g-2j)^2.
struct EvValue {
    Rational re, im;
};
EvValue ev_map(int g, int j, int sign, ZetaKind family, const Polynomial& p);

// Shared computation state: memoized zeta families and Groebner bases.
// Caches are append-only behind a mutex; distinct-genus work may run
// concurrently.
class Engine {
public:
    explicit Engine(bool corrupt_zeta = false) : corrupt_zeta_(corrupt_zeta) {}

    Polynomial zeta(ZetaKind kind, int k);

    // Generators (zeta_g, zeta_{g+1}, zeta_{g+2}) of the requested family.
    std::vector<Polynomial> ideal_generators(IdealKind kind, int genus);

    const GroebnerBasis& groebner(IdealKind kind, int genus);

    // Smallest n >= 1 with (beta^2 - 64)^n in J_g, by incremental powering
    // of normal forms.
    int nilpotency_degree(int genus);

    // beta_r = beta + (-1)^r 8; the beta_-, beta_+ monomial helpers of the
    // membership lemmas.
    static Polynomial beta_r(int r);
    static Polynomial phi(int r);
    static Polynomial psi(int r);
    static Polynomial rho(int j);
    static Polynomial eta(int j);

private:
    bool corrupt_zeta_;
    std::mutex mutex_;
    std::map<ZetaKind, std::vector<Polynomial>> zeta_cache_;
    std::map<std::pair<int, int>, GroebnerBasis> gb_cache_;

    Polynomial compute_zeta(ZetaKind kind, int k, const std::vector<Polynomial>& lower);
};

// Membership checks rho_j phi_{r-j} zeta_{r-j} in J_r and
// alpha eta_j psi_{r-j} zeta_{r-j} in J_r, for all 0 <= j <= r <= r_max.
std::vector<CheckResult> check_lemma_memberships(Engine& engine, int r_max);

// For g odd: beta_-^{j+(g-1)/2} beta_+^{g-1} zeta_{g-2j-1} is a positive
// rational multiple of gamma^{g-1} modulo J_g; records each constant.
std::vector<CheckResult> check_lemma_proportionality(Engine& engine, int g_max);

// Structural identities of the specialized ideals: generation by
// (zeta_g, gamma * J_{g-2}) for the right parities, the odd/even index
// collapses, the gamma-jump contrapositive (seeded sample), and the small
// non-membership facts.
std::vector<CheckResult> check_section5_structure(Engine& engine, int g_max, std::uint64_t seed);

}  // namespace floer
