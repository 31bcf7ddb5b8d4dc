#pragma once

#include <cstdint>
#include <vector>

#include "floer/munoz.hpp"

namespace floer {

// Genus budgets for the verification suites. Defaults keep the full run in
// the minutes range with exact arithmetic; cap() applies a user override,
// bounded by per-suite ceilings past which lex Groebner bases or exact
// characteristic polynomials stop being desk-scale.
struct VerifyBudgets {
    int memberships_r = 6;
    int proportionality_g = 5;
    int section5_g = 9;
    int nilpotency_g = 6;
    int coherence_k = 14;
    int nesting_g = 7;
    int invariant_dim_g = 6;
    int paper_basis_minus_g = 8;
    int paper_basis_plus_g = 7;
    int kernel_crosscheck_g = 6;
    int eigen_confinement_g = 5;
    int three_path_g = 6;
    int tables_g = 8;
    int totaldim_g = 10;
    int invdim_g = 8;
    int sfunc_g = 12;
    int newstead_g = 10;
    int parity_g = 8;

    void cap(int max_genus);
};

// Runs every suite within budget; deterministic for a fixed seed.
std::vector<CheckResult> run_verification(Engine& engine, const VerifyBudgets& budgets,
                                          std::uint64_t seed);

}  // namespace floer
