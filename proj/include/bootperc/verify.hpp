#pragma once

#include "bootperc/constructions.hpp"
#include "bootperc/solver.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bootperc {

enum class VerifyStatus
{
    match,
    within_interval,
    mismatch,
    skipped,
};

auto to_string(VerifyStatus status) -> std::string_view;

/// One grid width x length checked against the closed forms.
struct VerificationRow
{
    int rows = 0;
    int cols = 0;
    OptimumRange predicted;
    std::optional<int> solver_value;
    /// Set when the solver ran out of budget: no seed set below this size percolates.
    std::optional<int> solver_lower_bound;
    int construction_size = 0;
    bool construction_percolates = false;
    VerifyStatus status = VerifyStatus::skipped;
    std::string note;
};

struct VerifyOptions
{
    bool run_solver = true;
    SolveOptions solve = default_solve_options();

    /// Independent certification: no closed-form starting bound, node budget of 5M.
    static auto default_solve_options() -> SolveOptions
    {
        SolveOptions o;
        o.use_formula_bound = false;
        o.node_budget = 5'000'000;
        return o;
    }
};

struct VerificationReport
{
    int theorem = 0;
    std::vector<VerificationRow> rows;

    /// 0 when no row mismatches, 1 otherwise.
    auto exit_code() const -> int;
};

/// Grid width checked by verification target 1, 2, 3 (3, 5, 4 rows). Throws std::invalid_argument otherwise.
auto theorem_rows(int theorem) -> int;

/**
 * For each m in [m_from, m_to]: build the construction and check it
 * percolates, has the predicted size and meets every forbidden subgraph;
 * run the solver when it fits the node budget and compare.
 */
auto verify_theorem(int theorem, int m_from, int m_to, const VerifyOptions & opts = {}) -> VerificationReport;

auto verification_json(const VerificationReport & report) -> std::string;
auto verification_table(const VerificationReport & report) -> std::string;

} // namespace bootperc
