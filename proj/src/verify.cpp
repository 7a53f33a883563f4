#include "bootperc/verify.hpp"

#include "bootperc/forbidden.hpp"
#include "bootperc/percolation.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace bootperc {

auto to_string(VerifyStatus status) -> std::string_view
{
    switch (status) {
    case VerifyStatus::match: return "match";
    case VerifyStatus::within_interval: return "within-interval";
    case VerifyStatus::mismatch: return "mismatch";
    case VerifyStatus::skipped: return "skipped";
    }
    return "skipped";
}

auto VerificationReport::exit_code() const -> int
{
    for (const auto & row : rows)
        if (row.status == VerifyStatus::mismatch)
            return 1;
    return 0;
}

auto theorem_rows(int theorem) -> int
{
    switch (theorem) {
    case 1: return 3;
    case 2: return 5;
    case 3: return 4;
    default: throw std::invalid_argument("theorem must be 1, 2 or 3, got " + std::to_string(theorem));
    }
}

namespace {

auto hits_all(std::span<const ForbiddenSubgraph> catalog, const VertexSet & seeds) -> bool
{
    for (const auto & h : catalog)
        if (!h.support.intersects(seeds))
            return false;
    return true;
}

auto verify_one(int rows, int m, const VerifyOptions & opts) -> VerificationRow
{
    VerificationRow row;
    row.rows = rows;
    row.cols = m;
    row.predicted = predicted_optimum(rows, m);

    const Grid g(rows, m);
    const auto catalog = enumerate_catalog(g);
    std::vector<std::string> problems;

    const auto built = construct(rows, m);
    row.construction_size = built.seeds.size();
    row.construction_percolates = percolates(g, 3, built.seeds);
    if (!row.construction_percolates)
        problems.push_back("construction does not percolate");
    if (row.construction_size != built.predicted_size || !row.predicted.contains(row.construction_size))
        problems.push_back("construction size " + std::to_string(row.construction_size) + " off prediction");
    if (!hits_all(catalog, built.seeds))
        problems.push_back("construction misses a forbidden subgraph");

    bool solved = false;
    if (opts.run_solver) {
        try {
            const auto report = solve_min(g, 3, opts.solve);
            solved = true;
            row.solver_value = report.optimum;
            if (!percolates(g, 3, report.witness) || report.witness.size() != report.optimum)
                problems.push_back("solver witness invalid");
            if (!hits_all(catalog, report.witness))
                problems.push_back("solver witness misses a forbidden subgraph");
            if (!row.predicted.contains(report.optimum))
                problems.push_back("solver optimum " + std::to_string(report.optimum) + " outside prediction");
        }
        catch (const BudgetExhausted & e) {
            row.solver_lower_bound = e.certified_lower_bound();
            if (e.certified_lower_bound() > row.predicted.high)
                problems.push_back("solver ruled out the predicted optimum");
            row.note = "solver budget exhausted; certified >= " + std::to_string(e.certified_lower_bound());
        }
    }

    if (!problems.empty()) {
        row.status = VerifyStatus::mismatch;
        row.note.clear();
        for (const auto & p : problems)
            row.note += (row.note.empty() ? "" : "; ") + p;
    }
    else if (!solved)
        row.status = VerifyStatus::skipped;
    else if (row.predicted.exact())
        row.status = VerifyStatus::match;
    else
        row.status = VerifyStatus::within_interval;
    return row;
}

} // namespace

auto verify_theorem(int theorem, int m_from, int m_to, const VerifyOptions & opts) -> VerificationReport
{
    const int rows = theorem_rows(theorem);
    if (m_from < rows || m_to < m_from)
        throw std::invalid_argument("length range [" + std::to_string(m_from) + ", " + std::to_string(m_to) +
                                    "] invalid for " + std::to_string(rows) + "-row grids");
    VerificationReport report;
    report.theorem = theorem;
    for (int m = m_from; m <= m_to; ++m)
        report.rows.push_back(verify_one(rows, m, opts));
    return report;
}

auto verification_json(const VerificationReport & report) -> std::string
{
    nlohmann::ordered_json j;
    j["theorem"] = report.theorem;
    auto rows = nlohmann::ordered_json::array();
    for (const auto & r : report.rows) {
        nlohmann::ordered_json item;
        item["rows"] = r.rows;
        item["cols"] = r.cols;
        item["predicted"] = {r.predicted.low, r.predicted.high};
        item["solver"] = r.solver_value ? nlohmann::ordered_json(*r.solver_value) : nlohmann::ordered_json(nullptr);
        item["solver_lower_bound"] =
            r.solver_lower_bound ? nlohmann::ordered_json(*r.solver_lower_bound) : nlohmann::ordered_json(nullptr);
        item["construction_size"] = r.construction_size;
        item["construction_percolates"] = r.construction_percolates;
        item["status"] = to_string(r.status);
        if (!r.note.empty())
            item["note"] = r.note;
        rows.push_back(std::move(item));
    }
    j["rows"] = std::move(rows);
    j["exit_code"] = report.exit_code();
    return j.dump();
}

auto verification_table(const VerificationReport & report) -> std::string
{
    std::ostringstream out;
    out << "theorem " << report.theorem << '\n';
    out << std::left << std::setw(8) << "grid" << std::setw(12) << "predicted" << std::setw(8) << "solver"
        << std::setw(14) << "construction" << "status\n";
    for (const auto & r : report.rows) {
        std::string grid = std::to_string(r.rows) + "x" + std::to_string(r.cols);
        std::string predicted = r.predicted.exact() ? std::to_string(r.predicted.low)
                                                    : "[" + std::to_string(r.predicted.low) + "," +
                                                          std::to_string(r.predicted.high) + "]";
        std::string solver = r.solver_value ? std::to_string(*r.solver_value)
                             : r.solver_lower_bound ? ">=" + std::to_string(*r.solver_lower_bound)
                                                    : "-";
        out << std::setw(8) << grid << std::setw(12) << predicted << std::setw(8) << solver << std::setw(14)
            << r.construction_size << to_string(r.status);
        if (!r.note.empty())
            out << "  (" << r.note << ")";
        out << '\n';
    }
    return out.str();
}

} // namespace bootperc
