#pragma once

#include "hookchar/characters.hpp"
#include "hookchar/common.hpp"
#include "hookchar/partition.hpp"
#include "hookchar/tableaux.hpp"
#include "hookchar/tensor_sim.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <sstream>

namespace hookchar {

enum class check_kind { main_identity, hook_sum, strict_hook_21, classical };

inline std::string check_name(check_kind kind) {
    switch (kind) {
        case check_kind::main_identity: return "main-identity";
        case check_kind::hook_sum: return "hook-sum";
        case check_kind::strict_hook_21: return "strict-hook-21";
        case check_kind::classical: return "classical";
    }
    throw std::invalid_argument("unknown check kind");
}

enum class oracle_mode { off, automatic };

struct report_row {
    partition mu;
    Int lhs;
    Int rhs;
    std::optional<Int> oracle;   // brute-force trace, when attached
    bool oracle_skipped = false; // oracle wanted but over the word ceiling
    bool pass = false;
};

struct verification_report {
    check_kind kind;
    int n = 0;
    int k = 0;
    int l = 0;
    std::vector<report_row> rows;
    bool all_pass = true;
    long long elapsed_ms = 0;  // in-memory only; serialized renders stay byte-stable
};

// Shared state for a verification sweep: resource limits, worker count, and
// the character tables built (or adopted from a cache) so far.
class verify_context {
public:
    explicit verify_context(ceilings limits = default_ceilings, int jobs = 1) : limits_(limits), jobs_(jobs) {}

    const ceilings& limits() const { return limits_; }
    int jobs() const { return jobs_; }

    const character_table& table(int n) {
        auto it = tables_.find(n);
        if (it == tables_.end()) it = tables_.emplace(n, make_character_table(n, jobs_, limits_.table_n)).first;
        return it->second;
    }

    void adopt(character_table t) {
        const int n = t.n();
        tables_.insert_or_assign(n, std::move(t));
    }

    const std::map<int, character_table>& tables() const { return tables_; }

private:
    ceilings limits_;
    int jobs_;
    std::map<int, character_table> tables_;
};

namespace detail {

inline bool oracle_feasible(int n, int d, long long max_words) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (d == 0) return true;  // zero or one word
        if (total > max_words / d) return false;
        total *= d;
    }
    return total <= max_words;
}

struct timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Shared shape of the two character-sum checks: lhs = sum of coeff(lambda) *
// chi^lambda(mu) over the lambdas with nonzero coefficient, rhs and optional
// oracle supplied per mu.
template <typename Rhs, typename Oracle, typename RowPass>
verification_report run_character_sum(verify_context& ctx, check_kind kind, int n, int k, int l,
                                      const std::vector<std::pair<partition, Int>>& coeffs, Rhs&& rhs_of,
                                      Oracle&& oracle_of, bool want_oracle, RowPass&& row_pass) {
    timer t;
    verification_report report;
    report.kind = kind;
    report.n = n;
    report.k = k;
    report.l = l;
    const character_table& table = ctx.table(n);
    std::vector<std::size_t> coeff_idx;
    coeff_idx.reserve(coeffs.size());
    for (const auto& [la, c] : coeffs) coeff_idx.push_back(table.index_of(la));
    const bool feasible = oracle_feasible(n, k + l, ctx.limits().oracle_words);
    for (std::size_t m = 0; m < table.size(); ++m) {
        const partition& mu = table.partitions()[m];
        report_row row;
        row.mu = mu;
        row.lhs = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) row.lhs += coeffs[i].second * table.value(coeff_idx[i], m);
        row.rhs = rhs_of(mu);
        if (want_oracle) {
            if (feasible)
                row.oracle = oracle_of(mu);
            else
                row.oracle_skipped = true;
        }
        row.pass = row.lhs == row.rhs && (!row.oracle || *row.oracle == row.lhs) && row_pass(mu, row);
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    report.elapsed_ms = t.ms();
    return report;
}

}  // namespace detail

// Sum over the (k,l)-hook of s_{k,l}(lambda) * chi^lambda(mu) against the
// product over cycle lengths of (k + (-1)^(mu_j+1) l), for every mu of n;
// the brute-force tensor trace is attached as a third value where feasible.
inline verification_report verify_main_identity(verify_context& ctx, int n, int k, int l,
                                                oracle_mode mode = oracle_mode::automatic) {
    if (n < 0 || k < 0 || l < 0) throw std::invalid_argument("verify_main_identity: arguments must be non-negative");
    std::vector<std::pair<partition, Int>> coeffs;
    for (const partition& la : hook_partitions(k, l, n, std::max(n, default_ceilings.partition_n)))
        coeffs.emplace_back(la, count_super_ssyt(la, k, l));
    return detail::run_character_sum(
        ctx, check_kind::main_identity, n, k, l, coeffs, [&](const partition& mu) { return rhs_product(mu, k, l); },
        [&](const partition& mu) { return trace_super(mu, k, l, ctx.limits().oracle_words, ctx.jobs()); },
        mode == oracle_mode::automatic, [](const partition&, const report_row&) { return true; });
}

// The hook-character sum chi_n(mu) = sum over hooks (n-i,1^i) of chi(mu):
// zero when mu has an even part, 2^(length-1) when all parts are odd. Each
// row also cross-checks 2*rhs against the (1,1) product, which is the same
// statement read off the main identity.
inline verification_report verify_hook_sum(verify_context& ctx, int n) {
    if (n < 1) throw std::invalid_argument("verify_hook_sum: n must be at least 1");
    std::vector<std::pair<partition, Int>> coeffs;
    for (int i = 0; i < n; ++i) {
        std::vector<int> parts{n - i};
        parts.insert(parts.end(), static_cast<std::size_t>(i), 1);
        coeffs.emplace_back(partition(std::move(parts)), Int(1));
    }
    auto rhs_of = [](const partition& mu) -> Int {
        for (int p : mu.parts())
            if (p % 2 == 0) return 0;
        return int_pow(Int(2), mu.num_parts() - 1);
    };
    return detail::run_character_sum(
        ctx, check_kind::hook_sum, n, 1, 1, coeffs, rhs_of, [](const partition&) { return Int(0); }, false,
        [](const partition& mu, const report_row& row) { return 2 * row.rhs == rhs_product(mu, 1, 1); });
}

// Sum over the strict (2,1)-hook of (lambda_1 - lambda_2 + 1) * chi^lambda(mu)
// against (prod_j (2 + (-1)^(mu_j+1)) - (2n+1))/4; the division must be exact
// and rows fail if it is not.
inline verification_report verify_21_corollary(verify_context& ctx, int n) {
    if (n < 2) throw std::invalid_argument("verify_21_corollary: n must be at least 2");
    std::vector<std::pair<partition, Int>> coeffs;
    for (const partition& la : partitions_of(n, std::max(n, default_ceilings.partition_n)))
        if (in_strict_hook(la, 2, 1)) coeffs.emplace_back(la, Int(la.part(1) - la.part(2) + 1));
    auto rhs_of = [&](const partition& mu) -> Int {
        const Int numer = rhs_product(mu, 2, 1) - (2 * n + 1);
        return numer / 4;  // exactness asserted per row below
    };
    return detail::run_character_sum(
        ctx, check_kind::strict_hook_21, n, 2, 1, coeffs, rhs_of, [](const partition&) { return Int(0); }, false,
        [&](const partition& mu, const report_row&) { return (rhs_product(mu, 2, 1) - (2 * n + 1)) % 4 == 0; });
}

// Classical specialization l = 0: sum over lambdas with at most k rows of
// s_k(lambda) * chi^lambda(mu) against k^(length of mu).
inline verification_report verify_classical(verify_context& ctx, int n, int k,
                                            oracle_mode mode = oracle_mode::automatic) {
    if (n < 0 || k < 0) throw std::invalid_argument("verify_classical: arguments must be non-negative");
    std::vector<std::pair<partition, Int>> coeffs;
    for (const partition& la : hook_partitions(k, 0, n, std::max(n, default_ceilings.partition_n)))
        coeffs.emplace_back(la, count_ssyt(la, k));
    return detail::run_character_sum(
        ctx, check_kind::classical, n, k, 0, coeffs,
        [&](const partition& mu) { return int_pow(Int(k), mu.num_parts()); },
        [&](const partition& mu) { return trace_super(mu, k, 0, ctx.limits().oracle_words, ctx.jobs()); },
        mode == oracle_mode::automatic, [](const partition&, const report_row&) { return true; });
}

inline json report_to_json(const verification_report& report) {
    json j;
    j["check"] = check_name(report.kind);
    j["n"] = report.n;
    j["k"] = report.k;
    j["l"] = report.l;
    json rows = json::array();
    for (const report_row& row : report.rows) {
        json jr;
        json jmu;
        to_json(jmu, row.mu);
        jr["mu"] = std::move(jmu);
        jr["lhs"] = int_to_json(row.lhs);
        jr["rhs"] = int_to_json(row.rhs);
        if (row.oracle)
            jr["oracle"] = int_to_json(*row.oracle);
        else if (row.oracle_skipped)
            jr["oracle"] = "skipped";
        jr["pass"] = row.pass;
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["all_pass"] = report.all_pass;
    return j;
}

inline std::string report_csv_header() { return "check,n,k,l,mu,lhs,rhs,oracle,pass"; }

inline std::string report_to_csv(const verification_report& report, bool with_header = true) {
    std::ostringstream out;
    if (with_header) out << report_csv_header() << '\n';
    for (const report_row& row : report.rows) {
        out << check_name(report.kind) << ',' << report.n << ',' << report.k << ',' << report.l << ','
            << csv_quote(row.mu.str()) << ',' << row.lhs.str() << ',' << row.rhs.str() << ',';
        if (row.oracle)
            out << row.oracle->str();
        else if (row.oracle_skipped)
            out << "skipped";
        out << ',' << (row.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

inline std::string report_to_latex(const verification_report& report) {
    std::ostringstream out;
    out << "% " << check_name(report.kind) << ", n=" << report.n << ", k=" << report.k << ", l=" << report.l
        << "\n";
    out << "\\begin{tabular}{lrrrl}\n\\hline\n";
    out << "$\\mu$ & lhs & rhs & oracle & pass \\\\\n\\hline\n";
    for (const report_row& row : report.rows) {
        out << row.mu.str() << " & " << row.lhs.str() << " & " << row.rhs.str() << " & ";
        if (row.oracle)
            out << row.oracle->str();
        else if (row.oracle_skipped)
            out << "skipped";
        else
            out << "--";
        out << " & " << (row.pass ? "yes" : "no") << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

inline std::string report_to_plain(const verification_report& report) {
    std::ostringstream out;
    out << check_name(report.kind) << " n=" << report.n << " k=" << report.k << " l=" << report.l << " ("
        << report.rows.size() << " classes, " << report.elapsed_ms << " ms)\n";
    for (const report_row& row : report.rows) {
        out << "  mu=" << row.mu.str() << "  lhs=" << row.lhs.str() << "  rhs=" << row.rhs.str();
        if (row.oracle) out << "  oracle=" << row.oracle->str();
        if (row.oracle_skipped) out << "  oracle=skipped";
        out << "  " << (row.pass ? "pass" : "FAIL") << '\n';
    }
    out << (report.all_pass ? "  all classes pass" : "  FAILURES PRESENT") << '\n';
    return out.str();
}

}  // namespace hookchar
