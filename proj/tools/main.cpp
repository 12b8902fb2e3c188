// Command-line front-end: character tables, tableau counts, brute-force
// tensor traces, and identity verification sweeps.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error,
// 3 resource ceiling exceeded.

#include <hookchar/hookchar.hpp>

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hookchar::Int;
using hookchar::json;

struct int_range {
    int lo = 0;
    int hi = 0;
};

int parse_bound(const std::string& token, const std::string& flag) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": expected an integer, got '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument(flag + ": expected an integer, got '" + token + "'");
    if (v < 0) throw std::invalid_argument(flag + ": value must be non-negative");
    return v;
}

// "a" or "a..b", non-negative, a <= b.
int_range parse_range(const std::string& text, const std::string& flag) {
    const std::size_t sep = text.find("..");
    if (sep == std::string::npos) {
        const int v = parse_bound(text, flag);
        return {v, v};
    }
    int_range r{parse_bound(text.substr(0, sep), flag), parse_bound(text.substr(sep + 2), flag)};
    if (r.lo > r.hi) throw std::invalid_argument(flag + ": empty range '" + text + "'");
    return r;
}

std::string render_table_plain(const hookchar::character_table& t) {
    const std::size_t size = t.size();
    std::vector<std::vector<std::string>> grid(size + 1, std::vector<std::string>(size + 1));
    grid[0][0] = "lambda\\mu";
    for (std::size_t i = 0; i < size; ++i) {
        grid[0][i + 1] = t.partitions()[i].str();
        grid[i + 1][0] = t.partitions()[i].str();
        for (std::size_t j = 0; j < size; ++j) grid[i + 1][j + 1] = t.value(i, j).str();
    }
    std::vector<std::size_t> width(size + 1, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << (c == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    }
    return out.str();
}

int run_table(int n, const std::string& format, const std::string& cache_path, int jobs,
              const hookchar::ceilings& limits) {
    hookchar::table_cache cache;
    std::optional<hookchar::character_table> table;
    if (!cache_path.empty()) {
        cache = hookchar::table_cache::load(cache_path);
        if (const auto* hit = cache.find(n)) table = *hit;
    }
    if (!table) {
        table = hookchar::make_character_table(n, jobs, limits.table_n);
        if (!cache_path.empty()) {
            cache.put(*table);
            cache.save(cache_path);
        }
    }
    if (format == "json")
        std::cout << table->to_json().dump(2) << '\n';
    else if (format == "csv")
        std::cout << table->to_csv();
    else if (format == "latex")
        std::cout << table->to_latex();
    else
        std::cout << render_table_plain(*table);
    return 0;
}

int run_count(const std::string& shape, int k, int l, bool list, const std::string& format,
              const hookchar::ceilings& limits) {
    const hookchar::partition la = hookchar::partition::parse(shape);
    const Int count = hookchar::count_super_ssyt(la, k, l);
    std::vector<hookchar::tableau> tableaux;
    if (list) tableaux = hookchar::enumerate_super_ssyt(la, k, l, limits.list_tableaux);
    if (format == "json") {
        json j;
        json jshape;
        hookchar::to_json(jshape, la);
        j["shape"] = std::move(jshape);
        j["k"] = k;
        j["l"] = l;
        j["count"] = hookchar::int_to_json(count);
        if (list) {
            json jts = json::array();
            for (const auto& t : tableaux) {
                json jt;
                hookchar::to_json(jt, t);
                jts.push_back(std::move(jt));
            }
            j["tableaux"] = std::move(jts);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << count.str() << '\n';
        for (const auto& t : tableaux) {
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                if (r) std::cout << " / ";
                for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
                    if (c) std::cout << ' ';
                    std::cout << t.alphabet.name(t.rows[r][c]);
                }
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int run_trace(const std::string& mu_text, int k, int l, int jobs, const std::string& format,
              const hookchar::ceilings& limits) {
    const hookchar::partition mu = hookchar::partition::parse(mu_text);
    const Int trace = hookchar::trace_super(mu, k, l, limits.oracle_words, jobs);
    const Int rhs = hookchar::rhs_product(mu, k, l);
    const bool match = trace == rhs;
    if (format == "json") {
        json j;
        json jmu;
        hookchar::to_json(jmu, mu);
        j["mu"] = std::move(jmu);
        j["k"] = k;
        j["l"] = l;
        j["trace"] = hookchar::int_to_json(trace);
        j["rhs"] = hookchar::int_to_json(rhs);
        j["match"] = match;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "mu=" << mu.str() << " k=" << k << " l=" << l << " trace=" << trace.str()
                  << " rhs=" << rhs.str() << " match=" << (match ? "true" : "false") << '\n';
    }
    return match ? 0 : 1;
}

struct verify_options {
    int_range n;
    int_range k{1, 1};
    int_range l{1, 1};
    std::set<std::string> only;
    bool with_oracle = false;
    std::string format = "plain";
    std::string cache_path;
    int jobs = 1;
};

int run_verify(const verify_options& opt, const hookchar::ceilings& limits) {
    static const std::vector<std::string> families = {"main-identity", "hook-sum", "strict-hook-21", "classical"};
    for (const std::string& name : opt.only)
        if (std::find(families.begin(), families.end(), name) == families.end())
            throw std::invalid_argument("--only: unknown check '" + name + "'");
    auto selected = [&](const std::string& name) { return opt.only.empty() || opt.only.count(name) > 0; };

    hookchar::verify_context ctx(limits, opt.jobs);
    hookchar::table_cache cache;
    if (!opt.cache_path.empty()) {
        cache = hookchar::table_cache::load(opt.cache_path);
        for (int n : cache.stored()) ctx.adopt(*cache.find(n));
    }
    const auto mode = opt.with_oracle ? hookchar::oracle_mode::automatic : hookchar::oracle_mode::off;

    std::vector<hookchar::verification_report> reports;
    if (selected("main-identity"))
        for (int n = opt.n.lo; n <= opt.n.hi; ++n)
            for (int k = opt.k.lo; k <= opt.k.hi; ++k)
                for (int l = opt.l.lo; l <= opt.l.hi; ++l)
                    reports.push_back(hookchar::verify_main_identity(ctx, n, k, l, mode));
    if (selected("hook-sum"))
        for (int n = std::max(1, opt.n.lo); n <= opt.n.hi; ++n)
            reports.push_back(hookchar::verify_hook_sum(ctx, n));
    if (selected("strict-hook-21"))
        for (int n = std::max(2, opt.n.lo); n <= opt.n.hi; ++n)
            reports.push_back(hookchar::verify_21_corollary(ctx, n));
    if (selected("classical"))
        for (int n = opt.n.lo; n <= opt.n.hi; ++n)
            for (int k = opt.k.lo; k <= opt.k.hi; ++k)
                reports.push_back(hookchar::verify_classical(ctx, n, k, mode));

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.all_pass;

    if (opt.format == "json") {
        json j;
        json jr = json::array();
        for (const auto& r : reports) jr.push_back(hookchar::report_to_json(r));
        j["reports"] = std::move(jr);
        j["all_pass"] = all_pass;
        std::cout << j.dump(2) << '\n';
    } else if (opt.format == "csv") {
        std::cout << hookchar::report_csv_header() << '\n';
        for (const auto& r : reports) std::cout << hookchar::report_to_csv(r, false);
    } else if (opt.format == "latex") {
        for (const auto& r : reports) std::cout << hookchar::report_to_latex(r) << '\n';
    } else {
        for (const auto& r : reports) std::cout << hookchar::report_to_plain(r);
        std::cout << (all_pass ? "OK" : "FAILED") << ": " << reports.size() << " report(s)\n";
    }

    if (!opt.cache_path.empty()) {
        for (const auto& [n, t] : ctx.tables()) cache.put(t);
        cache.save(opt.cache_path);
    }
    return all_pass ? 0 : 1;
}

int run_cache(const std::string& path, const std::optional<std::string>& build, int jobs,
              const hookchar::ceilings& limits) {
    hookchar::table_cache cache = hookchar::table_cache::load(path);
    if (build) {
        const int_range r = parse_range(*build, "--build");
        for (int n = r.lo; n <= r.hi; ++n)
            if (!cache.find(n)) cache.put(hookchar::make_character_table(n, jobs, limits.table_n));
        cache.save(path);
    }
    json j;
    j["path"] = path;
    j["format_version"] = hookchar::table_cache::format_version;
    j["stored"] = cache.stored();
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact S_n character tables, (k,l)-semistandard tableau counts, brute-force graded tensor traces, and "
        "verification sweeps over the character-sum identities that tie them together."};
    app.require_subcommand(1);
    const std::vector<std::string> formats = {"json", "csv", "latex", "plain"};

    auto* table_cmd = app.add_subcommand("table", "Print the character table of S_n");
    int table_n = 0;
    std::string table_format = "plain";
    std::string table_cache_path;
    int table_jobs = 1;
    table_cmd->add_option("--n", table_n, "Symmetric group degree")->required();
    table_cmd->add_option("--format", table_format, "Output format")->check(CLI::IsMember(formats));
    table_cmd->add_option("--cache", table_cache_path, "Table cache file to read and update");
    table_cmd->add_option("--jobs", table_jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* count_cmd = app.add_subcommand("count", "Count (k,l)-semistandard tableaux of a shape");
    std::string count_shape;
    int count_k = 0;
    int count_l = 0;
    bool count_list = false;
    std::string count_format = "plain";
    count_cmd->add_option("--shape", count_shape, "Partition, comma-separated decreasing parts (e.g. 3,1)")
        ->required();
    count_cmd->add_option("--k", count_k, "Even letters")->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--l", count_l, "Odd letters")->check(CLI::NonNegativeNumber);
    count_cmd->add_flag("--list", count_list, "List the tableaux as well");
    count_cmd->add_option("--format", count_format, "Output format")->check(CLI::IsMember({"json", "plain"}));

    auto* trace_cmd = app.add_subcommand("trace", "Brute-force trace of the signed action on (V0+V1)^n");
    std::string trace_mu;
    int trace_k = 0;
    int trace_l = 0;
    int trace_jobs = 1;
    std::string trace_format = "json";
    trace_cmd->add_option("--mu", trace_mu, "Cycle type, comma-separated decreasing parts")->required();
    trace_cmd->add_option("--k", trace_k, "dim V0")->check(CLI::NonNegativeNumber);
    trace_cmd->add_option("--l", trace_l, "dim V1")->check(CLI::NonNegativeNumber);
    trace_cmd->add_option("--jobs", trace_jobs, "Worker threads")->check(CLI::PositiveNumber);
    trace_cmd->add_option("--format", trace_format, "Output format")->check(CLI::IsMember({"json", "plain"}));

    auto* verify_cmd = app.add_subcommand("verify", "Verify the character-sum identities over a parameter grid");
    std::string verify_n, verify_k = "1", verify_l = "1";
    verify_options vopt;
    std::vector<std::string> verify_only;
    verify_cmd->add_option("--n", verify_n, "Degree or range a..b")->required();
    verify_cmd->add_option("--k", verify_k, "k or range a..b (main-identity and classical)");
    verify_cmd->add_option("--l", verify_l, "l or range a..b (main-identity)");
    verify_cmd
        ->add_option("--only", verify_only,
                     "Restrict to checks: main-identity, hook-sum, strict-hook-21, classical (repeatable)")
        ->delimiter(',');
    verify_cmd->add_flag("--with-oracle", vopt.with_oracle, "Attach the brute-force trace where feasible");
    verify_cmd->add_option("--format", vopt.format, "Output format")->check(CLI::IsMember(formats));
    verify_cmd->add_option("--cache", vopt.cache_path, "Table cache file to read and update");
    verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* cache_cmd = app.add_subcommand("cache", "Inspect or extend a character table cache file");
    std::string cache_path;
    std::optional<std::string> cache_build;
    int cache_jobs = 1;
    cache_cmd->add_option("--path", cache_path, "Cache file")->required();
    cache_cmd->add_option("--build", cache_build, "Build and store tables for degree or range a..b");
    cache_cmd->add_option("--jobs", cache_jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const hookchar::ceilings limits = hookchar::ceilings::from_env();
        if (app.got_subcommand(table_cmd)) return run_table(table_n, table_format, table_cache_path, table_jobs, limits);
        if (app.got_subcommand(count_cmd))
            return run_count(count_shape, count_k, count_l, count_list, count_format, limits);
        if (app.got_subcommand(trace_cmd))
            return run_trace(trace_mu, trace_k, trace_l, trace_jobs, trace_format, limits);
        if (app.got_subcommand(verify_cmd)) {
            vopt.n = parse_range(verify_n, "--n");
            vopt.k = parse_range(verify_k, "--k");
            vopt.l = parse_range(verify_l, "--l");
            vopt.only.insert(verify_only.begin(), verify_only.end());
            return run_verify(vopt, limits);
        }
        if (app.got_subcommand(cache_cmd)) return run_cache(cache_path, cache_build, cache_jobs, limits);
    } catch (const hookchar::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable with require_subcommand(1)
}
