#pragma once

#include "hookchar/common.hpp"
#include "hookchar/partition.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace hookchar {

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// z_mu = prod_i i^{m_i} m_i! over the multiplicities m_i of part i.
inline Int zed(const partition& mu) {
    Int z = 1;
    int run_part = 0;
    int run_len = 0;
    for (int p : mu.parts()) {
        if (p != run_part) {
            run_part = p;
            run_len = 0;
        }
        ++run_len;
        z *= p;        // one factor of the part per occurrence
        z *= run_len;  // accumulates m_i! across the run
    }
    return z;
}

// |C_mu| = n!/z_mu, the number of permutations of cycle type mu.
inline Int class_size(const partition& mu) { return factorial(mu.n()) / zed(mu); }

// All border strips of size `strip` removable from la, as (remaining shape,
// height) pairs where height is rows-spanned minus one. Strips are indexed by
// their starting row, top to bottom. Works on the first-column hook lengths
// (beta-set): removing a strip of size t moves one beta down by t into a free
// slot, and the height is the number of betas it jumps over.
inline std::vector<std::pair<partition, int>> border_strip_removals(const partition& la, int strip) {
    if (strip < 1) throw std::invalid_argument("border strip size must be positive");
    std::vector<std::pair<partition, int>> out;
    const int m = la.num_parts();
    std::vector<int> beta(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) beta[static_cast<std::size_t>(i)] = la.parts()[static_cast<std::size_t>(i)] + (m - 1 - i);
    for (int i = 0; i < m; ++i) {
        const int target = beta[static_cast<std::size_t>(i)] - strip;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = i + 1; j < m; ++j) {  // only betas below i can collide or be jumped
            if (beta[static_cast<std::size_t>(j)] == target) {
                occupied = true;
                break;
            }
            if (beta[static_cast<std::size_t>(j)] > target) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<std::size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts;
        parts.reserve(nb.size());
        for (int r = 0; r < m; ++r) {
            const int v = nb[static_cast<std::size_t>(r)] - (m - 1 - r);
            if (v > 0) parts.push_back(v);
        }
        out.emplace_back(partition(std::move(parts)), height);
    }
    return out;
}

// Murnaghan-Nakayama evaluation of chi^lambda at one fixed cycle type,
// memoized on (remaining shape, consumed-part index). Parts of mu are
// consumed in decreasing order. Instances may be shared across threads;
// memo writes are idempotent.
class character_evaluator {
public:
    explicit character_evaluator(partition mu) : mu_(std::move(mu)) {}

    const partition& mu() const { return mu_; }

    Int value(const partition& la) {
        if (la.n() != mu_.n())
            throw std::invalid_argument("character: |lambda| = " + std::to_string(la.n()) +
                                        " but |mu| = " + std::to_string(mu_.n()));
        return eval(la, 0);
    }

private:
    struct key {
        std::vector<int> parts;
        int idx;
        bool operator==(const key&) const = default;
    };
    struct key_hash {
        std::size_t operator()(const key& k) const noexcept {
            std::size_t h = 1469598103934665603ull;
            auto mix = [&h](std::size_t v) {
                h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            };
            for (int p : k.parts) mix(static_cast<std::size_t>(p));
            mix(static_cast<std::size_t>(k.idx) | (std::size_t{1} << 32));
            return h;
        }
    };

    Int eval(const partition& la, int idx) {
        if (idx == mu_.num_parts()) return la.empty() ? 1 : 0;
        key k{la.parts(), idx};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = memo_.find(k);
            if (it != memo_.end()) return it->second;
        }
        Int acc = 0;
        for (const auto& [rest, height] : border_strip_removals(la, mu_.parts()[static_cast<std::size_t>(idx)])) {
            if (height % 2 == 0)
                acc += eval(rest, idx + 1);
            else
                acc -= eval(rest, idx + 1);
        }
        {
            std::lock_guard<std::mutex> lock(mutex_);
            memo_.emplace(std::move(k), acc);
        }
        return acc;
    }

    partition mu_;
    std::unordered_map<key, Int, key_hash> memo_;
    std::mutex mutex_;
};

// One-shot chi^lambda(mu).
inline Int character(const partition& la, const partition& mu) {
    character_evaluator ev(mu);
    return ev.value(la);
}

// chi^lambda(1^n) by the hook-length formula n!/prod(hooks); independent of
// the Murnaghan-Nakayama path.
inline Int dimension(const partition& la) {
    if (la.empty()) return 1;
    const partition conj = conjugate(la);
    Int hooks = 1;
    for (int i = 0; i < la.num_parts(); ++i) {
        const int row = la.parts()[static_cast<std::size_t>(i)];
        for (int j = 0; j < row; ++j)
            hooks *= row - j + conj.parts()[static_cast<std::size_t>(j)] - i - 1;
    }
    return factorial(la.n()) / hooks;
}

// Complete table of chi^lambda(mu) for lambda, mu |- n, rows and columns both
// in partitions_of(n) order.
class character_table {
public:
    character_table(int n, std::vector<partition> parts, std::vector<std::vector<Int>> values)
        : n_(n), parts_(std::move(parts)), values_(std::move(values)) {
        if (values_.size() != parts_.size())
            throw std::invalid_argument("character_table: row count mismatch");
        for (const auto& row : values_)
            if (row.size() != parts_.size())
                throw std::invalid_argument("character_table: column count mismatch");
    }

    int n() const { return n_; }
    const std::vector<partition>& partitions() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    const Int& value(std::size_t lambda_idx, std::size_t mu_idx) const {
        return values_.at(lambda_idx).at(mu_idx);
    }

    std::size_t index_of(const partition& p) const {
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i] == p) return i;
        throw std::invalid_argument("character_table: " + p.str() + " is not a partition of " + std::to_string(n_));
    }

    bool operator==(const character_table& other) const {
        return n_ == other.n_ && parts_ == other.parts_ && values_ == other.values_;
    }

    json to_json() const {
        json j;
        j["n"] = n_;
        json labels = json::array();
        for (const auto& p : parts_) {
            json jp;
            hookchar::to_json(jp, p);
            labels.push_back(jp);
        }
        j["lambdas"] = labels;
        j["mus"] = labels;
        json rows = json::array();
        for (const auto& row : values_) {
            json jrow = json::array();
            for (const Int& v : row) jrow.push_back(int_to_json(v));
            rows.push_back(std::move(jrow));
        }
        j["values"] = std::move(rows);
        return j;
    }

    static character_table from_json(const json& j) {
        const int n = j.at("n").get<int>();
        std::vector<partition> parts;
        for (const auto& jp : j.at("lambdas")) {
            partition p;
            hookchar::from_json(jp, p);
            parts.push_back(std::move(p));
        }
        std::vector<std::vector<Int>> values;
        for (const auto& jrow : j.at("values")) {
            std::vector<Int> row;
            row.reserve(jrow.size());
            for (const auto& jv : jrow) row.push_back(json_to_int(jv));
            values.push_back(std::move(row));
        }
        return character_table(n, std::move(parts), std::move(values));
    }

    // Rows lambda, columns mu, canonical order, header row and column.
    std::string to_csv() const {
        std::ostringstream out;
        out << "lambda\\mu";
        for (const auto& p : parts_) out << ',' << csv_quote(p.str());
        out << '\n';
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            out << csv_quote(parts_[r].str());
            for (std::size_t c = 0; c < parts_.size(); ++c) out << ',' << values_[r][c].str();
            out << '\n';
        }
        return out.str();
    }

    std::string to_latex() const {
        std::ostringstream out;
        out << "% character table of S_" << n_ << "\n";
        out << "\\begin{tabular}{l";
        for (std::size_t c = 0; c < parts_.size(); ++c) out << 'r';
        out << "}\n\\hline\n$\\lambda\\backslash\\mu$";
        for (const auto& p : parts_) out << " & " << p.str();
        out << " \\\\\n\\hline\n";
        for (std::size_t r = 0; r < parts_.size(); ++r) {
            out << parts_[r].str();
            for (std::size_t c = 0; c < parts_.size(); ++c) out << " & " << values_[r][c].str();
            out << " \\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
        return out.str();
    }

private:
    int n_;
    std::vector<partition> parts_;
    std::vector<std::vector<Int>> values_;
};

// Builds the full table. Columns are independent (one evaluator per cycle
// type) and may be filled in parallel; the result does not depend on the
// schedule.
inline character_table make_character_table(int n, int jobs = 1, int max_n = default_ceilings.table_n) {
    if (n < 0) throw std::invalid_argument("character_table: n must be non-negative");
    if (n > max_n)
        throw resource_limit_error("character_table: n=" + std::to_string(n) + " exceeds the ceiling " +
                                   std::to_string(max_n));
    std::vector<partition> parts = partitions_of(n, std::max(n, default_ceilings.partition_n));
    const std::size_t count = parts.size();
    std::vector<std::vector<Int>> values(count, std::vector<Int>(count));
    parallel_blocks(count, jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
            character_evaluator ev(parts[c]);
            for (std::size_t r = 0; r < count; ++r) values[r][c] = ev.value(parts[r]);
        }
    });
    return character_table(n, std::move(parts), std::move(values));
}

// On-disk store of character tables keyed by n. Versioned JSON; files with a
// newer format version are refused, unknown fields are ignored.
class table_cache {
public:
    static constexpr int format_version = 1;

    static table_cache load(const std::string& path) {
        table_cache cache;
        std::ifstream in(path);
        if (!in) return cache;  // cold cache
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw std::runtime_error("table cache '" + path + "': unreadable JSON: " + e.what());
        }
        const int version = j.at("format_version").get<int>();
        if (version > format_version)
            throw std::runtime_error("table cache '" + path + "': format version " + std::to_string(version) +
                                     " is newer than supported " + std::to_string(format_version));
        for (const auto& jt : j.at("tables")) {
            character_table t = character_table::from_json(jt);
            const int n = t.n();
            cache.tables_.insert_or_assign(n, std::move(t));
        }
        return cache;
    }

    void save(const std::string& path) const {
        json j;
        j["format_version"] = format_version;
        json tables = json::array();
        for (const auto& [n, t] : tables_) tables.push_back(t.to_json());
        j["tables"] = std::move(tables);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("table cache '" + path + "': cannot open for writing");
        out << j.dump(2) << '\n';
    }

    const character_table* find(int n) const {
        auto it = tables_.find(n);
        return it == tables_.end() ? nullptr : &it->second;
    }

    void put(character_table t) {
        const int n = t.n();
        tables_.insert_or_assign(n, std::move(t));
    }

    std::vector<int> stored() const {
        std::vector<int> ns;
        ns.reserve(tables_.size());
        for (const auto& [n, t] : tables_) ns.push_back(n);
        return ns;
    }

private:
    std::map<int, character_table> tables_;
};

}  // namespace hookchar
