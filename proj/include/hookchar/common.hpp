#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace hookchar {

// Exact signed integer used for every mathematical value in the library.
using Int = boost::multiprecision::cpp_int;

// JSON with insertion-ordered keys, so identical inputs serialize to
// identical bytes.
using json = nlohmann::ordered_json;

// A request exceeded a configured resource ceiling. The CLI maps this to
// exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource ceilings. Defaults bound memory and runtime at desk scale;
// environment variables override them process-wide.
struct ceilings {
    int partition_n = 30;                 // partitions_of and filters
    int table_n = 14;                     // character_table
    long long oracle_words = 3'000'000;   // (k+l)^n basis words per trace
    long long list_tableaux = 1'000'000;  // materialized tableaux per listing

    // Reads HOOKCHAR_MAX_PARTITION_N, HOOKCHAR_MAX_TABLE_N,
    // HOOKCHAR_MAX_ORACLE_WORDS, HOOKCHAR_MAX_LIST_TABLEAUX.
    static ceilings from_env() {
        ceilings c;
        read_env("HOOKCHAR_MAX_PARTITION_N", c.partition_n);
        read_env("HOOKCHAR_MAX_TABLE_N", c.table_n);
        read_env("HOOKCHAR_MAX_ORACLE_WORDS", c.oracle_words);
        read_env("HOOKCHAR_MAX_LIST_TABLEAUX", c.list_tableaux);
        return c;
    }

private:
    template <typename T>
    static void read_env(const char* name, T& out) {
        const char* raw = std::getenv(name);
        if (raw == nullptr || *raw == '\0') return;
        char* end = nullptr;
        const long long v = std::strtoll(raw, &end, 10);
        if (end == raw || *end != '\0' || v < 0)
            throw std::invalid_argument(std::string(name) + ": expected a non-negative integer, got '" + raw + "'");
        out = static_cast<T>(v);
    }
};

inline constexpr ceilings default_ceilings{};

inline Int int_pow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

// Exact values serialize as JSON numbers while they fit a 64-bit integer and
// as decimal strings beyond that; parsing accepts both.
inline json int_to_json(const Int& v) {
    if (fits_int64(v)) return json(v.convert_to<std::int64_t>());
    return json(v.str());
}

inline Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

// RFC-4180 style quoting; only fields that need it are quoted.
inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Runs fn(begin, end) over [0, total) in contiguous blocks, one per worker.
// Workers write to disjoint indices, so results are schedule-independent.
template <typename Fn>
inline void parallel_blocks(std::size_t total, int jobs, Fn&& fn) {
    if (total == 0) return;
    const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), total);
    if (workers <= 1) {
        fn(std::size_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hookchar
