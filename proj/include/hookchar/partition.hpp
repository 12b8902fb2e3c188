#pragma once

#include "hookchar/common.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace hookchar {

// Integer partition in canonical form: weakly decreasing positive parts, no
// trailing zeros. The empty partition is the unique partition of 0. The same
// type represents cycle types.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<int> parts) : parts_(std::move(parts)) {
        int prev = std::numeric_limits<int>::max();
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("partition parts must be positive");
            if (p > prev) throw std::invalid_argument("partition parts must be weakly decreasing");
            prev = p;
            n_ += p;
        }
    }

    // Parses "3,1" (or "5", or "" for the empty partition). Rejects
    // non-canonical input instead of sorting it.
    static partition parse(const std::string& text) {
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t next = text.find(',', pos);
            if (next == std::string::npos) next = text.size();
            const std::string token = text.substr(pos, next - pos);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("partition: bad part '" + token + "'");
            }
            if (used != token.size()) throw std::invalid_argument("partition: bad part '" + token + "'");
            parts.push_back(value);
            pos = next + 1;
            if (pos == text.size() && next != text.size())
                throw std::invalid_argument("partition: trailing comma");
        }
        return partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based part access; parts beyond the last are 0.
    int part(int i) const {
        if (i < 1) throw std::invalid_argument("partition parts are 1-indexed");
        return i <= num_parts() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        out += ')';
        return out;
    }

    auto operator<=>(const partition&) const = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// JSON wire form: a plain array of parts, [] for the empty partition.
template <typename BasicJson>
inline void to_json(BasicJson& j, const partition& p) {
    j = BasicJson::array();
    for (int v : p.parts()) j.push_back(v);
}

template <typename BasicJson>
inline void from_json(const BasicJson& j, partition& p) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected a JSON array");
    std::vector<int> parts;
    parts.reserve(j.size());
    for (const auto& v : j) parts.push_back(v.template get<int>());
    p = partition(std::move(parts));
}

// The (k,l) hook parameters: k rows of unbounded width plus l columns.
struct hook_params {
    int k = 0;
    int l = 0;
};

// Every partition of n, reverse-lexicographically: (n) first, (1^n) last.
inline std::vector<partition> partitions_of(int n, int max_n = default_ceilings.partition_n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
    if (n > max_n)
        throw resource_limit_error("partitions_of: n=" + std::to_string(n) + " exceeds the ceiling " +
                                   std::to_string(max_n));
    std::vector<partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int max_part) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// lambda is in the (k,l) hook iff its (k+1)-th part is at most l.
inline bool in_hook(const partition& la, int k, int l) {
    if (k < 0 || l < 0) throw std::invalid_argument("hook parameters must be non-negative");
    return la.part(k + 1) <= l;
}

// lambda additionally contains the k x l rectangle (lambda_k >= l, vacuous
// for k = 0).
inline bool in_strict_hook(const partition& la, int k, int l) {
    return in_hook(la, k, l) && (k == 0 || la.part(k) >= l);
}

// The partitions of n in the (k,l) hook, in partitions_of order.
inline std::vector<partition> hook_partitions(int k, int l, int n,
                                              int max_n = default_ceilings.partition_n) {
    std::vector<partition> out;
    for (auto& la : partitions_of(n, max_n))
        if (in_hook(la, k, l)) out.push_back(std::move(la));
    return out;
}

// Transpose of the Young diagram; an involution.
inline partition conjugate(const partition& la) {
    if (la.empty()) return partition{};
    std::vector<int> cols(static_cast<std::size_t>(la.parts().front()), 0);
    for (int p : la.parts())
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return partition(std::move(cols));
}

}  // namespace hookchar
