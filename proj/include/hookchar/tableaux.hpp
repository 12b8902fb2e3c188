#pragma once

#include "hookchar/common.hpp"
#include "hookchar/partition.hpp"

#include <string>
#include <utility>

namespace hookchar {

// k even letters t1..tk followed by l odd letters u1..ul, totally ordered
// t1 < ... < tk < u1 < ... < ul and encoded 0..k+l-1 in that order.
struct graded_alphabet {
    int k = 0;
    int l = 0;

    graded_alphabet(int k_, int l_) : k(k_), l(l_) {
        if (k < 0 || l < 0) throw std::invalid_argument("alphabet sizes must be non-negative");
    }

    int size() const { return k + l; }
    bool odd(int letter) const { return letter >= k; }

    std::string name(int letter) const {
        if (letter < 0 || letter >= size()) throw std::invalid_argument("letter out of range");
        return odd(letter) ? "u" + std::to_string(letter - k + 1) : "t" + std::to_string(letter + 1);
    }

    bool operator==(const graded_alphabet&) const = default;
};

// A filled diagram; rows[i][j] is the letter code at row i, column j.
struct tableau {
    partition shape;
    graded_alphabet alphabet;
    std::vector<std::vector<int>> rows;
};

template <typename BasicJsonType>
void to_json(BasicJsonType& j, const tableau& t) {
    j = BasicJsonType::array();
    for (const auto& row : t.rows) {
        BasicJsonType jrow = BasicJsonType::array();
        for (int letter : row) jrow.push_back(t.alphabet.name(letter));
        j.push_back(std::move(jrow));
    }
}

namespace detail {

// Backtracks over all (k,l)-semistandard fillings of `shape` in row-major
// cell order and calls visit(rows) once per complete filling. The rule is
// local: entries weakly increase along rows and down columns, a repeat to
// the right is allowed only for even letters, a repeat below only for odd
// ones. Rows of the shape weakly decrease, so the cell above is always
// filled before its neighbour below.
template <typename Visit>
void walk_super_ssyt(const partition& shape, const graded_alphabet& a, Visit&& visit) {
    const int m = shape.num_parts();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m));
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < m; ++i) {
        const int len = shape.parts()[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(len), -1);
        for (int j = 0; j < len; ++j) cells.emplace_back(i, j);
    }
    const int d = a.size();
    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(rows);
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 0;
        if (j > 0) {
            const int left = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
            lo = std::max(lo, a.odd(left) ? left + 1 : left);
        }
        if (i > 0) {
            const int above = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            lo = std::max(lo, a.odd(above) ? above : above + 1);
        }
        for (int v = lo; v < d; ++v) {
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            self(self, idx + 1);
        }
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    };
    fill(fill, 0);
}

}  // namespace detail

// s_{k,l}(lambda): zero exactly off the hook H(k,l;|lambda|).
inline Int count_super_ssyt(const partition& la, int k, int l) {
    graded_alphabet a(k, l);
    Int count = 0;
    detail::walk_super_ssyt(la, a, [&count](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

// s_k(lambda): classical semistandard count, l = 0 of the graded rule.
inline Int count_ssyt(const partition& la, int k) { return count_super_ssyt(la, k, 0); }

// s_k(lambda) by the hook-content formula prod(k + j - i)/prod(hooks),
// an independent closed-form route (0 when lambda has more than k rows).
inline Int ssyt_hook_content(const partition& la, int k) {
    if (k < 0) throw std::invalid_argument("alphabet sizes must be non-negative");
    if (la.empty()) return 1;
    const partition conj = conjugate(la);
    Int num = 1;
    Int den = 1;
    for (int i = 0; i < la.num_parts(); ++i) {
        const int row = la.parts()[static_cast<std::size_t>(i)];
        for (int j = 0; j < row; ++j) {
            num *= k + j - i;
            den *= row - j + conj.parts()[static_cast<std::size_t>(j)] - i - 1;
        }
        if (num == 0) return 0;
    }
    return num / den;
}

// Every (k,l)-semistandard tableau of the shape, in deterministic
// backtracking order; refuses to materialize more than max_count.
inline std::vector<tableau> enumerate_super_ssyt(const partition& la, int k, int l,
                                                 long long max_count = default_ceilings.list_tableaux) {
    graded_alphabet a(k, l);
    std::vector<tableau> out;
    detail::walk_super_ssyt(la, a, [&](const std::vector<std::vector<int>>& rows) {
        if (static_cast<long long>(out.size()) >= max_count)
            throw resource_limit_error("enumerate_super_ssyt: more than " + std::to_string(max_count) +
                                       " tableaux of shape " + la.str());
        out.push_back(tableau{la, a, rows});
    });
    return out;
}

}  // namespace hookchar
