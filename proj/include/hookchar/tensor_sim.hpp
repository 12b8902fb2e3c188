#pragma once

#include "hookchar/common.hpp"
#include "hookchar/partition.hpp"
#include "hookchar/tableaux.hpp"

#include <mutex>
#include <numeric>
#include <utility>

namespace hookchar {

// Bijection on {0..n-1}, stored as the image vector.
class permutation {
public:
    explicit permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("permutation: image vector is not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static permutation identity(int n) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        return permutation(std::move(img));
    }

    // The canonical permutation of cycle type mu: (1,...,mu_1)(mu_1+1,...)...
    // in one-based cycle notation, i.e. consecutive blocks, each cycled
    // forward by one.
    static permutation from_cycle_type(const partition& mu) {
        std::vector<int> img(static_cast<std::size_t>(mu.n()));
        int base = 0;
        for (int m : mu.parts()) {
            for (int q = 0; q < m; ++q) img[static_cast<std::size_t>(base + q)] = base + (q + 1) % m;
            base += m;
        }
        return permutation(std::move(img));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_.at(static_cast<std::size_t>(i)); }

    permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
        return permutation(std::move(inv));
    }

    // (s*t)(i) = s(t(i)): apply t first.
    friend permutation operator*(const permutation& s, const permutation& t) {
        if (s.size() != t.size()) throw std::invalid_argument("permutation: size mismatch in composition");
        std::vector<int> img(s.img_.size());
        for (int i = 0; i < s.size(); ++i) img[static_cast<std::size_t>(i)] = s.image(t.image(i));
        return permutation(std::move(img));
    }

    bool operator==(const permutation&) const = default;

    partition cycle_type() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<int> lens;
        for (int i = 0; i < size(); ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = img_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return partition(std::move(lens));
    }

private:
    std::vector<int> img_;
};

// Pure basis vector of (V0+V1)^(tensor n): letters[p] is the factor at
// position p, encoded over the graded alphabet.
struct basis_word {
    graded_alphabet alphabet;
    std::vector<int> letters;
};

struct signed_word {
    int sign = 1;  // +1 or -1
    basis_word word;
};

// Koszul sign of relocating the letters by sigma: each pair of odd letters
// whose relative order flips contributes -1 (even letters commute freely).
inline int koszul_sign(const permutation& sigma, const graded_alphabet& a, const std::vector<int>& letters) {
    std::vector<int> odd_positions;
    for (int p = 0; p < static_cast<int>(letters.size()); ++p)
        if (a.odd(letters[static_cast<std::size_t>(p)])) odd_positions.push_back(p);
    int inversions = 0;
    for (std::size_t x = 0; x < odd_positions.size(); ++x)
        for (std::size_t y = x + 1; y < odd_positions.size(); ++y)
            if (sigma.image(odd_positions[x]) > sigma.image(odd_positions[y])) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// The signed place-permutation action: position i of the output carries the
// letter from position sigma^{-1}(i), with the Koszul sign of the shuffle.
inline signed_word apply_permutation(const permutation& sigma, const basis_word& w) {
    if (sigma.size() != static_cast<int>(w.letters.size()))
        throw std::invalid_argument("apply_permutation: permutation degree " + std::to_string(sigma.size()) +
                                    " does not match word length " + std::to_string(w.letters.size()));
    std::vector<int> out(w.letters.size());
    for (int p = 0; p < sigma.size(); ++p)
        out[static_cast<std::size_t>(sigma.image(p))] = w.letters[static_cast<std::size_t>(p)];
    return signed_word{koszul_sign(sigma, w.alphabet, w.letters), basis_word{w.alphabet, std::move(out)}};
}

namespace detail {

// (k+l)^n guarded by the word ceiling.
inline long long word_space_size(int d, int n, long long max_words) {
    long long total = 1;
    for (int i = 0; i < n; ++i) {
        if (d == 0) return 0;
        if (total > max_words / d)
            throw resource_limit_error("trace: word space " + std::to_string(d) + "^" + std::to_string(n) +
                                       " exceeds the ceiling " + std::to_string(max_words));
        total *= d;
    }
    return total;
}

}  // namespace detail

// Trace of the signed action of sigma on (V0+V1)^(tensor n), summed directly
// over the basis: fixed words contribute their Koszul sign, everything else
// contributes zero. Words are scanned in lexicographic order; disjoint index
// ranges may be scanned in parallel (the partial sums commute).
inline Int trace_of_permutation(const permutation& sigma, int k, int l,
                                long long max_words = default_ceilings.oracle_words, int jobs = 1) {
    graded_alphabet a(k, l);
    const int n = sigma.size();
    const int d = a.size();
    const long long total = detail::word_space_size(d, n, max_words);
    if (total == 0) return 0;

    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) inv[static_cast<std::size_t>(sigma.image(p))] = p;

    Int trace = 0;
    std::mutex trace_mutex;
    parallel_blocks(static_cast<std::size_t>(total), jobs, [&](std::size_t begin, std::size_t end) {
        // decode the first word of the block; position 0 is the most
        // significant digit, so numeric order is lexicographic order
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        std::size_t rem = begin;
        for (int p = n - 1; p >= 0; --p) {
            w[static_cast<std::size_t>(p)] = static_cast<int>(rem % static_cast<std::size_t>(d));
            rem /= static_cast<std::size_t>(d);
        }
        long long acc = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
            bool fixed = true;
            for (int i = 0; i < n; ++i) {
                if (w[static_cast<std::size_t>(i)] != w[inv[static_cast<std::size_t>(i)]]) {
                    fixed = false;
                    break;
                }
            }
            if (fixed) acc += koszul_sign(sigma, a, w);
            for (int p = n - 1; p >= 0; --p) {  // odometer step
                if (++w[static_cast<std::size_t>(p)] < d) break;
                w[static_cast<std::size_t>(p)] = 0;
            }
        }
        std::lock_guard<std::mutex> lock(trace_mutex);
        trace += acc;
    });
    return trace;
}

// Same trace via the canonical permutation of cycle type mu.
inline Int trace_super(const partition& mu, int k, int l, long long max_words = default_ceilings.oracle_words,
                       int jobs = 1) {
    return trace_of_permutation(permutation::from_cycle_type(mu), k, l, max_words, jobs);
}

// Second, cheaper route to the same trace: fixed words are exactly the words
// constant on each cycle, and a cycle of length m carrying an odd letter
// contributes (-1)^(m+1) while an even letter contributes +1. Enumerates the
// (k+l)^(number of cycles) assignments directly.
inline Int trace_super_cyclewise(const partition& mu, int k, int l,
                                 long long max_words = default_ceilings.oracle_words) {
    graded_alphabet a(k, l);
    const int r = mu.num_parts();
    const int d = a.size();
    const long long total = detail::word_space_size(d, r, max_words);
    if (total == 0) return mu.n() == 0 ? 1 : 0;

    std::vector<int> assign(static_cast<std::size_t>(r), 0);
    Int trace = 0;
    for (long long idx = 0; idx < total; ++idx) {
        int sign = 1;
        for (int c = 0; c < r; ++c)
            if (a.odd(assign[static_cast<std::size_t>(c)]) && mu.parts()[static_cast<std::size_t>(c)] % 2 == 0)
                sign = -sign;
        trace += sign;
        for (int c = r - 1; c >= 0; --c) {
            if (++assign[static_cast<std::size_t>(c)] < d) break;
            assign[static_cast<std::size_t>(c)] = 0;
        }
    }
    return trace;
}

// The closed form the oracle is checked against: prod_j (k + (-1)^(mu_j+1) l).
inline Int rhs_product(const partition& mu, int k, int l) {
    Int prod = 1;
    for (int m : mu.parts()) prod *= m % 2 == 1 ? Int(k) + l : Int(k) - l;
    return prod;
}

}  // namespace hookchar
