#include <hookchar/tensor_sim.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

using hookchar::apply_permutation;
using hookchar::basis_word;
using hookchar::graded_alphabet;
using hookchar::Int;
using hookchar::int_pow;
using hookchar::partition;
using hookchar::partitions_of;
using hookchar::permutation;
using hookchar::rhs_product;
using hookchar::trace_of_permutation;
using hookchar::trace_super;
using hookchar::trace_super_cyclewise;

namespace {

permutation random_permutation(int n, std::mt19937& gen) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), gen);
    return permutation(std::move(img));
}

basis_word random_word(const graded_alphabet& a, int n, std::mt19937& gen) {
    std::uniform_int_distribution<int> pick(0, a.size() - 1);
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int& v : letters) v = pick(gen);
    return basis_word{a, std::move(letters)};
}

}  // namespace

TEST_CASE("permutation basics", "[tensor]") {
    CHECK_THROWS_AS(permutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(permutation({1, 2}), std::invalid_argument);

    const auto sigma = permutation::from_cycle_type(partition({3, 1}));
    CHECK(sigma.image(0) == 1);
    CHECK(sigma.image(1) == 2);
    CHECK(sigma.image(2) == 0);
    CHECK(sigma.image(3) == 3);
    CHECK(sigma.cycle_type() == partition({3, 1}));
    CHECK(sigma * sigma.inverse() == permutation::identity(4));

    std::mt19937 gen(7);
    for (int round = 0; round < 50; ++round) {
        const int n = 1 + static_cast<int>(gen() % 6);
        const auto s = random_permutation(n, gen);
        const auto t = random_permutation(n, gen);
        CHECK((s * t).inverse() == t.inverse() * s.inverse());
        CHECK((s * t).cycle_type() == (t * s).cycle_type());
    }
}

TEST_CASE("signed action on two letters", "[tensor]") {
    const graded_alphabet a(1, 1);
    const auto swap = permutation({1, 0});
    const int t1 = 0, u1 = 1;

    const auto fixed = apply_permutation(permutation::identity(2), basis_word{a, {u1, t1}});
    CHECK(fixed.sign == 1);
    CHECK(fixed.word.letters == std::vector<int>{u1, t1});

    const auto two_odd = apply_permutation(swap, basis_word{a, {u1, u1}});
    CHECK(two_odd.sign == -1);
    CHECK(two_odd.word.letters == std::vector<int>{u1, u1});

    const auto mixed = apply_permutation(swap, basis_word{a, {t1, u1}});
    CHECK(mixed.sign == 1);
    CHECK(mixed.word.letters == std::vector<int>{u1, t1});

    CHECK_THROWS_AS(apply_permutation(swap, basis_word{a, {t1}}), std::invalid_argument);
}

TEST_CASE("the action is a representation with multiplicative signs", "[tensor]") {
    std::mt19937 gen(20240817);
    const std::vector<graded_alphabet> alphabets = {graded_alphabet(1, 1), graded_alphabet(2, 1),
                                                    graded_alphabet(1, 2)};
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(gen() % 5);
        const auto& a = alphabets[gen() % alphabets.size()];
        const auto s = random_permutation(n, gen);
        const auto t = random_permutation(n, gen);
        const auto w = random_word(a, n, gen);

        const auto once = apply_permutation(s * t, w);
        const auto inner = apply_permutation(t, w);
        const auto twice = apply_permutation(s, inner.word);
        CHECK(once.word.letters == twice.word.letters);
        CHECK(once.sign == inner.sign * twice.sign);
    }
}

TEST_CASE("trace equals the closed-form product at desk scale", "[tensor]") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = 0; k <= 3; ++k)
                for (int l = 0; k + l <= 3; ++l) CHECK(trace_super(mu, k, l) == rhs_product(mu, k, l));
}

TEST_CASE("identity trace is the dimension of the space", "[tensor]") {
    for (int n = 1; n <= 6; ++n) {
        const partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        CHECK(trace_super(ones, 1, 1) == int_pow(Int(2), n));
        CHECK(trace_super(ones, 2, 1) == int_pow(Int(3), n));
    }
    CHECK(trace_super(partition{}, 2, 1) == 1);
}

TEST_CASE("trace is constant on conjugacy classes", "[tensor]") {
    std::mt19937 gen(99);
    for (int n = 2; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto sigma = permutation::from_cycle_type(mu);
            const Int reference = trace_of_permutation(sigma, 1, 1);
            for (int round = 0; round < 3; ++round) {
                const auto tau = random_permutation(n, gen);
                const auto conjugated = tau * sigma * tau.inverse();
                CHECK(conjugated.cycle_type() == mu);
                CHECK(trace_of_permutation(conjugated, 1, 1) == reference);
            }
        }
}

TEST_CASE("cycle-wise route agrees with the word scan", "[tensor]") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = 0; k <= 2; ++k)
                for (int l = 0; l <= 2; ++l) CHECK(trace_super_cyclewise(mu, k, l) == trace_super(mu, k, l));
}

TEST_CASE("no odd letters specializes to plain place permutation", "[tensor]") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n))
            for (int k = 0; k <= 2; ++k) CHECK(trace_super(mu, k, 0) == int_pow(Int(k), mu.num_parts()));
}

TEST_CASE("closed-form product fixtures", "[tensor]") {
    CHECK(rhs_product(partition({3, 1}), 2, 1) == 9);
    CHECK(rhs_product(partition({2}), 1, 1) == 0);
    CHECK(rhs_product(partition({2}), 0, 1) == -1);  // a single even cycle of odd letters
    CHECK(rhs_product(partition({2, 2}), 3, 3) == 0);
    CHECK(rhs_product(partition{}, 3, 2) == 1);
    for (const auto& mu : partitions_of(6))
        CHECK(rhs_product(mu, 3, 0) == int_pow(Int(3), mu.num_parts()));
}

TEST_CASE("word scan parallelizes without changing the sum", "[tensor]") {
    const partition mu({4, 2, 1});
    CHECK(trace_super(mu, 2, 1, hookchar::default_ceilings.oracle_words, 4) == trace_super(mu, 2, 1));
    CHECK(trace_super(mu, 1, 2, hookchar::default_ceilings.oracle_words, 3) == rhs_product(mu, 1, 2));
}

TEST_CASE("word ceiling aborts oversized scans", "[tensor]") {
    CHECK_THROWS_AS(trace_super(partition({10, 10}), 2, 1, 1000), hookchar::resource_limit_error);
    CHECK(trace_super(partition({2, 1}), 1, 1, 8) == rhs_product(partition({2, 1}), 1, 1));  // exactly at the limit
}
