#include <hookchar/characters.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using hookchar::character;
using hookchar::character_table;
using hookchar::class_size;
using hookchar::dimension;
using hookchar::factorial;
using hookchar::Int;
using hookchar::make_character_table;
using hookchar::partition;
using hookchar::partitions_of;
using hookchar::zed;

TEST_CASE("hand-checked character values", "[characters]") {
    CHECK(character(partition({2, 1}), partition({3})) == -1);
    CHECK(character(partition({2, 1}), partition({2, 1})) == 0);
    CHECK(character(partition({2, 1}), partition({1, 1, 1})) == 2);
    CHECK(character(partition{}, partition{}) == 1);
    CHECK_THROWS_AS(character(partition({2, 1}), partition({2})), std::invalid_argument);
}

TEST_CASE("small tables are the known ones", "[characters]") {
    const auto s2 = make_character_table(2);
    CHECK(s2.partitions() == std::vector<partition>{partition({2}), partition({1, 1})});
    CHECK(s2.value(0, 0) == 1);
    CHECK(s2.value(0, 1) == 1);
    CHECK(s2.value(1, 0) == -1);
    CHECK(s2.value(1, 1) == 1);

    const auto s3 = make_character_table(3);
    const Int expected[3][3] = {{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(s3.value(r, c) == expected[r][c]);
}

TEST_CASE("three rows every table must have", "[characters]") {
    // trivial, sign, and standard: the standard character is fixed points
    // minus one, counted off the cycle type directly
    for (int n = 2; n <= 7; ++n) {
        const std::vector<int> trivial{n};
        const std::vector<int> standard{n - 1, 1};
        const std::vector<int> sign_shape(static_cast<std::size_t>(n), 1);
        for (const auto& mu : partitions_of(n)) {
            CHECK(character(partition(trivial), mu) == 1);
            CHECK(character(partition(standard), mu) == testor::fixed_points(mu.parts()) - 1);
            const int sign = (n - mu.num_parts()) % 2 == 0 ? 1 : -1;
            CHECK(character(partition(sign_shape), mu) == sign);
        }
    }
}

TEST_CASE("agrees with an independent recursion on every pair", "[characters]") {
    for (int n = 0; n <= 8; ++n) {
        const auto all = partitions_of(n);
        for (const auto& la : all)
            for (const auto& mu : all) CHECK(character(la, mu) == testor::character_by_rows(la.parts(), mu.parts()));
    }
}

TEST_CASE("border strip removals at the extremes", "[characters]") {
    for (int n : {1, 3, 6}) {
        const auto from_row = hookchar::border_strip_removals(partition({n}), n);
        REQUIRE(from_row.size() == 1);
        CHECK(from_row[0].first == partition{});
        CHECK(from_row[0].second == 0);

        const auto from_column =
            hookchar::border_strip_removals(partition(std::vector<int>(static_cast<std::size_t>(n), 1)), n);
        REQUIRE(from_column.size() == 1);
        CHECK(from_column[0].first == partition{});
        CHECK(from_column[0].second == n - 1);
    }
    // the rim of (2,2) minus its corner cell is a strip of 3 spanning both rows
    const auto rim = hookchar::border_strip_removals(partition({2, 2}), 3);
    REQUIRE(rim.size() == 1);
    CHECK(rim[0].first == partition({1}));
    CHECK(rim[0].second == 1);
    // the full 2x2 block is not a border strip
    CHECK(hookchar::border_strip_removals(partition({2, 2}), 4).empty());
    CHECK_THROWS_AS(hookchar::border_strip_removals(partition({2}), 0), std::invalid_argument);
}

TEST_CASE("dimension equals the character at the identity", "[characters]") {
    for (int n = 0; n <= 8; ++n) {
        const partition identity(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& la : partitions_of(n)) CHECK(dimension(la) == character(la, identity));
    }
    CHECK(dimension(partition({3, 1})) == 3);
    CHECK(dimension(partition({2, 2})) == 2);
    CHECK(dimension(partition({4, 3, 2, 1})) == 768);
}

TEST_CASE("class sizes match whole-group enumeration", "[characters]") {
    for (int n = 1; n <= 6; ++n) {
        const auto reference = testor::class_sizes_by_enumeration(n);
        Int total = 0;
        for (const auto& mu : partitions_of(n)) {
            CHECK(class_size(mu) == reference.at(mu.parts()));
            total += class_size(mu);
        }
        CHECK(total == factorial(n));
    }
    CHECK(zed(partition({1, 1, 1, 1})) == 24);
    CHECK(zed(partition({3, 1})) == 3);
    CHECK(class_size(partition({2, 1, 1})) == 6);
}

TEST_CASE("row orthogonality at small degree", "[characters]") {
    for (int n = 1; n <= 6; ++n) {
        const auto table = make_character_table(n);
        const auto& parts = table.partitions();
        std::vector<Int> sizes;
        for (const auto& mu : parts) sizes.push_back(class_size(mu));
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a; b < parts.size(); ++b) {
                Int dot = 0;
                for (std::size_t m = 0; m < parts.size(); ++m) dot += sizes[m] * table.value(a, m) * table.value(b, m);
                CHECK(dot == (a == b ? factorial(n) : Int(0)));
            }
    }
}

TEST_CASE("parallel table construction is schedule independent", "[characters]") {
    CHECK(make_character_table(7, 4) == make_character_table(7, 1));
    CHECK_THROWS_AS(make_character_table(15), hookchar::resource_limit_error);
    CHECK_THROWS_AS(make_character_table(-1), std::invalid_argument);
}

TEST_CASE("table serialization round-trips", "[characters]") {
    const auto table = make_character_table(4);
    CHECK(character_table::from_json(table.to_json()) == table);
    CHECK(table.to_json()["n"] == 4);
    CHECK(table.index_of(partition({2, 2})) == 2);
    CHECK_THROWS_AS(table.index_of(partition({5})), std::invalid_argument);

    const auto s3 = make_character_table(3);
    CHECK(s3.to_csv() ==
          "lambda\\mu,(3),\"(2,1)\",\"(1,1,1)\"\n"
          "(3),1,1,1\n"
          "\"(2,1)\",-1,0,2\n"
          "\"(1,1,1)\",1,-1,1\n");
    CHECK(s3.to_latex().find("\\begin{tabular}") != std::string::npos);
}

TEST_CASE("table cache persists across load and save", "[characters]") {
    namespace fs = std::filesystem;
    const auto path = (fs::temp_directory_path() / "hookchar_test_table_cache.json").string();
    fs::remove(path);

    auto cold = hookchar::table_cache::load(path);
    CHECK(cold.stored().empty());
    cold.put(make_character_table(3));
    cold.put(make_character_table(5));
    cold.save(path);

    const auto warm = hookchar::table_cache::load(path);
    CHECK(warm.stored() == std::vector<int>{3, 5});
    REQUIRE(warm.find(3) != nullptr);
    CHECK(*warm.find(3) == make_character_table(3));
    CHECK(warm.find(4) == nullptr);
    fs::remove(path);
}

TEST_CASE("table cache refuses corrupt or newer files", "[characters]") {
    namespace fs = std::filesystem;
    const auto path = (fs::temp_directory_path() / "hookchar_test_bad_cache.json").string();

    std::ofstream(path) << "this is not json";
    CHECK_THROWS_AS(hookchar::table_cache::load(path), std::runtime_error);

    std::ofstream(path) << R"({"format_version": 99, "tables": []})";
    CHECK_THROWS_AS(hookchar::table_cache::load(path), std::runtime_error);
    fs::remove(path);
}
