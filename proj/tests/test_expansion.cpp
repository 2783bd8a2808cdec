#include <doctest.h>

#include <random>

#include "fschur/expansion.hpp"
#include "fschur/tableau.hpp"

using namespace fschur;

namespace {

Composition comp(std::vector<Int> parts) { return Composition(std::move(parts)); }
Partition part(std::vector<Int> parts) { return Partition(std::move(parts)); }

FExpansion f_of(std::vector<std::pair<std::vector<Int>, Int>> terms) {
    FExpansion e;
    for (auto& [parts, coeff] : terms)
        add_term(e, Composition(parts), coeff);
    return e;
}

SchurExpansion s_of(std::vector<std::pair<std::vector<Int>, Int>> terms) {
    SchurExpansion e;
    for (auto& [parts, coeff] : terms)
        add_term(e, Partition(parts), coeff);
    return e;
}

} // namespace

TEST_CASE("schur_to_f worked examples") {
    CHECK(schur_to_f(part({4, 1})) ==
          f_of({{{4, 1}, 1}, {{3, 2}, 1}, {{2, 3}, 1}, {{1, 4}, 1}}));
    CHECK(schur_to_f(part({5})) == f_of({{{5}, 1}}));
    CHECK(schur_to_f(part({2, 2})) == f_of({{{2, 2}, 1}, {{1, 2, 1}, 1}}));
    CHECK(schur_to_f(part({})) == f_of({{{}, 1}}));

    // Total coefficient mass is the number of standard tableaux.
    for (const auto& shape : partitions_up_to(7)) {
        Int mass = 0;
        for (const auto& [L, c] : schur_to_f(shape))
            mass += c;
        CHECK(mass == count_syt(shape));
    }
}

TEST_CASE("f_to_schur worked examples") {
    CHECK(f_to_schur(f_of({{{4, 1}, 1}, {{3, 2}, 1}, {{2, 3}, 1}, {{1, 4}, 1}})) ==
          s_of({{{4, 1}, 1}}));
    CHECK(f_to_schur(f_of({{{3, 2}, 1}})) == s_of({{{3, 2}, 1}}));
    CHECK(f_to_schur(f_of({{{2, 2}, 1}, {{1, 2, 1}, 1}})) == s_of({{{2, 2}, 1}}));
    CHECK(f_to_schur(FExpansion()).empty());
}

TEST_CASE("verified_convert confirms symmetric input") {
    ConvertReport ok = verified_convert(
        f_of({{{4, 1}, 1}, {{3, 2}, 1}, {{2, 3}, 1}, {{1, 4}, 1}}));
    CHECK(ok.symmetric);
    CHECK(ok.result == s_of({{{4, 1}, 1}}));
    CHECK_FALSE(ok.first_discrepancy.has_value());

    ConvertReport empty = verified_convert(FExpansion());
    CHECK(empty.symmetric);
    CHECK(empty.result.empty());
}

TEST_CASE("verified_convert reports the first discrepancy") {
    // F_{(1,2)} alone is not symmetric: s_{(1,2)} straightens to zero, so
    // the round trip is empty and differs first at (1,2) itself.
    ConvertReport bad = verified_convert(f_of({{{1, 2}, 1}}));
    CHECK_FALSE(bad.symmetric);
    REQUIRE(bad.first_discrepancy.has_value());
    CHECK(*bad.first_discrepancy == comp({1, 2}));
    CHECK(bad.expected == 1);
    CHECK(bad.actual == 0);

    // s_{(2,1)} = F_{(2,1)} + F_{(1,2)} is symmetric.
    CHECK(verified_convert(f_of({{{2, 1}, 1}, {{1, 2}, 1}})).symmetric);
    // Doubling one term breaks it.
    CHECK_FALSE(verified_convert(f_of({{{2, 1}, 2}, {{1, 2}, 1}})).symmetric);
}

TEST_CASE("round trip recovers random Schur expansions up to size 8") {
    std::mt19937_64 rng(42);
    auto shapes = partitions_up_to(8);
    std::uniform_int_distribution<std::size_t> pick(1, shapes.size() - 1);
    std::uniform_int_distribution<Int> coeff(-9, 9);
    std::uniform_int_distribution<int> howmany(1, 4);

    int cases = 0;
    while (cases < 120) {
        SchurExpansion g;
        int k = howmany(rng);
        for (int i = 0; i < k; ++i) {
            Int c = coeff(rng);
            if (c == 0)
                continue;
            add_term(g, shapes[pick(rng)], c);
        }
        FExpansion f;
        for (const auto& [mu, c] : g)
            for (const auto& [L, m] : schur_to_f(mu))
                add_term(f, L, checked_mul(c, m));
        CHECK(f_to_schur(f) == g);
        CHECK(verified_convert(f).symmetric);
        ++cases;
    }
}

TEST_CASE("add_term drops cancelled coefficients") {
    FExpansion e;
    add_term(e, comp({2, 1}), 5);
    add_term(e, comp({2, 1}), -5);
    CHECK(e.empty());
}

TEST_CASE("expansions print in canonical order") {
    // Canonical order: size, then length, then lexicographic.
    CHECK(to_string(f_of({{{3, 2}, 1}, {{4, 1}, 1}})) == "F[3,2] + F[4,1]");
    CHECK(to_string(f_of({{{2, 1}, 1}, {{4}, 1}, {{1, 1, 1}, 1}})) ==
          "F[2,1] + F[1,1,1] + F[4]");
    CHECK(to_string(s_of({{{2, 2}, -1}, {{3, 1}, 2}})) == "-s[2,2] + 2*s[3,1]");
    CHECK(to_string(SchurExpansion()) == "0");
    CHECK(to_string(s_of({{{3, 2}, -1}})) == "-s[3,2]");
}
