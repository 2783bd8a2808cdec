#include <doctest.h>

#include <random>

#include "fschur/expr.hpp"
#include "fschur/polynomial.hpp"
#include "fschur/tableau.hpp"

using namespace fschur;

namespace {

Composition comp(std::vector<Int> parts) { return Composition(std::move(parts)); }

} // namespace

TEST_CASE("parse worked examples") {
    Expression e = parse_expression("F[4,1]+F[3,2]+F[2,3]+F[1,4]");
    CHECK(e.f_terms.size() == 4);
    CHECK(e.f_terms.at(comp({4, 1})) == 1);
    CHECK(e.s_terms.empty());

    CHECK(parse_expression("").empty());
    CHECK(parse_expression("0").empty());
    CHECK(parse_expression("  \n ").empty());

    Expression m = parse_expression("2*s[3,1] - F[2,2]");
    CHECK(m.s_terms.at(comp({3, 1})) == 2);
    CHECK(m.f_terms.at(comp({2, 2})) == -1);

    Expression neg = parse_expression("-F[1]");
    CHECK(neg.f_terms.at(comp({1})) == -1);

    Expression merged = parse_expression("F[1] + F[1] - 2*F[1]");
    CHECK(merged.empty());

    Expression empty_index = parse_expression("s[]");
    CHECK(empty_index.s_terms.at(comp({})) == 1);
}

TEST_CASE("parse errors carry positions and expectations") {
    CHECK_THROWS_AS(parse_expression("F["), ParseError);

    try {
        parse_expression("F[4,1] +");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Syntax);
        CHECK(e.line() == 1);
        CHECK(e.column() == 9);
        CHECK(e.expected() == "'F' or 's'");
    }

    try {
        parse_expression("F[3,0,2]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Validity);
        CHECK(std::string(e.what()).find("part 2") != std::string::npos);
    }

    try {
        parse_expression("F[2,-1]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Validity);
    }

    try {
        parse_expression("Q[1]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind() == ParseError::Kind::Syntax);
        CHECK(e.column() == 1);
    }

    try {
        parse_expression("F[1]\n+ G[2]");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }

    CHECK_THROWS_AS(parse_expression("3 F[1]"), ParseError); // missing '*'
    CHECK_THROWS_AS(parse_expression("F[]extra"), ParseError);
}

TEST_CASE("atom positions are recorded") {
    auto atoms = parse_atoms("F[2]\n - 3*s[1,1]");
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].line == 1);
    CHECK(atoms[0].column == 1);
    CHECK(atoms[1].basis == 's');
    CHECK(atoms[1].line == 2);
    CHECK(atoms[1].column == 6);
    CHECK(atoms[1].coeff == -3);
}

TEST_CASE("serialize round trips") {
    for (const char* text :
         {"F[4,1] + F[3,2] + F[2,3] + F[1,4]", "2*s[3,1] - F[2,2]", "0",
          "-F[1] + s[2]", "s[]"}) {
        Expression e = parse_expression(text);
        CHECK(serialize(e) == serialize(parse_expression(serialize(e))));
        CHECK(parse_expression(serialize(e)) == e);
    }

    // parse . serialize is the identity on canonical text.
    std::mt19937_64 rng(11);
    auto comps = compositions_up_to(5);
    std::uniform_int_distribution<std::size_t> pick(1, comps.size() - 1);
    std::uniform_int_distribution<Int> coeff(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        Expression e;
        for (int i = 0; i < 3; ++i) {
            Int c = coeff(rng);
            if (c == 0)
                continue;
            auto& terms = i % 2 ? e.s_terms : e.f_terms;
            auto key = comps[pick(rng)];
            auto [it, inserted] = terms.try_emplace(key, c);
            if (!inserted && (it->second += c) == 0)
                terms.erase(it);
        }
        std::string text = serialize(e);
        CHECK(parse_expression(text) == e);
        CHECK(serialize(parse_expression(text)) == text);
    }
}

TEST_CASE("evaluate_schur straightens s atoms and converts F atoms") {
    SchurExpansion out = evaluate_schur(parse_expression("s[1,4]"));
    SchurExpansion expect;
    add_term(expect, Partition({3, 2}), -1);
    CHECK(out == expect);

    CHECK(evaluate_schur(parse_expression("s[2,3]")).empty());

    SchurExpansion conv =
        evaluate_schur(parse_expression("F[4,1]+F[3,2]+F[2,3]+F[1,4]"));
    SchurExpansion single;
    add_term(single, Partition({4, 1}), 1);
    CHECK(conv == single);

    // Mixing bases: s[4,1] - F-expansion of s_{(4,1)} cancels exactly.
    SchurExpansion zero = evaluate_schur(
        parse_expression("s[4,1] - F[4,1] - F[3,2] - F[2,3] - F[1,4]"));
    CHECK(zero.empty());
}

TEST_CASE("evaluate_poly matches the basis polynomials") {
    CHECK(evaluate_poly(parse_expression("F[2]"), 2) == h_poly(2, 2));
    CHECK(evaluate_poly(parse_expression("s[2,2]"), 4) ==
          schur_poly(Partition({2, 2}), 4));
    CHECK(evaluate_poly(parse_expression("s[1,4] + s[3,2]"), 5).is_zero());
    CHECK(evaluate_poly(parse_expression(""), 3).is_zero());
}
