#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "troplie/poisson.hpp"

using namespace troplie;

namespace {

// {x1, x2} = x1 x2 + x1^2 + x2, the two-variable running example
PoissonStructure abc_structure() {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("x1");
    reg->add_real("x2");
    PoissonStructure P(reg);
    auto x1 = LaurentPoly::variable(reg, 0);
    auto x2 = LaurentPoly::variable(reg, 1);
    P.set_bracket(0, 1, x1 * x2 + x1 * x1 + x2);
    return P;
}

// {x, z} = i x z, {z, ~z} = i (x^2 - x^-2)
PoissonStructure complex_example() {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("x");
    reg->add_complex_pair("z");
    PoissonStructure P(reg);
    auto i = GaussianRational::i();
    P.set_bracket(0, 1, (LaurentPoly::variable(reg, 0) * LaurentPoly::variable(reg, 1)).scaled(i));
    P.set_bracket(0, 2,
                  (LaurentPoly::variable(reg, 0) * LaurentPoly::variable(reg, 2)).scaled(-i));
    P.set_bracket(1, 2,
                  (LaurentPoly::variable(reg, 0, 2) - LaurentPoly::variable(reg, 0, -2)).scaled(i));
    return P;
}

}  // namespace

TEST_CASE("bracket table orientation") {
    auto P = abc_structure();
    CHECK(P.bracket(1, 0) == -P.bracket(0, 1));
    CHECK(P.bracket(0, 0).is_zero());
    CHECK_THROWS_AS(P.set_bracket(0, 0, P.bracket(0, 1)), std::invalid_argument);
}

TEST_CASE("split_log_canonical") {
    auto P = abc_structure();
    auto split = split_log_canonical(P);
    CHECK(split.pi.at({0, 1}) == GaussianRational(1));
    auto reg = P.registry();
    auto expect = LaurentPoly::variable(reg, 0, 2) + LaurentPoly::variable(reg, 1);
    CHECK(split.remainder.at({0, 1}) == expect);

    // recombination identity
    for (const auto& [pair, poly] : P.table()) {
        Monomial uv = Monomial::of_var(reg->size(), pair.first) +
                      Monomial::of_var(reg->size(), pair.second);
        CHECK(LaurentPoly::monomial(reg, uv, split.pi.at(pair)) + split.remainder.at(pair) == poly);
    }

    auto Q = complex_example();
    auto qsplit = split_log_canonical(Q);
    CHECK(qsplit.pi.at({0, 1}) == GaussianRational::i());
    CHECK(qsplit.remainder.at({0, 1}).is_zero());
    CHECK(qsplit.pi.at({1, 2}) == GaussianRational(0));
}

TEST_CASE("check_reality") {
    CHECK(check_reality(complex_example()).passed);

    auto rep = check_reality(abc_structure());
    CHECK(!rep.passed);  // pi_{1,2} = 1 != 0

    // break bivector reality: {x, ~z} not conj of {x, z}
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("x");
    reg->add_complex_pair("z");
    PoissonStructure P(reg);
    auto i = GaussianRational::i();
    P.set_bracket(0, 1, (LaurentPoly::variable(reg, 0) * LaurentPoly::variable(reg, 1)).scaled(i));
    P.set_bracket(0, 2, (LaurentPoly::variable(reg, 0) * LaurentPoly::variable(reg, 2)).scaled(i));
    auto rep2 = check_reality(P);
    CHECK(!rep2.passed);
}

TEST_CASE("leibniz extension") {
    auto P = abc_structure();
    auto reg = P.registry();
    // {x1, x2^2} = 2 x2 {x1, x2}
    auto lhs = bracket_leibniz(P, 0, LaurentPoly::variable(reg, 1, 2));
    auto rhs = LaurentPoly::variable(reg, 1).scaled(GaussianRational(2)) * P.bracket(0, 1);
    CHECK(lhs == rhs);
    // {x1, x2^-1} = -x2^-2 {x1, x2}
    auto lhs2 = bracket_leibniz(P, 0, LaurentPoly::variable(reg, 1, -1));
    auto rhs2 = LaurentPoly::variable(reg, 1, -2).scaled(GaussianRational(-1)) * P.bracket(0, 1);
    CHECK(lhs2 == rhs2);
    // constants are central
    CHECK(bracket_leibniz(P, 0, LaurentPoly::constant(reg, GaussianRational(7))).is_zero());
}

TEST_CASE("jacobiator on log-canonical structures") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("a");
    reg->add_real("b");
    reg->add_real("c");
    PoissonStructure P(reg);
    auto lc = [&](int u, int v, int num) {
        P.set_bracket(u, v, (LaurentPoly::variable(reg, u) * LaurentPoly::variable(reg, v))
                                .scaled(GaussianRational(num)));
    };
    lc(0, 1, 2);
    lc(0, 2, -3);
    lc(1, 2, 5);
    CHECK(jacobiator(P, 0, 1, 2).is_zero());
    CHECK_THROWS_AS(jacobiator(P, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("jacobiator on the running example with a Casimir third variable") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("x1");
    reg->add_real("x2");
    reg->add_real("c");
    PoissonStructure P(reg);
    auto x1 = LaurentPoly::variable(reg, 0);
    auto x2 = LaurentPoly::variable(reg, 1);
    P.set_bracket(0, 1, x1 * x2 + x1 * x1 + x2);
    CHECK(jacobiator(P, 0, 1, 2).is_zero());
}

TEST_CASE("jacobiator detects a genuine failure") {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("a");
    reg->add_real("b");
    reg->add_real("c");
    PoissonStructure P(reg);
    auto v = [&](int i) { return LaurentPoly::variable(reg, i); };
    P.set_bracket(0, 1, v(0));
    P.set_bracket(1, 2, v(1));
    // J = {a,{b,c}} + {c,{a,b}} = {a,b} + {c,a} = a
    CHECK(jacobiator(P, 0, 1, 2) == v(0));
}
