#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "troplie/laurent.hpp"

#include <random>

using namespace troplie;

namespace {

RegistryPtr xy_registry() {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("x1");
    reg->add_real("x2");
    return reg;
}

RegistryPtr xz_registry() {
    auto reg = std::make_shared<VarRegistry>();
    reg->add_real("x");
    reg->add_complex_pair("z");
    return reg;
}

std::mt19937 rng(20240817);

Rational rand_rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

LaurentPoly rand_poly(const RegistryPtr& reg) {
    std::uniform_int_distribution<int> nterms(0, 4), exp(-3, 3);
    LaurentPoly p(reg);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(reg->size());
        for (int i = 0; i < reg->size(); ++i) m.exps[i] = exp(rng);
        p.add_term(m, GaussianRational(rand_rat(), rand_rat()));
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational a(Rational(1), Rational(2));
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == (a * a).inverse());
    CHECK(a.conj() == GaussianRational(Rational(1), Rational(-2)));
    CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
}

TEST_CASE("lp_add basics") {
    auto reg = xy_registry();
    auto x1 = LaurentPoly::variable(reg, 0);
    auto one = LaurentPoly::constant(reg, GaussianRational(1));
    CHECK((x1 + one) + one.scaled(GaussianRational(-1)) == x1);
    auto p = rand_poly(reg);
    CHECK(p + LaurentPoly::zero(reg) == p);

    // x1*x2 + (x1^2 + x2), the Poisson bracket of the two-variable example
    auto x2 = LaurentPoly::variable(reg, 1);
    auto bracket = x1 * x2 + x1 * x1 + x2;
    CHECK(bracket.terms().size() == 3);
    Monomial m(2);
    m.exps = {1, 1};
    CHECK(bracket.coeff(m) == GaussianRational(1));
}

TEST_CASE("lp_mul basics") {
    auto reg = xy_registry();
    auto x = LaurentPoly::variable(reg, 0);
    auto xinv = LaurentPoly::variable(reg, 0, -1);
    CHECK(x * xinv == LaurentPoly::constant(reg, GaussianRational(1)));

    auto i = GaussianRational::i();
    auto a = LaurentPoly::variable(reg, 0, 2).scaled(i);
    auto b = LaurentPoly::variable(reg, 0, -2).scaled(i);
    CHECK(a * b == LaurentPoly::constant(reg, GaussianRational(-1)));

    // (D2^2 D1^-1)^2 = D2^4 D1^-2 shape
    Monomial m(2);
    m.exps = {-1, 2};
    auto w = LaurentPoly::monomial(reg, m, GaussianRational(1));
    Monomial m2(2);
    m2.exps = {-2, 4};
    CHECK(w * w == LaurentPoly::monomial(reg, m2, GaussianRational(1)));
}

TEST_CASE("registry mismatch rejected") {
    auto a = LaurentPoly::variable(xy_registry(), 0);
    auto b = LaurentPoly::variable(xz_registry(), 0);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("conjugation") {
    auto reg = xz_registry();
    int x = 0, z = 1, zb = 2;
    auto i = GaussianRational::i();

    CHECK(LaurentPoly::variable(reg, z).scaled(i).conj() ==
          LaurentPoly::variable(reg, zb).scaled(-i));
    auto x2 = LaurentPoly::variable(reg, x, 2);
    CHECK(x2.conj() == x2);

    auto p = (x2 - LaurentPoly::variable(reg, x, -2)).scaled(i);
    CHECK(p.conj() == -p);
}

TEST_CASE("substitution") {
    auto reg = xy_registry();
    auto w2 = LaurentPoly::variable(reg, 0, 2);
    Monomial d1 = Monomial::of_var(2, 1, 1);
    CHECK(w2.substitute(0, d1, GaussianRational(1)) == LaurentPoly::variable(reg, 1, 2));

    // w := x2 / x1 in w^-1 gives x1 / x2
    auto winv = LaurentPoly::variable(reg, 0, -1);
    Monomial ratio(2);
    ratio.exps = {0, 1};
    auto reg3 = std::make_shared<VarRegistry>();
    reg3->add_real("w");
    reg3->add_real("d1");
    reg3->add_real("d2");
    auto winv3 = LaurentPoly::variable(reg3, 0, -1);
    Monomial r3(3);
    r3.exps = {0, -1, 1};
    Monomial expect(3);
    expect.exps = {0, 1, -1};
    CHECK(winv3.substitute(0, r3, GaussianRational(1)) ==
          LaurentPoly::monomial(reg3, expect, GaussianRational(1)));

    Monomial circ = Monomial::of_var(2, 0, 1);
    CHECK_THROWS_AS(w2.substitute(0, circ, GaussianRational(1)), std::invalid_argument);
    CHECK_THROWS_AS(w2.substitute(0, d1, GaussianRational(0)), std::invalid_argument);
}

TEST_CASE("evaluation") {
    auto reg = xy_registry();
    auto p = LaurentPoly::variable(reg, 0) * LaurentPoly::variable(reg, 1);
    CHECK(p.eval({2.0, 3.0}).real() == doctest::Approx(6.0));
    auto q = LaurentPoly::variable(reg, 0, -2);
    CHECK(q.eval({2.0, 1.0}).real() == doctest::Approx(0.25));
    CHECK_THROWS_AS(q.eval({0.0, 1.0}), std::domain_error);

    // i(x^2 - x^-2) at x = e
    auto reg1 = std::make_shared<VarRegistry>();
    reg1->add_real("x");
    auto f = (LaurentPoly::variable(reg1, 0, 2) - LaurentPoly::variable(reg1, 0, -2))
                 .scaled(GaussianRational::i());
    double e = std::exp(1.0);
    auto v = f.eval({e});
    CHECK(v.real() == doctest::Approx(0.0));
    CHECK(v.imag() == doctest::Approx(e * e - 1.0 / (e * e)));
}

TEST_CASE("ring axioms on random polynomials") {
    auto reg = xz_registry();
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = rand_poly(reg), b = rand_poly(reg), c = rand_poly(reg);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("eval is a ring homomorphism") {
    auto reg = xz_registry();
    std::uniform_int_distribution<int> coord(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = rand_poly(reg), b = rand_poly(reg);
        std::vector<std::complex<double>> pt = {
            double(coord(rng)), {double(coord(rng)), double(coord(rng))}, double(coord(rng))};
        auto lhs = (a * b).eval(pt);
        auto rhs = a.eval(pt) * b.eval(pt);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("deterministic printing") {
    auto reg = xy_registry();
    auto p = LaurentPoly::variable(reg, 1) + LaurentPoly::variable(reg, 0, -1);
    CHECK(p.str() == "(1)*x1^-1 + (1)*x2");
    CHECK(LaurentPoly::zero(reg).str() == "0");
}
