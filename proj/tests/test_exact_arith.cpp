#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrep/interpolate.hpp"
#include "qrep/laurent.hpp"
#include "qrep/ratfunc.hpp"
#include "test_support.hpp"

using namespace qrep;

namespace {
LaurentPoly tpow(int e) { return LaurentPoly::monomial(e); }
}

TEST_CASE("rational parse and format") {
    CHECK(rat_parse("3/2") == Rat(3, 2));
    CHECK(rat_parse("-7") == Rat(-7));
    CHECK(rat_parse("4/6") == Rat(2, 3));
    CHECK(rat_str(Rat(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(rat_parse("x"), parse_error);
}

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly a = tpow(2) - LaurentPoly::one();          // t^2 - 1
    LaurentPoly b = tpow(1) - LaurentPoly::one();          // t - 1
    CHECK(a.div_exact(b) == tpow(1) + LaurentPoly::one()); // t + 1

    CHECK(tpow(-1) * tpow(3) == tpow(2));

    LaurentPoly c = tpow(2) + LaurentPoly::one();
    CHECK_THROWS_AS(c.div_exact(b), division_error);
    try {
        c.div_exact(b);
    } catch (const division_error& e) {
        CHECK(e.remainder() == "2");   // (t^2+1) = (t+1)(t-1) + 2
    }
}

TEST_CASE("laurent normalization and accessors") {
    LaurentPoly z = LaurentPoly::from_coeffs(3, {Rat(0), Rat(0)});
    CHECK(z.is_zero());
    CHECK(z == LaurentPoly::zero());

    LaurentPoly p = LaurentPoly::from_coeffs(-1, {Rat(0), Rat(2), Rat(0), Rat(1)});
    CHECK(p.min_exponent() == 0);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.str() == "t^2 + 2");
}

TEST_CASE("laurent evaluation") {
    // t^3 + t^2 - t at 2 is 10.
    LaurentPoly f = tpow(3) + tpow(2) - tpow(1);
    CHECK(f.eval(Rat(2)) == Rat(10));

    // t^-1 (t - 1) at 2 is 1/2.
    LaurentPoly g = (tpow(1) - LaurentPoly::one()).shifted(-1);
    CHECK(g.eval(Rat(2)) == Rat(1, 2));
    CHECK_THROWS_AS(g.eval(Rat(0)), pole_error);
}

TEST_CASE("laurent adams substitution") {
    LaurentPoly f = tpow(2) - LaurentPoly::one();
    CHECK(f.adams(2) == tpow(4) - LaurentPoly::one());
    CHECK(f.adams(1) == f);

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly p = testing::random_laurent(rng);
        CHECK(p.adams(2).adams(3) == p.adams(6));
    }
}

TEST_CASE("laurent ring axioms on random operands") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = testing::random_laurent(rng);
        LaurentPoly b = testing::random_laurent(rng);
        LaurentPoly c = testing::random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(13);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly a = testing::random_laurent(rng, 4, 0);
        LaurentPoly b = testing::random_laurent(rng, 4, 0);
        Rat x(3, 2);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("polynomial gcd") {
    LaurentPoly a = (tpow(1) - LaurentPoly::one()) * (tpow(1) + LaurentPoly::one());
    LaurentPoly b = (tpow(1) - LaurentPoly::one()) * tpow(2);
    CHECK(poly_gcd(a, b) == tpow(1) - LaurentPoly::one());
    CHECK(poly_gcd(a, LaurentPoly::zero()) == a * Rat(1));   // monic already
}

TEST_CASE("rational function canonical form") {
    // (t^2-1)/(2t-2) reduces to (t+1)/2 with monic denominator.
    RatFunc f(tpow(2) - LaurentPoly::one(),
              LaurentPoly::from_coeffs(0, {Rat(-2), Rat(2)}));
    CHECK(f.is_polynomial());
    CHECK(f.num() == (tpow(1) + LaurentPoly::one()) * Rat(1, 2));

    RatFunc g(tpow(1), tpow(1) - LaurentPoly::one());
    RatFunc h(tpow(2), (tpow(1) - LaurentPoly::one()) * tpow(1));
    CHECK(g == h);

    CHECK_THROWS_AS(RatFunc(tpow(1), LaurentPoly::zero()), division_error);
}

TEST_CASE("rational function arithmetic and evaluation") {
    RatFunc one_over(LaurentPoly::one(), tpow(1) - LaurentPoly::one());   // 1/(t-1)
    CHECK_THROWS_AS(one_over.eval(Rat(1)), pole_error);
    CHECK(one_over.eval(Rat(3)) == Rat(1, 2));

    RatFunc x{tpow(1)};
    CHECK((one_over * (x - RatFunc(1))).is_one());
    CHECK((one_over - one_over).is_zero());

    // 1/(1-t) under t -> t^3.
    RatFunc geo(LaurentPoly::one(), LaurentPoly::one() - tpow(1));
    RatFunc cubed = geo.adams(3);
    CHECK(cubed == RatFunc(LaurentPoly::one(), LaurentPoly::one() - tpow(3)));
}

TEST_CASE("laurent embedding into rational functions") {
    LaurentPoly lau = (tpow(1) - LaurentPoly::one()).shifted(-1);   // 1 - t^-1
    RatFunc f{lau};
    CHECK(f.is_laurent());
    CHECK(!f.is_polynomial());
    CHECK(f.as_laurent() == lau);

    RatFunc proper(LaurentPoly::one(), tpow(1) - LaurentPoly::one());
    CHECK(!proper.is_laurent());
    CHECK_THROWS_AS(proper.as_laurent(), division_error);
}

TEST_CASE("lagrange interpolation") {
    using Pt = std::pair<Rat, Rat>;
    std::vector<Pt> square{{Rat(2), Rat(4)}, {Rat(3), Rat(9)}, {Rat(5), Rat(25)}};
    CHECK(lagrange_interpolate(square, 2) == tpow(2));

    std::vector<Pt> shifted{{Rat(2), Rat(3)}, {Rat(3), Rat(8)}, {Rat(5), Rat(24)}};
    CHECK(lagrange_interpolate(shifted, 2) == tpow(2) - LaurentPoly::one());

    std::vector<Pt> few{{Rat(2), Rat(4)}, {Rat(3), Rat(9)}};
    CHECK_THROWS_AS(lagrange_interpolate(few, 2), interpolation_error);

    std::vector<Pt> dup{{Rat(2), Rat(4)}, {Rat(2), Rat(5)}, {Rat(3), Rat(9)}};
    CHECK_THROWS_AS(lagrange_interpolate(dup, 2), interpolation_error);

    // A held-out point inconsistent with the bound fails loudly.
    std::vector<Pt> bad{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(4)}, {Rat(3), Rat(10)}};
    CHECK_THROWS_AS(lagrange_interpolate(bad, 2), interpolation_error);
}

TEST_CASE("interpolation reproduces its nodes") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int i = 0; i < 50; ++i) {
        int d = deg(rng);
        std::vector<std::pair<Rat, Rat>> pts;
        for (int x = 0; x <= d; ++x) pts.emplace_back(Rat(x), testing::random_rat(rng));
        LaurentPoly p = lagrange_interpolate(pts, d);
        for (const auto& [x, y] : pts) CHECK(p.eval(x) == y);
    }
}
