#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrep/conservative.hpp"
#include "qrep/count_formulas.hpp"
#include "test_support.hpp"

using namespace qrep;
using namespace qrep::testing;

TEST_CASE("degree bound") {
    CHECK(degree_bound(two_loop(), {2}) == 8);
    CHECK(degree_bound(jordan(), {3}) == 9);
    CHECK(degree_bound(two_loop(), {0}) == 0);
    CHECK(degree_bound(a2(), {1, 2}) == 2);
}

TEST_CASE("conservative polynomial of the 2-loop quiver at dims (1)") {
    // Oracle: dim-1 representations are loop pairs (a, b); the stacked map
    // is injective and the concatenated map surjective exactly when the
    // pair is nonzero, so the count at p is p^2 - 1. Freeze through the
    // brute-force engine at 2, 3, 5.
    for (uint32_t p : {2u, 3u, 5u}) {
        uint64_t count = enumerate_and_classify(two_loop(), {1}, p).conservative;
        CHECK(count == static_cast<uint64_t>(p) * p - 1);
    }
    std::vector<uint32_t> primes{2, 3, 5};
    LaurentPoly c = conservative_poly(two_loop(), {1}, primes);
    CHECK(c == LaurentPoly::monomial(2) - LaurentPoly::one());
}

TEST_CASE("conservative polynomial of the Jordan quiver at dims (1)") {
    std::vector<uint32_t> primes{2, 3};
    CHECK(conservative_poly(jordan(), {1}, primes) ==
          LaurentPoly::monomial(1) - LaurentPoly::one());
}

TEST_CASE("dims 0 yields the constant 1") {
    std::vector<uint32_t> primes{2};
    CHECK(conservative_poly(two_loop(), {0}, primes) == LaurentPoly::one());
}

TEST_CASE("insufficient primes") {
    std::vector<uint32_t> primes{2, 3};
    CHECK_THROWS_AS(conservative_poly(two_loop(), {1}, primes), precondition_error);

    // Tolerant mode records the shortfall instead.
    ConservativeFit fit = conservative_fit(two_loop(), {1}, primes, kDefaultEnumerationBudget,
                                           /*allow_insufficient=*/true);
    CHECK(fit.status == FitStatus::insufficient);
    CHECK(!fit.validated());
    CHECK(fit.points.size() == 2);
}

TEST_CASE("budget skips are recorded") {
    // At dims (2) the 2-loop space is p^8; budget 2^16 admits 2 and 3 but
    // not 5.
    std::vector<uint32_t> primes{2, 3, 5};
    ConservativeFit fit = conservative_fit(two_loop(), {2}, primes, uint64_t(1) << 16,
                                           /*allow_insufficient=*/true);
    CHECK(fit.points.size() == 2);
    CHECK(fit.skipped_primes == std::vector<uint32_t>{5});
    CHECK(fit.status == FitStatus::insufficient);

    std::vector<uint32_t> none{7};
    CHECK_THROWS_AS(
        conservative_fit(two_loop(), {2}, none, uint64_t(1) << 16, true), budget_error);
}

TEST_CASE("held-out prime validates the fit") {
    // Bound 1 at Jordan dims (1): two primes interpolate, a third validates.
    std::vector<uint32_t> primes{2, 3, 5};
    ConservativeFit fit =
        conservative_fit(jordan(), {1}, primes, kDefaultEnumerationBudget, false);
    CHECK(fit.status == FitStatus::validated);

    // Exactly bound+1 points: nothing held out.
    std::vector<uint32_t> exact{2, 3};
    ConservativeFit bare =
        conservative_fit(jordan(), {1}, exact, kDefaultEnumerationBudget, false);
    CHECK(bare.status == FitStatus::unvalidated);
    CHECK(bare.poly == fit.poly);
}

TEST_CASE("fit reproduces a held-out prime not used anywhere") {
    std::vector<uint32_t> primes{2, 3, 5};
    LaurentPoly c = conservative_poly(two_loop(), {1}, primes);
    uint64_t at7 = enumerate_and_classify(two_loop(), {1}, 7).conservative;
    CHECK(c.eval(Rat(7)) == Rat(static_cast<long>(at7)));
}

TEST_CASE("conservative is bounded by monomorphic and epimorphic counts") {
    for (const Quiver& q : {jordan(), two_loop()}) {
        for (int k : {1, 2}) {
            for (uint32_t p : {2u, 3u}) {
                ClassifyCounts c = enumerate_and_classify(q, {k}, p);
                CHECK(c.conservative <= c.monomorphic);
                CHECK(c.conservative <= c.epimorphic);
                Rat qq(static_cast<long>(p));
                CHECK(Rat(static_cast<long>(c.conservative)) <= m_poly(q, {k}).eval(qq));
                CHECK(Rat(static_cast<long>(c.conservative)) <= e_poly(q, {k}).eval(qq));
            }
        }
    }
}

TEST_CASE("count table") {
    CountTable table = CountTable::build(jordan(), 2);
    CHECK(table.poly({0}) == LaurentPoly::one());
    CHECK(table.poly({1}) == LaurentPoly::monomial(1) - LaurentPoly::one());
    // Conservative Jordan representations are the invertible matrices.
    CHECK(table.poly({2}) == gl_factor(2));
    CHECK(table.fully_validated());
    CHECK_THROWS_AS(table.fit({3}), precondition_error);

    // The kronecker extension at low degree is in easy budget range.
    CountTable kt = CountTable::build(kronecker().extend(), 1);
    CHECK(kt.fully_validated());
    CHECK(kt.poly({0, 0, 0}) == LaurentPoly::one());
}

TEST_CASE("count table flags out-of-budget entries instead of failing") {
    CountTable table = CountTable::build(two_loop(), 2, uint64_t(1) << 16);
    CHECK(table.fit({1}).status == FitStatus::validated);
    CHECK(table.fit({2}).status == FitStatus::insufficient);
    CHECK(!table.fully_validated());
    CHECK(!table.fit({2}).skipped_primes.empty());
}
