#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "specmap/diophantine.hpp"
#include "specmap/errors.hpp"
#include "specmap/rng.hpp"

using namespace specmap;

namespace {

/// Brute-force nested-loop oracle, independent of the library enumerator.
std::vector<std::vector<int>> bruteSolutions(const std::vector<int>& ks, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> x(ks.size(), 0);
    while (true) {
        long long total = 0;
        for (std::size_t i = 0; i < ks.size(); ++i) total += static_cast<long long>(ks[i]) * x[i];
        if (total == m) out.push_back(x);
        // odometer over 0..m per digit
        std::size_t d = ks.size();
        while (d > 0) {
            --d;
            if (++x[d] <= m) break;
            x[d] = 0;
            if (d == 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
        }
    }
}

} // namespace

TEST_CASE("all_solutions examples") {
    CHECK(allSolutions({2}, 6).solutions == std::vector<std::vector<int>>{{3}});
    CHECK(allSolutions({1, 2}, 3).solutions ==
          std::vector<std::vector<int>>{{1, 1}, {3, 0}});
    CHECK(allSolutions({2, 3}, 1).solutions.empty());
}

TEST_CASE("all_solutions matches the brute-force oracle") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = 1 + static_cast<int>(rng.below(4));
        std::vector<int> ks;
        for (int i = 0; i < p; ++i) ks.push_back(1 + static_cast<int>(rng.below(6)));
        const int m = static_cast<int>(rng.below(31));
        CHECK(allSolutions(ks, m).solutions == bruteSolutions(ks, m));
    }
}

TEST_CASE("decide_shrink examples") {
    const Decision d1 = decideShrink({2}, {4, 6});
    CHECK(d1.verdict == Verdict::Yes);
    REQUIRE(d1.witness.has_value());
    CHECK(*d1.witness == SolutionFamily{{2}, {3}});

    CHECK(decideShrink({1, 2}, {3}).verdict == Verdict::Yes);
    CHECK(decideShrink({2, 3}, {1}).verdict == Verdict::No);
}

TEST_CASE("decide_shrink agrees with the representability table") {
    const std::vector<int> ks{2, 5};
    const std::vector<bool> table = representabilityTable(ks, 50);
    CHECK(table[0]); // zero is representable by the empty combination
    for (int m = 1; m <= 50; ++m)
        CHECK((decideShrink(ks, {m}).verdict == Verdict::Yes) == table[static_cast<std::size_t>(m)]);
}

TEST_CASE("decide_preserve examples") {
    const Decision d1 = decidePreserve({1, 2}, {3});
    CHECK(d1.verdict == Verdict::Yes);
    REQUIRE(d1.witness.has_value());
    CHECK(*d1.witness == SolutionFamily{{1, 1}});

    CHECK(decidePreserve({2}, {4}).verdict == Verdict::Yes);

    // shrink yes via (2,0), preserve no: no solution of m=2 uses k=3
    CHECK(decideShrink({1, 3}, {2}).verdict == Verdict::Yes);
    CHECK(decidePreserve({1, 3}, {2}).verdict == Verdict::No);
}

TEST_CASE("decide_all_shrink_preserving tri-valued verdicts") {
    const Decision no = decideAllShrinkPreserving({1, 2}, {3}, true);
    CHECK(no.verdict == Verdict::No);
    REQUIRE(no.witness.has_value());
    CHECK(*no.witness == SolutionFamily{{3, 0}}); // misses i = 2

    CHECK(decideAllShrinkPreserving({2}, {2}, true).verdict == Verdict::Yes);

    const Decision und = decideAllShrinkPreserving({2, 3}, {2, 3}, false);
    CHECK(und.verdict == Verdict::Undetermined);
    CHECK(und.note.find("converse") != std::string::npos);

    // vacuous when no shrinking map exists at all
    const Decision vac = decideAllShrinkPreserving({2, 3}, {1}, true);
    CHECK(vac.verdict == Verdict::Yes);
    CHECK(vac.note.find("vacuous") != std::string::npos);
}

TEST_CASE("frobenius number examples and errors") {
    CHECK(frobeniusNumber({2, 3}) == 1);
    CHECK(frobeniusNumber({3, 5}) == 7);
    CHECK(frobeniusNumber({3, 4}) == 5);
    CHECK(frobeniusNumber({6, 10, 15}) == 29);
    CHECK_THROWS_WITH_AS(frobeniusNumber({3}), doctest::Contains("p >= 2"), ValidationError);
    CHECK_THROWS_WITH_AS(frobeniusNumber({1, 4}), doctest::Contains("1 is among"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(frobeniusNumber({4, 6}), doctest::Contains("coprime"),
                         ValidationError);
}

TEST_CASE("frobenius boundary property") {
    for (const std::vector<int>& ks :
         {std::vector<int>{3, 5}, std::vector<int>{4, 7}, std::vector<int>{3, 5, 7},
          std::vector<int>{2, 9}}) {
        const int g = frobeniusNumber(ks);
        CHECK(allSolutions(ks, g).solutions.empty());
        const int kmin = *std::min_element(ks.begin(), ks.end());
        for (int m = g + 1; m <= g + kmin; ++m) CHECK(allSolutions(ks, m).exists());
    }
}

TEST_CASE("preserve implies shrink (monotonicity)") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const int p = 1 + static_cast<int>(rng.below(3));
        const int q = 1 + static_cast<int>(rng.below(2));
        std::vector<int> ks, ms;
        for (int i = 0; i < p; ++i) ks.push_back(1 + static_cast<int>(rng.below(4)));
        for (int j = 0; j < q; ++j) ms.push_back(1 + static_cast<int>(rng.below(12)));
        if (decidePreserve(ks, ms).verdict == Verdict::Yes)
            CHECK(decideShrink(ks, ms).verdict == Verdict::Yes);
    }
}

TEST_CASE("eigenvalue selection corollary") {
    CHECK(eigenvalueSelectionExists({1, 1}));
    CHECK_FALSE(eigenvalueSelectionExists({2}));
    CHECK(eigenvalueSelectionExists({2, 3, 1}));
    for (const std::vector<int>& ks :
         {std::vector<int>{1, 1}, std::vector<int>{2}, std::vector<int>{2, 3, 1},
          std::vector<int>{3, 4}})
        CHECK(eigenvalueSelectionExists(ks) == (decideShrink(ks, {1}).verdict == Verdict::Yes));
}
