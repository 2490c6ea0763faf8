#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "specmap/errors.hpp"
#include "specmap/mapbuilder.hpp"
#include "specmap/rng.hpp"
#include "specmap/wedderburn.hpp"

using namespace specmap;
using namespace specmap::testing;

TEST_CASE("build_block_map layouts and validation") {
    const QuasiOrder m2 = fullRelation(2);
    SourcePipeline pipe = makeSmaPipeline(m2, condensation(m2));
    REQUIRE(pipe.ks == std::vector<int>{2});
    const ShrinkMapSpec spec = buildBlockMap(pipe, {4}, {{2}});
    CHECK(spec.blockOrder == std::vector<std::vector<int>>{{0, 0}});

    const QuasiOrder b12 = blockRelation({1, 2});
    SourcePipeline p12 = makeSmaPipeline(b12, condensation(b12));
    REQUIRE(p12.ks == std::vector<int>{1, 2});
    CHECK(buildBlockMap(p12, {3}, {{1, 1}}).blockOrder ==
          std::vector<std::vector<int>>{{0, 1}});
    CHECK(buildBlockMap(p12, {3}, {{3, 0}}).blockOrder ==
          std::vector<std::vector<int>>{{0, 0, 0}});

    CHECK_THROWS_AS(buildBlockMap(p12, {3}, {{1, 2}}), ValidationError); // 1+4 != 3
    CHECK_THROWS_AS(buildBlockMap(p12, {3, 3}, {{1, 1}}), ValidationError);
    CHECK_THROWS_AS(buildBlockMap(p12, {3}, {{1}}), ValidationError);
}

TEST_CASE("evaluate_map on SMA sources") {
    // unit -> identity
    const QuasiOrder b12 = blockRelation({1, 2});
    const Algebra a12 = smaAlgebra(b12);
    const ShrinkMapSpec spec =
        buildBlockMap(makeSmaPipeline(b12, condensation(b12)), {3}, {{1, 1}});
    const CMat unitImg = evaluateMap(spec, toF(a12.unit()));
    CHECK((unitImg - CMat::Identity(3, 3)).norm() < 1e-14);

    // upper-triangular 2x2, targets (1,1), family {(1,0)},{(0,1)}:
    // a = E_11 + 5 E_12 + 2 E_22 -> diag(1, 2) (block reading discards the radical)
    const QuasiOrder ut = upperTriangular2();
    const Algebra at = smaAlgebra(ut);
    const ShrinkMapSpec spec2 = buildBlockMap(makeSmaPipeline(ut, condensation(ut)), {1, 1},
                                              {{1, 0}, {0, 1}});
    GRVec coords(3);
    coords[static_cast<std::size_t>(ut.idx(0, 0))] = gr(1);
    coords[static_cast<std::size_t>(ut.idx(0, 1))] = gr(5);
    coords[static_cast<std::size_t>(ut.idx(1, 1))] = gr(2);
    const CMat img = evaluateMap(spec2, toF(coords));
    REQUIRE(img.rows() == 2);
    CHECK(std::abs(img(0, 0) - Cplx(1, 0)) < 1e-14);
    CHECK(std::abs(img(1, 1) - Cplx(2, 0)) < 1e-14);
    CHECK(std::abs(img(0, 1)) + std::abs(img(1, 0)) < 1e-14);
}

TEST_CASE("evaluate_map through the general quotient pipeline") {
    // C[x]/(x^2) -> M_1: alpha + beta t -> (alpha)
    const Algebra a = truncatedPoly(2);
    const WedderburnProfile prof = wedderburnProfile(a);
    const SourcePipeline pipe = makeGeneralPipeline(a, prof, 0, 1e-9);
    REQUIRE(pipe.ks == std::vector<int>{1});
    const ShrinkMapSpec spec = buildBlockMap(pipe, {1}, {{1}});
    const CMat img = evaluateMap(spec, {Cplx(7, 1), Cplx(3, 0)});
    REQUIRE(img.rows() == 1);
    CHECK(std::abs(img(0, 0) - Cplx(7, 1)) < 1e-9);

    // unit -> identity through every stage
    const CMat unitImg = evaluateMap(spec, toF(a.unit()));
    CHECK(std::abs(unitImg(0, 0) - Cplx(1, 0)) < 1e-9);
}

TEST_CASE("evaluate_map is multiplicative and linear on semisimple sources") {
    const Algebra s = directSumAlgebra({1, 2});
    const WedderburnProfile prof = wedderburnProfile(s);
    const ShrinkMapSpec spec =
        buildBlockMap(makeGeneralPipeline(s, prof, 0, 1e-9), {3}, {{1, 1}});
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        const Element x = randomElement(s, rng.next());
        const Element y = randomElement(s, rng.next());
        const CMat fx = evaluateMap(spec, x.xf), fy = evaluateMap(spec, y.xf);
        CHECK((evaluateMap(spec, s.mulF(x.xf, y.xf)) - fx * fy).norm() < 1e-8);
        std::vector<Cplx> sum(x.xf.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x.xf[i] + 2.0 * y.xf[i];
        CHECK((evaluateMap(spec, sum) - (fx + 2.0 * fy)).norm() < 1e-8);
    }
}

TEST_CASE("map specs round-trip through JSON bit-exactly") {
    // exact SMA pipeline
    const QuasiOrder b12 = blockRelation({1, 2});
    const ShrinkMapSpec spec =
        buildBlockMap(makeSmaPipeline(b12, condensation(b12)), {3}, {{1, 1}});
    const std::string json = mapSpecToJson(spec);
    const ShrinkMapSpec back = mapSpecFromJson(json);
    CHECK(mapSpecToJson(back) == json);
    CHECK(back.source.sma == spec.source.sma);
    CHECK(back.source.ks == spec.source.ks);
    CHECK(back.targets == spec.targets);
    CHECK(back.family == spec.family);
    CHECK(back.blockOrder == spec.blockOrder);
    REQUIRE(back.source.readers.size() == spec.source.readers.size());
    for (std::size_t i = 0; i < spec.source.readers.size(); ++i) {
        REQUIRE(back.source.readers[i].exact);
        CHECK(*back.source.readers[i].exactMap == *spec.source.readers[i].exactMap);
    }

    // float pipeline
    const Algebra a = truncatedPoly(3);
    const WedderburnProfile prof = wedderburnProfile(a);
    const ShrinkMapSpec fspec =
        buildBlockMap(makeGeneralPipeline(a, prof, 0, 1e-9), {2}, {{2}});
    const std::string fjson = mapSpecToJson(fspec);
    const ShrinkMapSpec fback = mapSpecFromJson(fjson);
    CHECK(mapSpecToJson(fback) == fjson);
    CHECK(fback.source.readers[0].floatMap == fspec.source.readers[0].floatMap);

    CHECK_THROWS_AS(mapSpecFromJson("{ not json"), SchemaError);
    CHECK_THROWS_AS(mapSpecFromJson("{}"), SchemaError);
}
