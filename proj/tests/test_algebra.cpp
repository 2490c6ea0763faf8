#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "specmap/errors.hpp"

using namespace specmap;
using namespace specmap::testing;

TEST_CASE("make_algebra validates simple algebras") {
    // C itself
    const Algebra c = Algebra::make(1, {{0, 0, 0, gr(1)}}, {gr(1)});
    CHECK(c.dim() == 1);

    // M_2 via matrix units
    const Algebra m2 = directSumAlgebra({2});
    CHECK(m2.dim() == 4);
    CHECK(m2.unit()[0] == gr(1)); // E_11 + E_22

    const Algebra ct2 = truncatedPoly(2);
    CHECK(ct2.dim() == 2);
}

TEST_CASE("associativity violations are reported with the failing triple") {
    // Corrupt C[x]/(x^3): declare t*t = 1 instead of t^2, so (t t) t != t (t t).
    std::vector<TensorEntry> tensor;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i + j < 3) tensor.emplace_back(i, j, i + j, gr(1));
    for (TensorEntry& e : tensor)
        if (std::get<0>(e) == 1 && std::get<1>(e) == 1) std::get<2>(e) = 0;
    GRVec unit(3);
    unit[0] = gr(1);
    try {
        Algebra::make(3, tensor, unit);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("associativity") != std::string::npos);
        CHECK(msg.find("(") != std::string::npos); // names a concrete triple
    }
}

TEST_CASE("regular representation examples") {
    const Algebra a = truncatedPoly(2);
    // a = 1_A -> identity
    const Element one = exactElement(a, a.unit());
    CHECK(regularRepExact(one) == ExactMatrix::identity(2));

    // alpha + beta t -> [[alpha, 0], [beta, alpha]]
    const Element el = exactElement(a, {gr(3), gr(5)});
    const ExactMatrix l = regularRepExact(el);
    CHECK(l.at(0, 0) == gr(3));
    CHECK(l.at(0, 1) == gr(0));
    CHECK(l.at(1, 0) == gr(5));
    CHECK(l.at(1, 1) == gr(3));

    // L_{E_12} in M_2 against literal 2x2 matrix products
    const QuasiOrder full2 = fullRelation(2);
    const Algebra m2 = smaAlgebra(full2);
    const int e12 = full2.idx(0, 1);
    GRVec coords(4);
    coords[static_cast<std::size_t>(e12)] = gr(1);
    const Element x = exactElement(m2, coords);
    const ExactMatrix lx = regularRepExact(x);
    const CMat xm = smaToMatrix(full2, x.xf);
    for (int j = 0; j < 4; ++j) {
        GRVec ej = basisVector(4, j);
        const CMat prod = xm * smaToMatrix(full2, toF(ej));
        const std::vector<Cplx> viaL = toF(lx.column(static_cast<std::size_t>(j)));
        const CMat back = smaToMatrix(full2, viaL);
        CHECK((prod - back).norm() < 1e-14);
    }
}

TEST_CASE("spectrum examples") {
    const Algebra a = truncatedPoly(2);
    const Element one = exactElement(a, a.unit());
    const std::vector<Cplx> spOne = spectrum(one, 1e-8);
    REQUIRE(spOne.size() == 1);
    CHECK(std::abs(spOne[0] - Cplx(1, 0)) < 1e-10);

    const Element el = exactElement(a, {gr(4), gr(7)});
    const std::vector<Cplx> sp = spectrum(el, 1e-8);
    REQUIRE(sp.size() == 1);
    CHECK(std::abs(sp[0] - Cplx(4, 0)) < 1e-7);

    // diag(1,2) + 5 in M_2 + C -> {1,2,5}
    const Algebra s = directSumAlgebra({2, 1});
    GRVec coords(5);
    coords[0] = gr(1); // E_11 of the M_2 block
    coords[3] = gr(2); // E_22 of the M_2 block
    coords[4] = gr(5); // the C block
    const std::vector<Cplx> sp3 = spectrum(exactElement(s, coords), 1e-8);
    CHECK(hausdorff(sp3, {Cplx(1, 0), Cplx(2, 0), Cplx(5, 0)}) < 1e-7);
}

TEST_CASE("invertibility examples") {
    const Algebra a = truncatedPoly(2);
    CHECK(isInvertible(exactElement(a, a.unit())));
    CHECK_FALSE(isInvertible(exactElement(a, {gr(0), gr(1)}))); // t
    CHECK(isInvertible(exactElement(a, {gr(1), gr(1)})));       // 1 + t
}

TEST_CASE("quotient algebra examples") {
    const Algebra a = truncatedPoly(2);
    const Quotient q = quotientAlgebra(a, {GRVec{gr(0), gr(1)}});
    CHECK(q.algebra.dim() == 1);
    // Q(alpha + beta t) = alpha
    const GRVec img = q.projection.apply({gr(3), gr(9)});
    CHECK(img[0] == gr(3));

    // zero ideal -> identity quotient
    const Quotient qid = quotientAlgebra(a, {});
    CHECK(qid.algebra.dim() == 2);
    CHECK(qid.projection == ExactMatrix::identity(2));

    // upper-triangular 2x2 by its strictly-upper part -> C + C
    const QuasiOrder ut = upperTriangular2();
    const Algebra t2 = smaAlgebra(ut);
    GRVec rad(3);
    rad[static_cast<std::size_t>(ut.idx(0, 1))] = gr(1);
    const Quotient qt = quotientAlgebra(t2, {rad});
    CHECK(qt.algebra.dim() == 2);
    for (int i = 0; i < 2; ++i) {
        GRVec ei = basisVector(2, i);
        CHECK(qt.algebra.mul(ei, ei) == ei); // idempotents
        GRVec ej = basisVector(2, 1 - i);
        for (const GaussRational& v : qt.algebra.mul(ei, ej)) CHECK(v.isZero());
    }
}

TEST_CASE("double quotient agrees with the quotient by the preimage ideal") {
    const Algebra a = truncatedPoly(4);
    GRVec t2 = basisVector(4, 2), t3 = basisVector(4, 3);
    const Quotient first = quotientAlgebra(a, {t3});
    // image of t^2 in the 3-dimensional quotient
    const GRVec t2bar = first.projection.apply(t2);
    const Quotient second = quotientAlgebra(first.algebra, {t2bar});
    const Quotient direct = quotientAlgebra(a, {t2, t3});
    CHECK(second.algebra.dim() == direct.algebra.dim());
    CHECK(second.algebra.tensorEntries() == direct.algebra.tensorEntries());
    CHECK(second.algebra.unit() == direct.algebra.unit());
}

TEST_CASE("validateIdeal rejects non-ideals with a witness") {
    const Algebra a = truncatedPoly(3);
    try {
        validateIdeal(a, {a.unit()}); // span{1} is not an ideal
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("not an ideal") != std::string::npos);
    }
}

TEST_CASE("direct sums") {
    CHECK(directSumAlgebra({1}).dim() == 1);
    const Algebra m2 = directSumAlgebra({2});
    // E_12 * E_21 = E_11, E_12 * E_12 = 0
    const GRVec p = m2.mul(basisVector(4, 1), basisVector(4, 2));
    CHECK(p == basisVector(4, 0));
    for (const GaussRational& v : m2.mul(basisVector(4, 1), basisVector(4, 1)))
        CHECK(v.isZero());
    CHECK(directSumAlgebra({1, 2}).dim() == 5);
}

TEST_CASE("spectra of direct sums are unions of block spectra") {
    const Algebra s = directSumAlgebra({2, 1});
    const Element e = randomElement(s, 5);
    std::vector<Cplx> blockCoords(e.xf.begin(), e.xf.begin() + 4);
    CMat x(2, 2);
    x(0, 0) = blockCoords[0]; x(0, 1) = blockCoords[1];
    x(1, 0) = blockCoords[2]; x(1, 1) = blockCoords[3];
    std::vector<Cplx> expected = spectrumSet(x, 1e-8);
    expected.push_back(e.xf[4]);
    expected = clusterCentroids(expected, 1e-8);
    CHECK(hausdorff(spectrum(e, 1e-8), expected) < 1e-7);
}

TEST_CASE("random elements are seed-deterministic") {
    const Algebra a = directSumAlgebra({2});
    const Element e1 = randomElement(a, 99), e2 = randomElement(a, 99);
    CHECK(e1.xf == e2.xf);
    const Element e3 = randomElement(a, 100);
    CHECK(e1.xf != e3.xf);
}

TEST_CASE("spectrum is invariant under exact change of basis") {
    const Algebra a = directSumAlgebra({2, 1});
    ExactMatrix t = ExactMatrix::identity(5);
    // a deliberately non-trivial invertible integer transition matrix
    t.at(0, 1) = gr(2); t.at(1, 3) = gr(-1); t.at(2, 4) = gr(3); t.at(3, 4) = gr(1);
    const Algebra b = conjugateBasis(a, t);
    const ExactMatrix tinv = t.inverse();
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const Element e = randomElement(a, seed);
        GRVec exactCoords(5);
        for (int i = 0; i < 5; ++i) {
            mpq_class re, im;
            REQUIRE(rationalReconstruct(e.xf[i].real(), 1 << 20, 1e-5, re));
            REQUIRE(rationalReconstruct(e.xf[i].imag(), 1 << 20, 1e-5, im));
            exactCoords[i] = GaussRational(re, im);
        }
        const Element ea = exactElement(a, exactCoords);
        const Element eb = exactElement(b, tinv.apply(exactCoords));
        CHECK(hausdorff(spectrum(ea, 1e-8), spectrum(eb, 1e-8)) <= 1e-7);
    }
}
