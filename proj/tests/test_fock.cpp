#include <doctest.h>

#include "qzeta/fock.hpp"
#include "qzeta/hilbert.hpp"

using namespace qzeta;

TEST_CASE("model ring validation") {
    CHECK_THROWS_AS(FrobeniusRing({{0, 1}, {2, 0}}, {0, 0}), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(FrobeniusRing({{0, 0}, {0, 0}}, {0, 0}), std::invalid_argument);  // singular
    CHECK_THROWS_AS(FrobeniusRing({{1}}, {1, 2}), std::invalid_argument);  // K length mismatch

    CHECK_THROWS_AS(
        (void)FrobeniusRing::from_json_string(R"({"r":1,"intersection":[[1]],"K":[-3],"chi":5})"),
        std::invalid_argument);
    FrobeniusRing ok = FrobeniusRing::from_json_string(
        R"({"r":1,"intersection":[[1]],"K":[-3],"L":[2],"chi":3})");
    CHECK(ok.chi() == 3);
    CHECK(ok.pairings_of(ok.unit()).pair_K2 == 9);
}

TEST_CASE("ring multiplication and pairing on the plane model") {
    FrobeniusRing p2 = projective_plane_model();
    CHECK(p2.chi() == 3);
    auto H = p2.basis(1);
    CHECK(p2.pair(H, H) == 1);
    CHECK(p2.pair(p2.unit(), p2.point()) == 1);
    CHECK(p2.pair(p2.unit(), p2.unit()) == 0);
    CHECK(p2.pair(p2.canonical_class(), p2.canonical_class()) == 9);
    CHECK(p2.pair(p2.euler_class(), p2.unit()) == 3);

    auto KK = p2.mul(p2.canonical_class(), p2.canonical_class());
    CHECK(KK[2] == 9);  // 9 * point

    SUBCASE("pairings of basis classes") {
        SurfacePairings pt = p2.pairings_of(p2.point());
        CHECK(pt.pair_1 == 1);
        CHECK(pt.pair_e == 0);
        SurfacePairings h = p2.pairings_of(H);
        CHECK(h.pair_K == -3);
        CHECK(h.pair_1 == 0);
    }
}

TEST_CASE("comultiplication of the unit on the plane model") {
    FrobeniusRing p2 = projective_plane_model();
    auto terms = p2.comultiply(p2.unit(), 2);
    // 1 (x) pt + H (x) H + pt (x) 1
    REQUIRE(terms.size() == 3);
    for (const auto& [c, legs] : terms) {
        CHECK(c == 1);
        CHECK(legs.size() == 2);
        CHECK(((legs[0] == 0 && legs[1] == 2) || (legs[0] == 1 && legs[1] == 1) ||
               (legs[0] == 2 && legs[1] == 0)));
    }
}

TEST_CASE("Fock space enumeration") {
    FrobeniusRing p2 = projective_plane_model();
    FockSpace space(p2, 5);
    // colored partition counts with 3 colors: 1, 3, 9, 22, 51, 108
    CHECK(space.degree_block(0).second - space.degree_block(0).first == 1);
    CHECK(space.degree_block(1).second - space.degree_block(1).first == 3);
    CHECK(space.degree_block(2).second - space.degree_block(2).first == 9);
    CHECK(space.degree_block(3).second - space.degree_block(3).first == 22);
    CHECK(space.degree_block(4).second - space.degree_block(4).first == 51);
    CHECK(space.degree_block(5).second - space.degree_block(5).first == 108);
}

TEST_CASE("Heisenberg action") {
    FrobeniusRing p2 = projective_plane_model();
    FockSpace space(p2, 4);

    SUBCASE("a_0 is the zero operator") {
        CHECK(heisenberg(space, 0, p2.unit()).is_zero());
    }

    SUBCASE("annihilation against a single creation") {
        // a_1(pt) a_{-1}(1)|0> = -<pt, 1>|0> = -|0>
        SparseVector vacuum{{0, Rational(1)}};
        SparseVector created = heisenberg_apply(space, -1, p2.unit(), vacuum);
        REQUIRE(created.size() == 1);
        SparseVector back = heisenberg_apply(space, 1, p2.point(), created);
        REQUIRE(back.size() == 1);
        CHECK(back.begin()->first == 0);
        CHECK(back.begin()->second == -1);
    }

    SUBCASE("creation on the vacuum lands on the expected basis element") {
        SparseVector vacuum{{0, Rational(1)}};
        SparseVector v = heisenberg_apply(space, -2, p2.canonical_class(), vacuum);
        REQUIRE(v.size() == 1);
        const FockBasisElement& e = space.element(v.begin()->first);
        REQUIRE(e.factors.size() == 1);
        CHECK(e.factors[0] == std::pair<int, int>{2, 1});
        CHECK(v.begin()->second == -3);  // K = -3 H
    }

    SUBCASE("creation beyond the window flags truncation") {
        FockOperator op = heisenberg(space, -5, p2.unit());
        CHECK(op.truncated());
    }
}

TEST_CASE("normalized Heisenberg monomials") {
    FrobeniusRing p2 = projective_plane_model();
    FockSpace space(p2, 4);

    SUBCASE("empty partition is the unit-pairing scalar") {
        FockOperator a = a_lambda(space, GenPartition{}, p2.point());
        CHECK(same_matrix(a, FockOperator::identity(space)));
        CHECK(a_lambda(space, GenPartition{}, p2.unit()).is_zero());
    }

    SUBCASE("balanced pair contracts through the diagonal class") {
        // tau_2(pt) = pt (x) pt, so a_{(-1,1)}(pt) a_{-1}(1)|0> = -a_{-1}(pt)|0>
        FockOperator a = a_lambda(space, GenPartition{-1, 1}, p2.point());
        SparseVector vacuum{{0, Rational(1)}};
        SparseVector v = heisenberg_apply(space, -1, p2.unit(), vacuum);
        SparseVector image = a.apply(v);
        FockBasisElement expected{{{1, 2}}};
        REQUIRE(image.size() == 1);
        CHECK(image.begin()->first == space.index_of(expected));
        CHECK(image.begin()->second == -1);
    }
}

TEST_CASE("vertex operator vacuum expectation") {
    FrobeniusRing p2 = projective_plane_model();
    FockSpace space(p2, 3);
    FockOperator w = w_operator(space);
    const auto& col = w.column(0);
    auto it = col.find(0);
    REQUIRE(it != col.end());
    CHECK(it->second == 1);
}

TEST_CASE("partition-series trace on the plane model") {
    VertexTraceContext ctx(projective_plane_model(), 4);
    CHECK(equal_to_order(ctx.trace_q_w(), goettsche_series(3, 4), 4));
}

TEST_CASE("partition-series trace on the small K-trivial model") {
    VertexTraceContext ctx(k3_like_small_model(), 4);
    CHECK(equal_to_order(ctx.trace_q_w(), goettsche_series(4, 4), 4));
}

TEST_CASE("closed-form trace agreement at depth 4") {
    FrobeniusRing p2 = projective_plane_model();
    VertexTraceContext ctx(p2, 4);
    for (const GenPartition& lam :
         {GenPartition{-1, 1}, GenPartition{-2, 2}, GenPartition{-2, -1, 3},
          GenPartition{-1, -1, 2}, GenPartition{-1, -1, 1, 1}}) {
        for (int a = 0; a < p2.dim(); ++a) {
            FockOperator m = a_lambda(ctx.space(), lam, p2.basis(a));
            m *= Rational(1) / Rational(lam.factorial());
            PowerSeries traced = ctx.trace_q_w(m);
            PowerSeries closed = trace_closed_form_reduced(lam, p2.pairings_of(p2.basis(a)), 4);
            PowerSeries expected = goettsche_series(3, 4) * closed;
            CHECK(equal_to_order(traced, expected, 4));
        }
    }
}

TEST_CASE("degree-two Chern operator kills the vacuum") {
    FrobeniusRing p2 = projective_plane_model();
    FockSpace space(p2, 3);
    FockOperator g2 = g2_operator(space, p2.unit());
    CHECK(g2.column(0).empty());
}

TEST_CASE("degree-two Chern operator trace at depth 4") {
    FrobeniusRing p2 = projective_plane_model();
    VertexTraceContext ctx(p2, 4);
    FockOperator g2 = g2_operator(ctx.space(), p2.unit());
    PowerSeries traced = ctx.trace_q_w(g2);
    PowerSeries expected =
        goettsche_series(3, 4) * f2_reduced_direct(p2.pairings_of(p2.unit()), 4);
    CHECK(equal_to_order(traced, expected, 4));
}

TEST_CASE("K-trivial model drops the canonical groups") {
    FrobeniusRing k3s = k3_like_small_model();
    VertexTraceContext ctx(k3s, 4);
    FockOperator g2 = g2_operator(ctx.space(), k3s.unit());
    PowerSeries traced = ctx.trace_q_w(g2);
    PowerSeries expected =
        goettsche_series(4, 4) * f2_reduced_direct(k3s.pairings_of(k3s.unit()), 4);
    CHECK(equal_to_order(traced, expected, 4));
}

TEST_CASE("large K-trivial model reproduces its partition series at depth 5") {
    VertexTraceContext ctx(k3_model(), 5);
    CHECK(equal_to_order(ctx.trace_q_w(), goettsche_series(24, 5), 5));
}

TEST_CASE("model realization from chi and K^2") {
    for (auto [chi, K2] : std::vector<std::pair<long, long>>{
             {3, 9}, {3, 0}, {4, -7}, {4, 2}, {5, 13}, {24, 0}, {2, 0}, {11, -6}}) {
        auto model = realize_model(chi, K2);
        REQUIRE(model.has_value());
        CHECK(model->chi() == chi);
        SurfacePairings p = model->pairings_of(model->unit());
        CHECK(p.pair_K2 == K2);
        CHECK(p.pair_e == chi);
    }
    CHECK_FALSE(realize_model(1, 0).has_value());
    CHECK_FALSE(realize_model(2, 5).has_value());

    SUBCASE("a realized ring feeds the trace machinery") {
        auto model = realize_model(4, -7);
        VertexTraceContext ctx(*model, 3);
        CHECK(equal_to_order(ctx.trace_q_w(), goettsche_series(4, 3), 3));
    }
}
