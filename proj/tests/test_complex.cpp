#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "homcert/complex.hpp"
#include "homcert/cover.hpp"
#include "homcert/generators.hpp"
#include "homcert/permutation.hpp"
#include "homcert/subdivision.hpp"

using namespace homcert;

namespace {

SimplicialComplex from(const std::vector<std::vector<std::string>>& f) {
    return SimplicialComplex::from_facets(f);
}

SimplicialComplex three_cycle() { return from({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

}  // namespace

TEST_CASE("boundary of the tetrahedron") {
    SimplicialComplex K = from({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    CHECK(K.dimension() == 2);
    CHECK(K.f_vector() == std::vector<int>{4, 6, 4});
    CHECK(K.euler_characteristic() == 2);
    CHECK(K.is_pure());
}

TEST_CASE("three-cycle f-vector") {
    SimplicialComplex K = three_cycle();
    CHECK(K.f_vector() == std::vector<int>{3, 3});
    CHECK(K.is_connected());
}

TEST_CASE("facets nested in other facets are absorbed") {
    SimplicialComplex K = from({{"a", "b", "c"}, {"a", "b"}, {"c"}});
    CHECK(K.facet_list().size() == 1);
    CHECK(K.f_vector() == std::vector<int>{3, 3, 1});
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(from({{"a", "a", "b"}}), Error);
    CHECK_THROWS_AS(from({}), Error);
    try {
        from({{"x", "x"}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::malformed_facet);
    }
}

TEST_CASE("poincare asset loads with the expected counts") {
    SimplicialComplex P = poincare_sphere();
    CHECK(P.f_vector() == std::vector<int>{16, 106, 180, 90});
    CHECK(P.euler_characteristic() == 0);
    CHECK(P.is_pure());
    // Closure: every triangle lies in exactly two tetrahedra.
    for (const auto& t : P.faces(2)) CHECK(P.facets_containing(t).size() == 2);
}

TEST_CASE("links in the boundary of the tetrahedron") {
    SimplicialComplex K = boundary_sphere(2);
    SimplicialComplex lv = K.link(K.simplex_from_tokens({"v00"}));
    CHECK(lv.f_vector() == std::vector<int>{3, 3});  // a 3-cycle
    SimplicialComplex le = K.link(K.simplex_from_tokens({"v00", "v01"}));
    CHECK(le.f_vector() == std::vector<int>{2});  // two points
    SimplicialComplex lf = K.link(K.simplex_from_tokens({"v00", "v01", "v02"}));
    CHECK(lf.is_empty());
    CHECK_THROWS_AS(K.link(Simplex{{0, 1, 2, 3}}), Error);
}

TEST_CASE("star examples") {
    SimplicialComplex C = three_cycle();
    SimplicialComplex st = C.star(C.simplex_from_tokens({"a"}));
    CHECK(st.f_vector() == std::vector<int>{3, 2});  // path of two edges
    SimplicialComplex K = boundary_sphere(2);
    SimplicialComplex stf = K.star(K.simplex_from_tokens({"v00", "v01", "v02"}));
    CHECK(stf.f_vector() == std::vector<int>{3, 3, 1});
    // Cone apex is in every facet of the cone.
    SimplicialComplex coneT = torus_seven_vertex().cone();
    SimplicialComplex sta = coneT.star(coneT.simplex_from_tokens({"@c0"}));
    CHECK(sta.same_labeled_complex(coneT));
}

TEST_CASE("join identity on the double suspension") {
    // The link of a suspension-circle edge in S^0 * S^0 * P is P itself.
    SimplicialComplex S2P = double_suspension_poincare();
    CHECK(S2P.vertex_count() == 20);
    Simplex edge = S2P.simplex_from_tokens({"v00", "@n0"});
    SimplicialComplex link = S2P.link(edge);
    CHECK(link.same_labeled_complex(poincare_sphere()));
}

TEST_CASE("random join/link identity") {
    std::mt19937 rng(20240817u);
    for (int trial = 0; trial < 12; ++trial) {
        SimplicialComplex A = trial % 2 ? boundary_sphere(1) : solid_simplex(2);
        SimplicialComplex B = trial % 3 ? boundary_sphere(0) : three_cycle();
        // Rename B's tokens to avoid collisions with A.
        std::vector<std::vector<std::string>> bf;
        for (const auto& f : B.facet_list()) {
            std::vector<std::string> toks;
            for (const auto& t : B.tokens_of(f)) toks.push_back("B" + t);
            bf.push_back(toks);
        }
        SimplicialComplex B2 = SimplicialComplex::from_facets(bf);
        SimplicialComplex J = join(A, B2);
        std::uniform_int_distribution<int> da(0, A.face_count(0) - 1);
        std::uniform_int_distribution<int> db(0, B2.face_count(0) - 1);
        Simplex alpha = A.faces(0)[da(rng)];
        Simplex beta = B2.faces(0)[db(rng)];
        Simplex joined = J.simplex_from_tokens(
            {A.tokens_of(alpha)[0], B2.tokens_of(beta)[0]});
        SimplicialComplex left = J.link(joined);
        SimplicialComplex right = join(A.link(alpha), B2.link(beta));
        CHECK(left.same_labeled_complex(right));
    }
}

TEST_CASE("barycentric subdivision of small complexes") {
    SimplicialComplex edge = solid_simplex(1);
    SubdividedComplex sd1 = barycentric_subdivision(edge);
    CHECK(sd1.complex.f_vector() == std::vector<int>{3, 2});

    SubdividedComplex sd2 = barycentric_subdivision(boundary_sphere(1));
    CHECK(sd2.complex.f_vector() == std::vector<int>{6, 6});

    SubdividedComplex sd3 = barycentric_subdivision(boundary_sphere(2));
    CHECK(sd3.complex.f_vector() == std::vector<int>{14, 36, 24});
    CHECK(sd3.verify_flag_property());
}

TEST_CASE("subdivision face counts match poset chains") {
    for (const SimplicialComplex& K :
         {boundary_sphere(2), rp2_six_vertex(), solid_simplex(3)}) {
        SubdividedComplex sd = barycentric_subdivision(K);
        for (int d = 0; d <= sd.complex.dimension(); ++d)
            CHECK(sd.complex.face_count(d) == poset_chain_count(K, d));
        CHECK(sd.complex.euler_characteristic() == K.euler_characteristic());
    }
}

TEST_CASE("dual cones") {
    SimplicialComplex K = boundary_sphere(2);
    // Dual cone of a facet: a single barycenter vertex.
    DualCone df = dual_cone(K, K.faces(2)[0]);
    CHECK(df.cone_complex.f_vector() == std::vector<int>{1});
    CHECK(df.link_part.is_empty());
    df.verify_invariants(K);

    // Dual cone of a vertex in the 3-cycle: a path of two subdivision edges.
    SimplicialComplex C = three_cycle();
    DualCone dv = dual_cone(C, C.simplex_from_tokens({"a"}));
    CHECK(dv.cone_complex.f_vector() == std::vector<int>{3, 2});
    dv.verify_invariants(C);

    // link part is the subdivision of the link.
    SimplicialComplex P = poincare_sphere();
    Simplex v = P.simplex_from_tokens({"p01"});
    DualCone dpv = dual_cone(P, v);
    dpv.verify_invariants(P);
    SubdividedComplex sdl = barycentric_subdivision(P.link(v));
    CHECK(dpv.link_part.face_count(0) == sdl.complex.face_count(0));
    CHECK(dpv.link_part.face_count(1) == sdl.complex.face_count(1));
    CHECK(dpv.link_part.face_count(2) == sdl.complex.face_count(2));
}

TEST_CASE("dual-cone partition: each simplex meets only its own dual cone") {
    for (const SimplicialComplex& K : {boundary_sphere(2), rp2_six_vertex()}) {
        for (int k = 0; k <= K.dimension(); ++k) {
            for (const auto& s : K.faces(k)) {
                for (const auto& t : K.faces(k)) {
                    int count = interval_face_count(K, t, s);
                    CHECK(count == (s == t ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("suspension and cone") {
    SimplicialComplex s0 = boundary_sphere(0);
    SimplicialComplex circle = s0.suspension();
    CHECK(circle.f_vector() == std::vector<int>{4, 4});
    SimplicialComplex cone = boundary_sphere(2).cone();
    CHECK(cone.same_labeled_complex(cone));
    CHECK(cone.f_vector() == std::vector<int>{5, 10, 10, 4});
    // Double suspension of the poincare sphere has 20 vertices.
    CHECK(double_suspension_poincare().vertex_count() == 20);
    // Token collision: a complex already using the apex token.
    SimplicialComplex bad = from({{"@c0", "x"}});
    CHECK_THROWS_AS(bad.cone(), Error);
}

TEST_CASE("orientability of spheres and the projective plane") {
    auto s3 = orientability_and_double_cover(boundary_sphere(3));
    CHECK(s3.orientable);
    CHECK(s3.cover.total.facet_list().size() == 2 * boundary_sphere(3).facet_list().size());

    auto rp2 = orientability_and_double_cover(rp2_six_vertex());
    CHECK(!rp2.orientable);
    CHECK(rp2.cover.total.vertex_count() == 12);
    CHECK(rp2.cover.total.facet_list().size() == 20);
    CHECK(rp2.cover.total.is_connected());
    CHECK(rp2.cover.total.euler_characteristic() == 2);

    auto circle = orientability_and_double_cover(three_cycle());
    CHECK(circle.orientable);

    auto torus = orientability_and_double_cover(torus_seven_vertex());
    CHECK(torus.orientable);
}

TEST_CASE("deck involution is free and orientation-reversing") {
    for (const auto& K : {boundary_sphere(2), rp2_six_vertex(), torus_seven_vertex()}) {
        auto result = orientability_and_double_cover(K);
        const DoubleCover& cov = result.cover;
        for (VertexId v = 0; v < cov.total.vertex_count(); ++v) {
            CHECK(cov.deck[v] != v);
            CHECK(cov.deck[cov.deck[v]] == v);
        }
        const auto& facets = cov.total.facet_list();
        for (size_t i = 0; i < facets.size(); ++i) {
            Simplex image = cov.deck_image(facets[i]);
            auto it = std::lower_bound(facets.begin(), facets.end(), image);
            REQUIRE(it != facets.end());
            int j = static_cast<int>(it - facets.begin());
            std::vector<VertexId> mapped;
            for (VertexId v : facets[i].v) mapped.push_back(cov.deck[v]);
            int push = cov.total_orientation[i] * sort_permutation_sign(mapped);
            CHECK(push == -cov.total_orientation[j]);
        }
    }
}

TEST_CASE("branching complexes are rejected") {
    SimplicialComplex branch = from({{"a", "b"}, {"b", "c"}, {"b", "d"}});
    CHECK_THROWS_AS(orientability_and_double_cover(branch), Error);
    SimplicialComplex impure = from({{"a", "b", "c"}, {"c", "d"}});
    CHECK_THROWS_AS(orientability_and_double_cover(impure), Error);
}

TEST_CASE("facet file round trip") {
    std::ostringstream out;
    poincare_sphere().write_facet_stream(out);
    std::istringstream in(out.str());
    SimplicialComplex back = SimplicialComplex::read_facet_stream(in);
    CHECK(back.same_labeled_complex(poincare_sphere()));

    std::istringstream bad("a b b\n");
    CHECK_THROWS_AS(SimplicialComplex::read_facet_stream(bad), Error);
    std::istringstream commented("# comment only\n\n");
    CHECK_THROWS_AS(SimplicialComplex::read_facet_stream(commented), Error);
}
