#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcert/chains.hpp"
#include "homcert/generators.hpp"
#include "homcert/presentation.hpp"
#include "homcert/smith.hpp"

using namespace homcert;

namespace {

GroupDescriptor Z() { return GroupDescriptor::free(1); }
GroupDescriptor Zmod(int k) { return GroupDescriptor::cyclic(k); }
GroupDescriptor zero() { return GroupDescriptor{}; }

std::vector<GroupDescriptor> homology_all(const SimplicialComplex& K,
                                          const CoefficientSystem& c) {
    ChainComplexData data = simplicial_chain_complex(K, c);
    std::vector<GroupDescriptor> out;
    for (int d = 0; d <= K.dimension(); ++d) out.push_back(homology_of(data, d));
    return out;
}

}  // namespace

TEST_CASE("boundary matrices of the tetrahedron boundary") {
    FreeComplex c = simplicial_chains(boundary_sphere(2));
    CHECK(c.plain(1).rows() == 4);
    CHECK(c.plain(1).cols() == 6);
    CHECK(c.plain(2).rows() == 6);
    CHECK(c.plain(2).cols() == 4);
    c.verify_dd_zero();
}

TEST_CASE("three-cycle boundary rank over Z/2") {
    FreeComplex c = simplicial_chains(boundary_sphere(1));
    CHECK(rank_mod_p(c.plain(1), 2) == 2);
}

TEST_CASE("sphere homology") {
    auto h = homology_all(boundary_sphere(2), CoefficientSystem::integers());
    CHECK(h == std::vector<GroupDescriptor>{Z(), zero(), Z()});
    auto h4 = homology_all(boundary_sphere(4), CoefficientSystem::integers());
    CHECK(h4 == std::vector<GroupDescriptor>{Z(), zero(), zero(), zero(), Z()});
    CHECK(homology(boundary_sphere(2), 7, CoefficientSystem::integers()) == zero());
    CHECK(homology(boundary_sphere(2), -1, CoefficientSystem::integers()) == zero());
}

TEST_CASE("projective plane over Z, Z/2 and via the presentation") {
    SimplicialComplex rp2 = rp2_six_vertex();
    auto h = homology_all(rp2, CoefficientSystem::integers());
    CHECK(h == std::vector<GroupDescriptor>{Z(), Zmod(2), zero()});
    auto h2 = homology_all(rp2, CoefficientSystem::integers_mod(2));
    CHECK(h2 == std::vector<GroupDescriptor>{Zmod(2), Zmod(2), Zmod(2)});
    // Independent route: abelianized edge-path group.
    CHECK(presentation_abelianization(edge_path_presentation(rp2)) == Zmod(2));
}

TEST_CASE("torus homology") {
    auto h = homology_all(torus_seven_vertex(), CoefficientSystem::integers());
    CHECK(h == std::vector<GroupDescriptor>{Z(), GroupDescriptor::free(2), Z()});
}

TEST_CASE("poincare sphere homology") {
    SimplicialComplex P = poincare_sphere();
    auto h = homology_all(P, CoefficientSystem::integers());
    CHECK(h == std::vector<GroupDescriptor>{Z(), zero(), zero(), Z()});
    CHECK(presentation_abelianization(edge_path_presentation(P)) == zero());
}

TEST_CASE("cohomology and universal-coefficient sanity") {
    for (const SimplicialComplex& K :
         {boundary_sphere(2), rp2_six_vertex(), torus_seven_vertex(), poincare_sphere()}) {
        ChainComplexData data = simplicial_chain_complex(K, CoefficientSystem::integers());
        for (int d = 0; d <= K.dimension(); ++d) {
            GroupDescriptor hd = homology_of(data, d);
            GroupDescriptor cd = cohomology(K, d, CoefficientSystem::integers());
            CHECK(cd.free_rank == hd.free_rank);
            GroupDescriptor hprev =
                d > 0 ? homology_of(data, d - 1) : GroupDescriptor{};
            CHECK(cd.torsion == hprev.torsion);
        }
    }
}

TEST_CASE("euler characteristic over fields matches the face count") {
    for (const SimplicialComplex& K :
         {boundary_sphere(3), rp2_six_vertex(), torus_seven_vertex(), poincare_sphere()}) {
        for (int p : {2, 3, 5})
            CHECK(euler_characteristic_mod_p(K, p) == K.euler_characteristic());
    }
}

TEST_CASE("assembled complexes square to zero") {
    for (const SimplicialComplex& K : {boundary_sphere(2), rp2_six_vertex()}) {
        for (const CoefficientSystem& c :
             {CoefficientSystem::integers(), CoefficientSystem::integers_mod(4),
              CoefficientSystem::presented(
                  2, IntegerMatrix::from_rows({{Int(2), Int(-2)}}))}) {
            ChainComplexData data = simplicial_chain_complex(K, c);
            data.verify_dd_zero();
        }
    }
}

TEST_CASE("homology with presented coefficients via the mapping cone") {
    // Z/2 (+) Z coefficients on RP^2: H_1 = Z/2 (+) (Z/2 (x) Z/2 part from tor).
    CoefficientSystem sum = CoefficientSystem::presented(
        2, IntegerMatrix::from_rows({{Int(2), Int(0)}}));
    auto h = homology_all(rp2_six_vertex(), sum);
    // H_d(K; Z (+) Z/2) = H_d(K;Z) (+) H_d(K;Z/2).
    CHECK(h[0] == GroupDescriptor{1, {2}});
    GroupDescriptor h1 = h[1];
    CHECK(h1.free_rank == 0);
    CHECK(h1.torsion == std::vector<Int>{2, 2});
    CHECK(h[2] == Zmod(2));
}

TEST_CASE("twisted homology") {
    // Orientable: the cover splits and the twisted top homology is Z.
    auto s3 = orientability_and_double_cover(boundary_sphere(3));
    CoefficientSystem zt = CoefficientSystem::integers().with_orientation_twist();
    CHECK(twisted_homology(s3.cover, 3, zt).group == Z());

    // RP^2 with twisted integers: (Z/2, 0, Z).
    auto rp2 = orientability_and_double_cover(rp2_six_vertex());
    CHECK(twisted_homology(rp2.cover, 0, zt).group == Zmod(2));
    CHECK(twisted_homology(rp2.cover, 1, zt).group == zero());
    CHECK(twisted_homology(rp2.cover, 2, zt).group == Z());

    // Twisted Euler characteristic (alternating free ranks) matches the
    // untwisted one.
    long long chi = 0;
    for (int d = 0; d <= 2; ++d) {
        GroupDescriptor g = twisted_homology(rp2.cover, d, zt).group;
        chi += (d % 2 ? -1 : 1) * g.free_rank;
    }
    CHECK(chi == rp2_six_vertex().euler_characteristic());

    // Untwisted request redirects to ordinary homology with a note.
    auto redirect = twisted_homology(rp2.cover, 1, CoefficientSystem::integers());
    CHECK(redirect.group == Zmod(2));
    CHECK(!redirect.note.empty());
}

TEST_CASE("reduced homology and the empty complex") {
    ReducedHomology r = reduced_homology(boundary_sphere(2));
    CHECK(!r.empty_complex);
    CHECK(r.groups == std::vector<GroupDescriptor>{zero(), zero(), Z()});
    ReducedHomology e = reduced_homology(SimplicialComplex());
    CHECK(e.empty_complex);
}
