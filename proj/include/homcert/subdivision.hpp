#pragma once

#include <vector>

#include "homcert/complex.hpp"

namespace homcert {

/// Barycentric subdivision. Vertices of the subdivision are barycenters,
/// labeled by the face of the base complex they subdivide; the token scheme
/// "d<XY>(t1,t2,...)" sorts by carrier dimension first, so every flag
/// simplex is stored with carriers in ascending dimension order.
struct SubdividedComplex {
    SimplicialComplex complex;
    SimplicialComplex base;
    std::vector<Simplex> carrier;  // subdivision vertex id -> face of base

    const Simplex& carrier_of(VertexId v) const { return carrier.at(v); }
    VertexId barycenter_id(const Simplex& base_face) const;  // throws if absent
    /// Flag property: carriers of the vertices of any simplex form a chain
    /// under face inclusion.
    bool verify_flag_property() const;
};

std::string barycenter_token(const SimplicialComplex& base, const Simplex& face);

SubdividedComplex barycentric_subdivision(const SimplicialComplex& K);

/// The dual cone of a simplex: the subcomplex of the barycentric subdivision
/// of simplices meeting the base simplex exactly in its barycenter, i.e. the
/// flags whose minimum carrier contains the base simplex. The cone is the
/// cone on its link part with apex the barycenter of the base.
struct DualCone {
    Simplex base;
    SimplicialComplex cone_complex;  // flags with every carrier containing base
    SimplicialComplex link_part;     // flags with every carrier strictly containing base

    void verify_invariants(const SimplicialComplex& K) const;
};

DualCone dual_cone(const SimplicialComplex& K, const Simplex& s);

/// Number of faces r with t <= r <= s in the face poset of K; used for the
/// simplex/dual-cone incidence counts without materializing subdivisions.
int interval_face_count(const SimplicialComplex& K, const Simplex& t, const Simplex& s);

/// Chains of length (d+1) in the face poset of K, counted by brute force.
/// Equals the number of d-faces of the barycentric subdivision.
long long poset_chain_count(const SimplicialComplex& K, int d);

}  // namespace homcert
