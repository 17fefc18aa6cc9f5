#pragma once

#include <vector>

#include "homcert/complex.hpp"

namespace homcert {

/// Orientation double cover of a pure, strongly connected complex whose
/// codimension-one faces lie in at most two facets. Total-space vertex
/// tokens are "<base token>~0" / "<base token>~1"; the deck involution swaps
/// the two lifts of every vertex and reverses the stored canonical
/// orientation.
struct DoubleCover {
    SimplicialComplex total;
    SimplicialComplex base;
    std::vector<VertexId> deck;        // involution on total vertex ids
    std::vector<VertexId> projection;  // total vertex id -> base vertex id
    bool base_orientable = false;

    /// Canonical orientation of the total space: sign per facet of `total`
    /// (indexed like total.facet_list()), forming a coherent orientation.
    std::vector<int> total_orientation;

    /// For orientable bases: the orientation of the base induced by the
    /// sheet-0 component (the component containing the positive lift of the
    /// lexicographically least facet). Empty when the base is non-orientable.
    std::vector<int> base_orientation;

    /// The two lifts of a base simplex, each sorted; [0] is the
    /// lexicographically smaller one.
    std::pair<Simplex, Simplex> lifts_of(const Simplex& base_simplex) const;
    Simplex deck_image(const Simplex& total_simplex) const;
    Simplex project(const Simplex& total_simplex) const;
};

struct OrientabilityResult {
    bool orientable = false;
    DoubleCover cover;
};

/// Throws not-a-pseudomanifold when K is not pure, has a codimension-one
/// face in more than two facets, is not strongly connected along
/// codimension-one faces, or when some vertex star is not orientation
/// coherent (no two-sheeted cover exists).
OrientabilityResult orientability_and_double_cover(const SimplicialComplex& K);

/// Coherence check: the facet signs form a cycle rel boundary (matching
/// codimension-one faces cancel). Signs are indexed like K.facet_list().
bool is_coherent_orientation(const SimplicialComplex& K, const std::vector<int>& signs);

}  // namespace homcert
