#pragma once

#include "homcert/chains.hpp"
#include "homcert/manifold.hpp"

namespace homcert {

/// Chain complex on oriented dual cones: the degree-d basis is the set of
/// dual cones of (n-d)-simplices, labeled and enumerated like those
/// simplices. The boundary is the transported simplicial coboundary
/// (transpose of the (n-d+1)-boundary); +cone(s) corresponds to s with its
/// sorted orientation together with the canonical global orientation. This
/// is the convention documented in the README; any convention with a square
/// of zero and duality compatibility is equivalent for the checks below.
struct ConicalChainComplex {
    int manifold_dim = -1;
    FreeComplex complex;

    int cone_count(int d) const { return complex.size_at(d); }
};

/// Builds the conical chain complex of a certified homology manifold and
/// verifies its invariants: basis counts, exact square-zero, and that its
/// homology matches the homology of K (ordinary homology for orientable K,
/// the orientation-twisted homology otherwise). Requires a closed manifold.
ConicalChainComplex conical_chain_complex(const SimplicialComplex& K, const ManifoldReport& cert,
                                          bool verify_homology = true);

/// The simplex/dual-cone incidence for dimension pair (k, n-k): entry
/// (s, t) counts vertices of sd(s) lying in the closed dual cone of t. The
/// pairing statement is that this is the identity permutation matrix.
bool dual_cone_incidence_is_permutation(const SimplicialComplex& K);

}  // namespace homcert
