#pragma once

#include <vector>

#include "homcert/complex.hpp"
#include "homcert/descriptor.hpp"

namespace homcert {

/// Finitely presented group. Relator letters are +-(generator index + 1).
struct GroupPresentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

/// Edge-path presentation of a connected complex: spanning tree by BFS over
/// sorted vertex order, one generator per non-tree edge, one relator per
/// triangle. Throws disconnected-complex otherwise.
GroupPresentation edge_path_presentation(const SimplicialComplex& K);

/// Abelianization from the exponent-sum matrix of the relators.
GroupDescriptor presentation_abelianization(const GroupPresentation& p);

/// Free reduction plus cyclic reduction.
std::vector<int> reduce_word(const std::vector<int>& w, bool cyclically);

}  // namespace homcert
