#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcert/presentation.hpp"

namespace homcert {

/// A finite permutation group given by generators, with its elements
/// enumerated. Catalog groups are named and sorted by (order, name).
struct PermGroup {
    std::string name;
    long long order = 0;
    int degree = 0;
    std::vector<std::vector<int>> generators;
    std::vector<std::vector<int>> elements;  // sorted
};

/// Deterministic catalog of nontrivial finite groups up to the order bound,
/// as permutation groups: cyclic, products of cyclics, dihedral, dicyclic,
/// alternating and symmetric up to degree 5, SL(2,3) and SL(2,5).
std::vector<PermGroup> quotient_catalog(int order_bound);

struct EpiEvidence {
    std::string group_name;
    long long group_order = 0;
    int degree = 0;
    std::vector<std::vector<int>> generator_images;  // one permutation per generator
};

/// Backtracking search for a surjection onto G; images enumerated in sorted
/// element order, relators pruned on prefixes. node_budget bounds the search
/// deterministically.
std::optional<EpiEvidence> find_epimorphism(const GroupPresentation& p, const PermGroup& G,
                                            long long node_budget);

/// Replay: all relators map to the identity and the images generate G.
bool verify_epimorphism(const GroupPresentation& p, const PermGroup& G, const EpiEvidence& ev);

/// Orders of catalog groups admitting an epimorphism (deduplicated, sorted).
std::vector<long long> quotient_order_spectrum(const GroupPresentation& p,
                                               const std::vector<PermGroup>& catalog,
                                               long long node_budget);

const PermGroup* find_group(const std::vector<PermGroup>& catalog, const std::string& name);

std::vector<int> compose_perms(const std::vector<int>& a, const std::vector<int>& b);  // a after b
std::vector<int> invert_perm(const std::vector<int>& a);

}  // namespace homcert
