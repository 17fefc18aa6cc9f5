#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcert/coefficients.hpp"
#include "homcert/complex.hpp"
#include "homcert/cover.hpp"
#include "homcert/descriptor.hpp"
#include "homcert/matrix.hpp"

namespace homcert {

/// A chain complex of free modules over Z[Z/2] (the Z/2 part is trivial for
/// ordinary simplicial chains): differential D_d = plain_d + t * twist_d.
/// Index d runs 0..top+1 with empty shapes at both ends so homology at the
/// boundary degrees needs no special cases.
struct FreeComplex {
    int top = -1;
    std::vector<int> size;                         // degree -> rank, 0..top
    std::vector<IntegerMatrix> d_plain;            // [d]: size[d-1] x size[d]
    std::vector<IntegerMatrix> d_twist;            // same shapes; all-zero if untwisted
    std::vector<std::vector<std::string>> labels;  // degree -> basis labels
    bool equivariant = false;

    int size_at(int d) const { return (d < 0 || d > top) ? 0 : size[d]; }
    const IntegerMatrix& plain(int d) const;
    const IntegerMatrix& twist(int d) const;
    void verify_dd_zero() const;  // exact, over the group ring
};

/// Ordinary simplicial chains of K over Z; bases are the simplices of each
/// dimension in enumeration order.
FreeComplex simplicial_chains(const SimplicialComplex& K);

/// Chains of the orientation double cover as a free Z[Z/2]-complex: one basis
/// element per simplex orbit (the lexicographically smaller lift is the
/// representative), deck transformation acting as t.
FreeComplex cover_chains(const DoubleCover& cover);

/// Augmented complex, shifted so that H_{d+1}(augmented) = reduced H_d.
FreeComplex augmented_shifted(const FreeComplex& c);

/// The cochain complex as a chain complex with reversed grading:
/// degree j holds the (top-j)-cochains.
FreeComplex dualized(const FreeComplex& c);

/// Integer chain complex computing H_*( - ; A) for the coefficient system A:
/// the tensor over Z[Z/2] with the two-term free presentation of A, assembled
/// as a mapping cone (relations enter with independent rows, so the cone is
/// exact at the coefficient level).
struct ChainComplexData {
    int top = -1;
    std::vector<int> size;                // assembled ranks
    std::vector<int> cells;               // underlying cell counts
    std::vector<IntegerMatrix> boundary;  // [d]: size[d-1] x size[d], d in 0..top+1
    std::vector<std::vector<std::string>> labels;
    CoefficientSystem coeffs = CoefficientSystem::integers();

    int size_at(int d) const { return (d < 0 || d > top) ? 0 : size[d]; }
    const IntegerMatrix& boundary_at(int d) const;
    void verify_dd_zero() const;
};

ChainComplexData assemble(const FreeComplex& c, const CoefficientSystem& coeffs);

/// Spec-facing builder: simplicial chain complex of K with coefficients.
/// Twisted coefficient systems build the orientation double cover first
/// (errors propagate for non-pseudomanifolds).
ChainComplexData simplicial_chain_complex(const SimplicialComplex& K,
                                          const CoefficientSystem& coeffs);

GroupDescriptor homology_of(const ChainComplexData& data, int d);

GroupDescriptor homology(const SimplicialComplex& K, int d, const CoefficientSystem& coeffs);
GroupDescriptor cohomology(const SimplicialComplex& K, int d, const CoefficientSystem& coeffs);

struct TwistedHomologyResult {
    GroupDescriptor group;
    std::string note;  // set when the system was untwisted and the query
                       // reduced to ordinary homology of the base
};
TwistedHomologyResult twisted_homology(const DoubleCover& cover, int d,
                                       const CoefficientSystem& coeffs);

/// Reduced integral homology in degrees 0..dim(K). The empty complex has
/// reduced homology Z concentrated in degree -1, reported via the bool.
struct ReducedHomology {
    bool empty_complex = false;  // H~_{-1} = Z, all listed degrees trivial
    std::vector<GroupDescriptor> groups;
};
ReducedHomology reduced_homology(const SimplicialComplex& K);

/// Euler characteristic from Betti numbers over a field Z/p.
long long euler_characteristic_mod_p(const SimplicialComplex& K, const Int& p);

/// Blockwise application of a FreeComplex differential to vectors of
/// coefficient values (one Z^g value per basis element of degree d).
std::vector<std::vector<Int>> apply_differential(const FreeComplex& c, int d,
                                                 const CoefficientSystem& coeffs,
                                                 const std::vector<std::vector<Int>>& values);

}  // namespace homcert
