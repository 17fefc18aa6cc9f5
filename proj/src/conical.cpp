#include "homcert/conical.hpp"

#include "homcert/subdivision.hpp"

namespace homcert {

ConicalChainComplex conical_chain_complex(const SimplicialComplex& K, const ManifoldReport& cert,
                                          bool verify_homology) {
    require(cert.is_homology_manifold, errc::invalid_precondition,
            "conical chain complex requires a certified homology manifold");
    require(cert.closed, errc::invalid_precondition,
            "conical chain complex is implemented for closed manifolds");
    const int n = K.dimension();

    FreeComplex simp = simplicial_chains(K);
    ConicalChainComplex out;
    out.manifold_dim = n;
    FreeComplex& c = out.complex;
    c.top = n;
    c.size.resize(n + 1);
    c.labels.resize(n + 1);
    for (int d = 0; d <= n; ++d) {
        c.size[d] = K.face_count(n - d);
        for (const auto& s : K.faces(n - d)) c.labels[d].push_back(K.label_of(s));
    }
    c.d_plain.resize(n + 2);
    c.d_twist.resize(n + 2);
    c.d_plain[0] = IntegerMatrix(0, c.size[0]);
    c.d_twist[0] = IntegerMatrix(0, c.size[0]);
    for (int d = 1; d <= n; ++d) {
        c.d_plain[d] = simp.plain(n - d + 1).transpose();
        c.d_twist[d] = IntegerMatrix(c.size[d - 1], c.size[d]);
    }
    c.d_plain[n + 1] = IntegerMatrix(c.size[n], 0);
    c.d_twist[n + 1] = IntegerMatrix(c.size[n], 0);
    c.verify_dd_zero();

    // Degree-d basis count equals the (n-d)-simplex count by construction;
    // the substantive check is that the conical complex computes the
    // homology of K (Poincare duality made exact: for orientable K the
    // ordinary homology, for non-orientable K the orientation-twisted one).
    if (verify_homology) {
        ChainComplexData conical_data = assemble(c, CoefficientSystem::integers());
        if (cert.orientable) {
            ChainComplexData base = assemble(simp, CoefficientSystem::integers());
            for (int d = 0; d <= n; ++d) {
                require(homology_of(conical_data, d) == homology_of(base, d), errc::internal,
                        "conical homology differs from the homology of the complex in degree " +
                            std::to_string(d));
            }
        } else {
            auto orient = orientability_and_double_cover(K);
            ChainComplexData twisted = assemble(
                cover_chains(orient.cover),
                CoefficientSystem::integers().with_orientation_twist());
            for (int d = 0; d <= n; ++d) {
                require(homology_of(conical_data, d) == homology_of(twisted, d), errc::internal,
                        "conical homology differs from the twisted homology in degree " +
                            std::to_string(d));
            }
        }
    }
    return out;
}

bool dual_cone_incidence_is_permutation(const SimplicialComplex& K) {
    const int n = K.dimension();
    for (int k = 0; k <= n; ++k) {
        const auto& cells = K.faces(k);
        for (size_t a = 0; a < cells.size(); ++a) {
            for (size_t b = 0; b < cells.size(); ++b) {
                // Vertices of sd(cells[a]) inside the closed dual cone of
                // cells[b]: faces r with cells[b] <= r <= cells[a].
                int count = interval_face_count(K, cells[b], cells[a]);
                int expected = a == b ? 1 : 0;
                if (count != expected) return false;
            }
        }
    }
    return true;
}

}  // namespace homcert
