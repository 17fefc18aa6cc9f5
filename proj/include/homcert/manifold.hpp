#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcert/chains.hpp"
#include "homcert/complex.hpp"
#include "homcert/presentation.hpp"
#include "homcert/quotients.hpp"

namespace homcert {

struct Budgets {
    int tietze_moves = 5000;
    int quotient_order_bound = 120;
    long long quotient_node_budget = 4'000'000;
    unsigned seed = 0;
    int jobs = 1;
};

enum class LinkVerdict { sphere_like, disk_like, bad };

inline const char* link_verdict_name(LinkVerdict v) {
    switch (v) {
        case LinkVerdict::sphere_like: return "sphere";
        case LinkVerdict::disk_like: return "disk";
        case LinkVerdict::bad: return "bad";
    }
    return "?";
}

struct LinkCertificate {
    Simplex simplex;
    int expected_sphere_dim = -1;
    LinkVerdict verdict = LinkVerdict::bad;
    ReducedHomology link_homology;
};

struct SCVerdictResult {
    enum class Value { yes, no, unknown };
    Value value = Value::unknown;
    std::vector<std::string> tietze_transcript;  // yes evidence
    int tietze_budget = 0;
    std::optional<EpiEvidence> witness;  // no evidence, on the original generators
    std::string note;
};

inline const char* sc_value_name(SCVerdictResult::Value v) {
    switch (v) {
        case SCVerdictResult::Value::yes: return "Yes";
        case SCVerdictResult::Value::no: return "No";
        case SCVerdictResult::Value::unknown: return "Unknown";
    }
    return "?";
}

struct VertexVerdict {
    std::string vertex;
    int link_dimension = -1;
    bool boundary_vertex = false;
    SCVerdictResult link_verdict;
    std::optional<SCVerdictResult> boundary_link_verdict;
};

struct ManifoldReport {
    int dimension = -1;
    bool is_homology_manifold = false;
    bool closed = false;
    bool orientable = false;
    std::vector<LinkCertificate> certificates;
    SimplicialComplex boundary_subcomplex;
    std::shared_ptr<ManifoldReport> boundary_report;

    bool singular_analysis_done = false;
    std::vector<VertexVerdict> singular_vertices;
    std::vector<VertexVerdict> unknown_vertices;
    std::vector<VertexVerdict> certified_vertices;
    std::string metadata_note;

    const LinkCertificate& certificate_for(const SimplicialComplex& K, const Simplex& s) const;
};

/// Link-criterion certification: every link must have the reduced homology
/// of a sphere of complementary dimension (or of a point, for boundary
/// simplices; the disk-like carriers form the boundary subcomplex, which is
/// recursively certified as a closed homology manifold one dimension down).
/// Only top-level links are homology-tested. Throws on non-pure complexes.
ManifoldReport is_homology_manifold(const SimplicialComplex& K, int jobs = 1);

/// Three-valued simple-connectivity decision with replayable evidence.
SCVerdictResult simply_connected_verdict(const GroupPresentation& p, const Budgets& budgets);
bool verify_sc_verdict(const GroupPresentation& p, const SCVerdictResult& v,
                       const Budgets& budgets);

/// Fill the report's singular-vertex analysis: vertices whose link has
/// dimension at least 3 and is certified non-simply-connected are singular;
/// Unknown verdicts are reported separately. Requires a certified homology
/// manifold. Boundary vertices are also tested against their link in the
/// boundary when that link has dimension at least 3.
void analyze_singular_vertices(const SimplicialComplex& K, ManifoldReport& report,
                               const Budgets& budgets);

/// Shared catalog for the verdict search (built once per order bound).
const std::vector<PermGroup>& shared_quotient_catalog(int order_bound);

}  // namespace homcert
