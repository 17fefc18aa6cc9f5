#include "homcert/manifold.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "homcert/cover.hpp"
#include "homcert/parallel.hpp"
#include "homcert/tietze.hpp"

namespace homcert {

namespace {

bool descriptor_is(const GroupDescriptor& g, int free_rank) {
    return g.free_rank == free_rank && g.torsion.empty();
}

LinkVerdict classify_link(const ReducedHomology& h, int expected_dim) {
    if (h.empty_complex) return expected_dim == -1 ? LinkVerdict::sphere_like : LinkVerdict::bad;
    bool all_trivial = true;
    for (const auto& g : h.groups) all_trivial = all_trivial && g.is_trivial();
    if (all_trivial) return LinkVerdict::disk_like;
    if (expected_dim < 0 || expected_dim >= static_cast<int>(h.groups.size()))
        return LinkVerdict::bad;
    for (int d = 0; d < static_cast<int>(h.groups.size()); ++d) {
        const GroupDescriptor& g = h.groups[d];
        if (d == expected_dim) {
            if (!descriptor_is(g, 1)) return LinkVerdict::bad;
        } else {
            if (!g.is_trivial()) return LinkVerdict::bad;
        }
    }
    return LinkVerdict::sphere_like;
}

}  // namespace

const LinkCertificate& ManifoldReport::certificate_for(const SimplicialComplex& K,
                                                       const Simplex& s) const {
    int offset = 0;
    for (int d = 0; d < s.dim(); ++d) offset += K.face_count(d);
    return certificates.at(offset + K.face_index(s));
}

ManifoldReport is_homology_manifold(const SimplicialComplex& K, int jobs) {
    require(!K.is_empty(), errc::empty_complex, "certification of the empty complex");
    require(K.is_pure(), errc::invalid_precondition,
            "homology-manifold certification requires a pure complex");
    const int n = K.dimension();

    ManifoldReport report;
    report.dimension = n;

    std::vector<Simplex> all;
    for (int d = 0; d <= n; ++d)
        for (const auto& s : K.faces(d)) all.push_back(s);
    report.certificates.resize(all.size());

    parallel_for(static_cast<int>(all.size()), jobs, [&](int i) {
        const Simplex& s = all[i];
        LinkCertificate cert;
        cert.simplex = s;
        cert.expected_sphere_dim = n - s.dim() - 1;
        cert.link_homology = reduced_homology(K.link(s));
        cert.verdict = classify_link(cert.link_homology, cert.expected_sphere_dim);
        report.certificates[i] = std::move(cert);
    });

    bool any_bad = false;
    std::vector<std::vector<std::string>> boundary_facets;
    for (const auto& cert : report.certificates) {
        if (cert.verdict == LinkVerdict::bad) any_bad = true;
        if (cert.verdict == LinkVerdict::disk_like)
            boundary_facets.push_back(K.tokens_of(cert.simplex));
    }

    if (any_bad) {
        report.is_homology_manifold = false;
        return report;
    }

    if (boundary_facets.empty()) {
        report.is_homology_manifold = true;
        report.closed = true;
    } else {
        report.boundary_subcomplex = SimplicialComplex::from_facets(boundary_facets);
        // Every face of the boundary subcomplex must itself be disk-like.
        bool boundary_consistent = true;
        for (int d = 0; d <= report.boundary_subcomplex.dimension() && boundary_consistent; ++d) {
            for (const auto& f : report.boundary_subcomplex.faces(d)) {
                Simplex in_K = K.simplex_from_tokens(report.boundary_subcomplex.tokens_of(f));
                if (report.certificate_for(K, in_K).verdict != LinkVerdict::disk_like)
                    boundary_consistent = false;
            }
        }
        bool boundary_ok = boundary_consistent &&
                           report.boundary_subcomplex.dimension() == n - 1;
        if (boundary_ok) {
            report.boundary_report =
                std::make_shared<ManifoldReport>(is_homology_manifold(report.boundary_subcomplex, jobs));
            boundary_ok = report.boundary_report->is_homology_manifold &&
                          report.boundary_report->closed;
        }
        report.is_homology_manifold = boundary_ok;
        report.closed = false;
    }

    if (report.is_homology_manifold && report.closed) {
        try {
            report.orientable = orientability_and_double_cover(K).orientable;
        } catch (const Error&) {
            report.orientable = false;
        }
    }
    return report;
}

const std::vector<PermGroup>& shared_quotient_catalog(int order_bound) {
    static std::mutex mutex;
    static std::map<int, std::vector<PermGroup>> catalogs;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = catalogs.find(order_bound);
    if (it == catalogs.end()) it = catalogs.emplace(order_bound, quotient_catalog(order_bound)).first;
    return it->second;
}

SCVerdictResult simply_connected_verdict(const GroupPresentation& p, const Budgets& budgets) {
    require(budgets.tietze_moves > 0 && budgets.quotient_order_bound > 0, errc::bad_argument,
            "budgets must be positive");
    SCVerdictResult out;
    out.tietze_budget = budgets.tietze_moves;

    TietzeOutcome tz = tietze_simplify(p, budgets.tietze_moves);
    if (tz.trivialized) {
        out.value = SCVerdictResult::Value::yes;
        out.tietze_transcript = tz.transcript;
        return out;
    }

    const auto& catalog = shared_quotient_catalog(budgets.quotient_order_bound);
    for (const auto& G : catalog) {
        auto epi = find_epimorphism(tz.simplified, G, budgets.quotient_node_budget);
        if (!epi) continue;
        // Translate the witness back to the original generators.
        EpiEvidence ev;
        ev.group_name = G.name;
        ev.group_order = G.order;
        ev.degree = G.degree;
        for (int i = 0; i < p.generators; ++i) {
            std::vector<int> img(G.degree);
            for (int q = 0; q < G.degree; ++q) img[q] = q;
            for (int letter : tz.original_in_simplified[i]) {
                const auto& gen = epi->generator_images[std::abs(letter) - 1];
                img = letter > 0 ? compose_perms(gen, img) : compose_perms(invert_perm(gen), img);
            }
            ev.generator_images.push_back(std::move(img));
        }
        require(verify_epimorphism(p, G, ev), errc::internal,
                "translated quotient witness failed verification");
        out.value = SCVerdictResult::Value::no;
        out.witness = std::move(ev);
        return out;
    }

    out.value = SCVerdictResult::Value::unknown;
    out.note = "budgets exhausted (tietze moves " + std::to_string(budgets.tietze_moves) +
               ", quotient order bound " + std::to_string(budgets.quotient_order_bound) + ")";
    return out;
}

bool verify_sc_verdict(const GroupPresentation& p, const SCVerdictResult& v,
                       const Budgets& budgets) {
    switch (v.value) {
        case SCVerdictResult::Value::yes:
            return verify_trivialization(p, v.tietze_transcript, v.tietze_budget);
        case SCVerdictResult::Value::no: {
            if (!v.witness) return false;
            const auto& catalog = shared_quotient_catalog(budgets.quotient_order_bound);
            const PermGroup* G = find_group(catalog, v.witness->group_name);
            return G != nullptr && verify_epimorphism(p, *G, *v.witness);
        }
        case SCVerdictResult::Value::unknown:
            return true;
    }
    return false;
}

void analyze_singular_vertices(const SimplicialComplex& K, ManifoldReport& report,
                               const Budgets& budgets) {
    require(report.is_homology_manifold, errc::invalid_precondition,
            "singular-vertex analysis requires a certified homology manifold");
    report.singular_analysis_done = true;
    report.singular_vertices.clear();
    report.unknown_vertices.clear();
    report.certified_vertices.clear();
    report.metadata_note =
        "links of dimension 3 with verdict Yes are reported as manifold points";

    const int link_dim = K.dimension() - 1;
    if (link_dim < 3) return;

    // Warm the catalog before the parallel region.
    shared_quotient_catalog(budgets.quotient_order_bound);

    std::set<std::string> boundary_tokens;
    if (!report.boundary_subcomplex.is_empty())
        for (int v = 0; v < report.boundary_subcomplex.vertex_count(); ++v)
            boundary_tokens.insert(report.boundary_subcomplex.token(v));

    std::vector<VertexVerdict> verdicts(K.vertex_count());
    parallel_for(K.vertex_count(), budgets.jobs, [&](int v) {
        VertexVerdict& out = verdicts[v];
        out.vertex = K.token(v);
        out.boundary_vertex = boundary_tokens.count(out.vertex) > 0;
        SimplicialComplex link = K.link(Simplex{{v}});
        out.link_dimension = link.dimension();
        if (out.link_dimension >= 3) {
            out.link_verdict = simply_connected_verdict(edge_path_presentation(link), budgets);
        } else {
            out.link_verdict.value = SCVerdictResult::Value::yes;
            out.link_verdict.note = "link dimension below 3";
        }
        if (out.boundary_vertex) {
            SimplicialComplex blink =
                report.boundary_subcomplex.link(report.boundary_subcomplex.simplex_from_tokens(
                    {out.vertex}));
            if (blink.dimension() >= 3) {
                out.boundary_link_verdict =
                    simply_connected_verdict(edge_path_presentation(blink), budgets);
            }
        }
    });

    for (auto& out : verdicts) {
        bool has_no = out.link_verdict.value == SCVerdictResult::Value::no ||
                      (out.boundary_link_verdict &&
                       out.boundary_link_verdict->value == SCVerdictResult::Value::no);
        bool has_unknown = out.link_verdict.value == SCVerdictResult::Value::unknown ||
                           (out.boundary_link_verdict &&
                            out.boundary_link_verdict->value == SCVerdictResult::Value::unknown);
        if (has_no)
            report.singular_vertices.push_back(std::move(out));
        else if (has_unknown)
            report.unknown_vertices.push_back(std::move(out));
        else
            report.certified_vertices.push_back(std::move(out));
    }
}

}  // namespace homcert
