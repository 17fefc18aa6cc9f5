#include "homcert/css.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "homcert/parallel.hpp"
#include "homcert/permutation.hpp"
#include "homcert/smith.hpp"

namespace homcert {

namespace {

// Fundamental cycle of a complex with top homology Z: the generator of the
// kernel of the top boundary, normalized so its first nonzero coefficient is
// positive. Deterministic; the orientation class of every link label is
// pinned to this cycle.
std::vector<Int> canonical_fundamental_cycle(const SimplicialComplex& L) {
    FreeComplex c = simplicial_chains(L);
    SNFResult snf = smith_normal_form(c.plain(c.top));
    auto basis = snf.kernel_basis();
    require(basis.size() == 1, errc::internal,
            "link does not have one-dimensional top homology");
    std::vector<Int> z = basis[0];
    for (const Int& v : z) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : z) w = -w;
        break;
    }
    return z;
}

int proportionality_sign(const std::vector<Int>& a, const std::vector<Int>& b) {
    require(a.size() == b.size(), errc::internal, "cycle comparison: size mismatch");
    int sign = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 && b[i] == 0) continue;
        require(a[i] != 0 && b[i] != 0, errc::internal, "cycles have different support");
        int s = (a[i] > 0) == (b[i] > 0) ? 1 : -1;
        require(a[i] == s * b[i], errc::internal, "cycles are not proportional by a sign");
        require(sign == 0 || sign == s, errc::internal, "cycle comparison sign is inconsistent");
        sign = s;
    }
    require(sign != 0, errc::internal, "cycle comparison of zero cycles");
    return sign;
}

// Join rule: the orientation induced on link(domain, s) by the global facet
// signs, as a top-degree cycle on L = domain.link(s). The coefficient on a
// link facet G with s u G = F is sign(F) times the interleave sign of
// (s, G) into sorted F.
std::vector<Int> induced_link_cycle(const SimplicialComplex& domain,
                                    const std::vector<int>& facet_signs, const Simplex& s,
                                    const SimplicialComplex& L) {
    std::vector<Int> out(L.face_count(L.dimension()), 0);
    const auto& facets = domain.facet_list();
    for (size_t f = 0; f < facets.size(); ++f) {
        if (!facets[f].contains(s)) continue;
        Simplex g_domain = facets[f].minus(s);
        Simplex g_link = L.simplex_from_tokens(domain.tokens_of(g_domain));
        int sign = interleave_sign(s.v, g_domain.v);
        out[L.face_index(g_link)] += facet_signs[f] * sign;
    }
    // The induced chain must be a cycle; this is exactly coherence of the
    // facet signs around s.
    FreeComplex c = simplicial_chains(L);
    if (c.top >= 1) {
        std::vector<Int> dz = c.plain(c.top).apply(out);
        for (const Int& v : dz)
            require(v == 0, errc::internal, "induced link orientation is not a cycle");
    }
    return out;
}

using Flag = std::vector<Simplex>;
using FlagChain = std::map<Flag, Int>;

// Barycentric expansion of a top-degree chain: each facet with coefficient c
// contributes c * sgn(ordering) on every maximal flag of its faces.
FlagChain sd_expand_top_cycle(const SimplicialComplex& L, const std::vector<Int>& cycle) {
    FlagChain out;
    const auto& tops = L.faces(L.dimension());
    for (size_t i = 0; i < tops.size(); ++i) {
        if (cycle[i] == 0) continue;
        std::vector<VertexId> order = tops[i].v;
        std::sort(order.begin(), order.end());
        do {
            Flag flag;
            Simplex cur;
            for (VertexId v : order) {
                cur = cur.united(Simplex{{v}});
                flag.push_back(cur);
            }
            Int coeff = cycle[i] * sort_permutation_sign(order);
            if (coeff != 0) {
                auto [it, fresh] = out.emplace(std::move(flag), coeff);
                if (!fresh) {
                    it->second += coeff;
                    if (it->second == 0) out.erase(it);
                }
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

// Dual-cone route: slice the subdivided fundamental cycle along s, take its
// boundary (supported on the link part of the dual cone), transport to the
// barycentric subdivision of L, and compare with the expansion of the
// reference cycle.
int route_a_sign(const SimplicialComplex& domain, const std::vector<int>& facet_signs,
                 const Simplex& s, const SimplicialComplex& L,
                 const std::vector<Int>& reference,
                 const std::function<std::string(const std::string&)>& token_to_link) {
    // Slice of the subdivided fundamental cycle: flags from s upward inside
    // each facet containing s, coefficients from the facet sign and the
    // vertex-addition order (with the vertices of s inserted first, in
    // sorted order).
    FlagChain slice;
    const auto& facets = domain.facet_list();
    for (size_t f = 0; f < facets.size(); ++f) {
        if (!facets[f].contains(s)) continue;
        Simplex rest = facets[f].minus(s);
        std::vector<VertexId> order = rest.v;
        do {
            Flag flag{s};
            Simplex cur = s;
            std::vector<VertexId> concat = s.v;
            for (VertexId v : order) {
                cur = cur.united(Simplex{{v}});
                flag.push_back(cur);
                concat.push_back(v);
            }
            Int coeff = Int(facet_signs[f]) * sort_permutation_sign(concat);
            auto [it, fresh] = slice.emplace(std::move(flag), coeff);
            if (!fresh) {
                it->second += coeff;
                if (it->second == 0) slice.erase(it);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }

    // Boundary of the slice; the faces still containing the barycenter of s
    // must cancel (this is the relative-cycle property of the dual cone).
    FlagChain boundary;
    for (const auto& [flag, c] : slice) {
        for (size_t p = 0; p < flag.size(); ++p) {
            Flag face;
            face.reserve(flag.size() - 1);
            for (size_t q = 0; q < flag.size(); ++q)
                if (q != p) face.push_back(flag[q]);
            Int coeff = (p % 2 == 0) ? c : -c;
            auto [it, fresh] = boundary.emplace(std::move(face), coeff);
            if (!fresh) {
                it->second += coeff;
                if (it->second == 0) boundary.erase(it);
            }
        }
    }
    FlagChain link_part;
    for (const auto& [flag, c] : boundary) {
        if (flag.front() == s) {
            fail(errc::internal, "dual-cone slice boundary retains the apex");
        }
        // Transport: strip s from every carrier and reindex into L.
        Flag moved;
        moved.reserve(flag.size());
        for (const Simplex& carrier : flag) {
            Simplex diff = carrier.minus(s);
            Simplex in_link;
            for (VertexId v : diff.v)
                in_link.v.push_back(L.vertex_id(token_to_link(domain.token(v))));
            std::sort(in_link.v.begin(), in_link.v.end());
            moved.push_back(std::move(in_link));
        }
        link_part[std::move(moved)] = c;
    }

    FlagChain expected = sd_expand_top_cycle(L, reference);
    require(link_part.size() == expected.size(), errc::internal,
            "dual-cone boundary and subdivided reference have different support");
    int sign = 0;
    for (const auto& [flag, c] : link_part) {
        auto it = expected.find(flag);
        require(it != expected.end(), errc::internal,
                "dual-cone boundary contains an unexpected flag");
        int s_here = (c > 0) == (it->second > 0) ? 1 : -1;
        require(c == s_here * it->second, errc::internal,
                "dual-cone boundary is not a signed copy of the reference");
        require(sign == 0 || sign == s_here, errc::internal,
                "dual-cone boundary sign is inconsistent");
        sign = s_here;
    }
    require(sign != 0, errc::internal, "dual-cone boundary is empty");
    return sign;
}

std::string strip_sheet_suffix(const std::string& cover_token) {
    return cover_token.substr(0, cover_token.size() - 2);
}

// Project a top-degree chain on a cover link down to the base link; the
// projection is a simplicial isomorphism, signs come from re-sorting.
std::vector<Int> project_link_chain(const SimplicialComplex& cover_link,
                                    const SimplicialComplex& base_link,
                                    const std::vector<Int>& chain) {
    require(cover_link.dimension() == base_link.dimension() &&
                cover_link.vertex_count() == base_link.vertex_count(),
            errc::internal, "cover link does not project isomorphically");
    const int top = cover_link.dimension();
    std::vector<Int> out(base_link.face_count(top), 0);
    const auto& faces = cover_link.faces(top);
    for (size_t i = 0; i < faces.size(); ++i) {
        if (chain[i] == 0) continue;
        std::vector<VertexId> mapped;
        for (VertexId v : faces[i].v)
            mapped.push_back(base_link.vertex_id(strip_sheet_suffix(cover_link.token(v))));
        int sign = sort_permutation_sign(mapped);
        std::sort(mapped.begin(), mapped.end());
        out[base_link.face_index(Simplex{mapped})] += sign * chain[i];
    }
    return out;
}

struct ConeData {
    std::vector<Simplex> cones;  // the (n-4)-simplices
    std::vector<LinkClassLabel> labels;
    std::vector<int> gen_index;          // index into model, -1 for "S3"
    std::vector<int> sign_cochain;       // route A sign (0 for S3 links)
    std::vector<int> sign_chain;         // route B sign at the orbit representative
    std::vector<int> rep_sheet0_factor;  // +1 if the representative lies in sheet 0
};

ConeData compute_cone_data(const SimplicialComplex& K, const ManifoldReport& cert,
                           ThetaModel& model, const CssOrientations& ori,
                           const CssOptions& opt) {
    require(cert.is_homology_manifold && cert.closed, errc::invalid_precondition,
            "css data requires a certified closed homology manifold");
    const int n = K.dimension();
    ConeData out;
    if (n < 4) return out;
    out.cones = K.faces(n - 4);
    const int m = static_cast<int>(out.cones.size());
    out.labels.resize(m);
    out.gen_index.assign(m, -1);
    out.sign_cochain.assign(m, 0);
    out.sign_chain.assign(m, 0);
    out.rep_sheet0_factor.assign(m, 1);

    // Classification first (parallel), model extension after (sequential).
    parallel_for(m, opt.budgets.jobs, [&](int i) {
        out.labels[i] = link_class_of(K, out.cones[i], opt.budgets);
    });
    for (int i = 0; i < m; ++i) {
        if (out.labels[i].name == "S3") continue;
        int idx = model.index_of(out.labels[i].name);
        if (idx < 0) {
            require(model.auto_extend, errc::bad_argument,
                    "theta model lacks class '" + out.labels[i].name +
                        "' and auto-extension is disabled");
            idx = model.add_generator(out.labels[i].name);
        }
        out.gen_index[i] = idx;
    }

    // Orientation signs for the contributing cones.
    parallel_for(m, opt.budgets.jobs, [&](int i) {
        if (out.gen_index[i] < 0) return;
        const Simplex& s = out.cones[i];
        SimplicialComplex base_link = K.link(s);
        std::vector<Int> reference = canonical_fundamental_cycle(base_link);

        // Chain route: induced orientation at the orbit representative on
        // the cover, projected down.
        Simplex rep = ori.cover.lifts_of(s).first;
        SimplicialComplex cover_link = ori.cover.total.link(rep);
        std::vector<Int> lambda =
            induced_link_cycle(ori.cover.total, ori.cover_orientation, rep, cover_link);
        out.sign_chain[i] =
            proportionality_sign(project_link_chain(cover_link, base_link, lambda), reference);
        out.rep_sheet0_factor[i] = ori.simplex_in_sheet0(rep) ? 1 : -1;

        // Cochain route through the dual cone.
        if (ori.orientable) {
            out.sign_cochain[i] =
                route_a_sign(K, ori.base_orientation, s, base_link, reference,
                             [](const std::string& t) { return t; });
        } else {
            std::vector<Int> cover_reference = canonical_fundamental_cycle(cover_link);
            int proj_sign = proportionality_sign(
                project_link_chain(cover_link, base_link, cover_reference), reference);
            out.sign_cochain[i] =
                proj_sign * route_a_sign(ori.cover.total, ori.cover_orientation, rep, cover_link,
                                         cover_reference,
                                         [](const std::string& t) { return strip_sheet_suffix(t); });
        }
    });
    return out;
}

Cochain cochain_from_cone_data(const SimplicialComplex& K, const ThetaModel& model,
                               const ConeData& data, bool chain_side) {
    const int n = K.dimension();
    Cochain c = Cochain::zero(chain_side ? n - 4 : 4,
                              chain_side ? "simplices" : "dual_cones", model.generator_count(),
                              static_cast<int>(data.cones.size()));
    for (size_t i = 0; i < data.cones.size(); ++i) {
        if (data.gen_index[i] < 0) continue;
        int sign = chain_side ? data.sign_chain[i] : data.sign_cochain[i];
        c.values[i][data.gen_index[i]] = sign;
    }
    return c;
}

}  // namespace

bool CssOrientations::simplex_in_sheet0(const Simplex& cover_simplex) const {
    require(!cover_simplex.empty(), errc::bad_argument, "sheet of the empty simplex");
    return vertex_component.at(cover_simplex.v[0]) == 0;
}

CssOrientations css_orientations(const SimplicialComplex& K, bool flip) {
    CssOrientations ori;
    auto orient = orientability_and_double_cover(K);
    ori.cover = std::move(orient.cover);
    ori.orientable = orient.orientable;
    ori.base_orientation = ori.cover.base_orientation;
    ori.cover_orientation = ori.cover.total_orientation;
    if (flip) {
        for (int& s : ori.base_orientation) s = -s;
        for (int& s : ori.cover_orientation) s = -s;
    }

    // Component ids on the cover; component 0 is the one whose facet
    // orientations push forward to the base orientation (sheet 0).
    const SimplicialComplex& T = ori.cover.total;
    std::vector<int> parent(T.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : T.faces(1)) {
        int a = find(e.v[0]), b = find(e.v[1]);
        if (a != b) parent[a] = b;
    }
    std::map<int, int> comp_ids;
    std::vector<int> comp_of_root;
    ori.vertex_component.resize(T.vertex_count());
    if (ori.orientable) {
        // Identify sheet 0 from the lifts of the least base facet.
        const Simplex& f0 = ori.cover.base.facet_list().front();
        auto [la, lb] = ori.cover.lifts_of(f0);
        int base_sign = ori.cover.base_orientation.empty() ? 1 : ori.cover.base_orientation[0];
        auto push_sign = [&](const Simplex& lift) {
            const auto& tf = ori.cover.total.facet_list();
            auto it = std::lower_bound(tf.begin(), tf.end(), lift);
            int idx = static_cast<int>(it - tf.begin());
            std::vector<VertexId> proj;
            for (VertexId v : lift.v) proj.push_back(ori.cover.projection[v]);
            return ori.cover.total_orientation[idx] * sort_permutation_sign(proj);
        };
        const Simplex& sheet0_facet = push_sign(la) == base_sign ? la : lb;
        require(push_sign(sheet0_facet) == base_sign, errc::internal,
                "no lift of the least facet matches the base orientation");
        int root0 = find(sheet0_facet.v[0]);
        for (int v = 0; v < T.vertex_count(); ++v)
            ori.vertex_component[v] = find(v) == root0 ? 0 : 1;
        ori.component_count = 2;
    } else {
        for (int v = 0; v < T.vertex_count(); ++v) ori.vertex_component[v] = 0;
        ori.component_count = 1;
    }
    return ori;
}

Cochain css_cochain(const SimplicialComplex& K, const ManifoldReport& cert, ThetaModel& model,
                    const CssOptions& options) {
    CssOrientations ori = css_orientations(K, options.flip_orientation);
    ConeData data = compute_cone_data(K, cert, model, ori, options);
    return cochain_from_cone_data(K, model, data, false);
}

bool verify_cocycle(const ConicalChainComplex& conical, const ThetaModel& model,
                    const Cochain& cochain) {
    CochainCalculator calc(conical.complex, model.coefficient_system(false), "dual_cones");
    return calc.is_closed(cochain);
}

ClassHandle css_class(const ConicalChainComplex& conical, const ThetaModel& model,
                      const Cochain& cochain) {
    CochainCalculator calc(conical.complex, model.coefficient_system(false), "dual_cones");
    return calc.class_of(cochain);
}

Cochain rokhlin_reduction(const Cochain& cochain, const ThetaModel& model) {
    require(cochain.coeff_generators == model.generator_count(), errc::bad_argument,
            "cochain width does not match the model");
    Cochain out = Cochain::zero(cochain.dimension, cochain.basis, 1,
                                static_cast<int>(cochain.values.size()));
    for (size_t i = 0; i < cochain.values.size(); ++i)
        out.values[i][0] = model.rok_of_value(cochain.values[i]);
    return out;
}

ObstructionResult triangulation_obstruction(const FreeComplex& context,
                                            const std::string& basis_name, const Cochain& ksm,
                                            const ThetaModel& model) {
    ObstructionResult out;
    require(ksm.coeff_generators == 1, errc::bad_argument, "ksm must be a Z/2 cochain");
    CochainCalculator z2(context, CoefficientSystem::integers_mod(2), basis_name);
    require(z2.is_closed(ksm), errc::not_a_cocycle, "ksm input is not a cocycle");

    if (!model.rok_surjective()) {
        bool zero = true;
        for (const auto& v : ksm.values) zero = zero && v[0] % 2 == 0;
        if (zero) {
            out.defined = false;
            out.zero = true;
            out.lift_exists = true;
            out.note = "rok vanishes on the model and ksm is zero; nothing obstructs";
            return out;
        }
        fail(errc::no_lift_possible,
             "rok is not surjective on the model but ksm is nonzero; no lift can exist");
    }

    CoefficientSequence seq = model.rok_kernel_sequence();
    BocksteinResult beta = bockstein(context, basis_name, ksm, seq);
    out.defined = true;
    out.group = beta.cls.group;
    out.cls = beta.cls;
    out.zero = beta.cls.is_zero();
    out.lift_exists = lifts_to_middle(context, ksm, seq);
    out.note = out.zero == out.lift_exists
                   ? "exactness verified: beta(ksm) = 0 iff ksm lifts"
                   : "exactness check FAILED";
    require(out.zero == out.lift_exists, errc::internal,
            "bockstein exactness check failed: beta(ksm)=0 and liftability disagree");
    return out;
}

TwistedClassResult css_homology_class(const SimplicialComplex& K, const ManifoldReport& cert,
                                      ThetaModel& model, const CssOptions& options) {
    CssOrientations ori = css_orientations(K, options.flip_orientation);
    ConeData data = compute_cone_data(K, cert, model, ori, options);
    TwistedClassResult out;
    out.chain = cochain_from_cone_data(K, model, data, true);
    CochainCalculator calc(cover_chains(ori.cover), model.coefficient_system(true), "simplices",
                           CochainCalculator::Mode::chain);
    out.is_cycle = calc.is_closed(out.chain);
    require(out.is_cycle, errc::internal, "css homology chain is not a twisted cycle");
    out.cls = calc.class_of(out.chain);
    return out;
}

bool duality_match(const SimplicialComplex& K, const CssReport& report) {
    (void)K;
    if (report.cochain.values.size() != report.homology_chain_sheet0.values.size()) return false;
    for (size_t i = 0; i < report.cochain.values.size(); ++i)
        if (report.cochain.values[i] != report.homology_chain_sheet0.values[i]) return false;
    return report.incidence_permutation;
}

CssReport compute_css_report(const SimplicialComplex& K, const ManifoldReport& cert,
                             const ThetaModel& model_in, const CssOptions& options) {
    CssReport rep;
    rep.dimension = K.dimension();
    rep.model = model_in;
    const int n = K.dimension();

    CssOrientations ori = css_orientations(K, options.flip_orientation);
    rep.orientable = ori.orientable;
    ConeData data = compute_cone_data(K, cert, rep.model, ori, options);
    for (const auto& s : data.cones) rep.cone_labels.push_back(K.label_of(s));
    for (size_t i = 0; i < data.labels.size(); ++i) {
        rep.link_label_names.push_back(data.labels[i].name);
        if (!data.labels[i].warning.empty())
            rep.warnings.push_back("link of '" + K.label_of(data.cones[i]) +
                                   "': " + data.labels[i].warning);
    }

    rep.cochain = cochain_from_cone_data(K, rep.model, data, false);
    rep.homology_chain = cochain_from_cone_data(K, rep.model, data, true);

    ConicalChainComplex conical =
        conical_chain_complex(K, cert, options.verify_conical_homology);

    CoefficientSystem model_sys = rep.model.coefficient_system(false);
    CochainCalculator cone_calc(conical.complex, model_sys, "dual_cones");
    rep.witness_labels = cone_calc.labels_at(3);
    rep.is_cocycle = cone_calc.is_closed(rep.cochain);
    if (rep.is_cocycle) {
        rep.css_class = cone_calc.class_of(rep.cochain);
        if (rep.css_class.is_zero()) rep.class_witness = cone_calc.witness(rep.cochain);
    }

    // Duality of the ambient groups: the dual-cone model of H^4 against the
    // simplicial H^4 (a Poincare duality check when orientable).
    if (ori.orientable) {
        CochainCalculator simp_calc(simplicial_chains(K), model_sys, "simplices");
        rep.h4_descriptors_match = cone_calc.group_at(4) == simp_calc.group_at(4);
    } else {
        rep.h4_descriptors_match = true;  // not comparable without the twist
    }

    rep.ksm = rokhlin_reduction(rep.cochain, rep.model);
    {
        CochainCalculator z2(conical.complex, CoefficientSystem::integers_mod(2), "dual_cones");
        rep.ksm_is_cocycle = z2.is_closed(rep.ksm);
    }

    try {
        ObstructionResult obs =
            triangulation_obstruction(conical.complex, "dual_cones", rep.ksm, rep.model);
        rep.obstruction_group = obs.group;
        rep.obstruction = obs.cls;
        rep.obstruction_defined = obs.defined;
        rep.obstruction_lift_consistent = obs.zero == obs.lift_exists;
        rep.obstruction_note = obs.note;
    } catch (const Error& e) {
        if (e.code() != errc::no_lift_possible && e.code() != errc::missing_rok) throw;
        rep.obstruction_defined = false;
        rep.obstruction_note = e.what();
    }

    {
        CochainCalculator tw(cover_chains(ori.cover), rep.model.coefficient_system(true),
                             "simplices", CochainCalculator::Mode::chain);
        rep.chain_is_cycle = tw.is_closed(rep.homology_chain);
        if (rep.chain_is_cycle) rep.homology_class = tw.class_of(rep.homology_chain);
    }

    rep.incidence_permutation = dual_cone_incidence_is_permutation(K);

    // Chain transported through the sheet-0 identification (the duality
    // side: +cone(s) corresponds to the sheet-0 lift of s).
    rep.homology_chain_sheet0 = rep.homology_chain;
    if (ori.orientable) {
        for (size_t i = 0; i < data.cones.size(); ++i) {
            if (data.rep_sheet0_factor[i] == 1) continue;
            for (Int& v : rep.homology_chain_sheet0.values[i]) v = -v;
        }
    }
    rep.duality = duality_match(K, rep);
    return rep;
}

}  // namespace homcert
