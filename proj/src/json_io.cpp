#include "homcert/json_io.hpp"

#include <map>

namespace homcert {

Json descriptor_json(const GroupDescriptor& g) {
    Json j;
    j["group"] = g.to_string();
    j["free_rank"] = g.free_rank;
    Json torsion = Json::array();
    for (const Int& t : g.torsion) torsion.push_back(t.str());
    j["torsion"] = torsion;
    return j;
}

Json class_json(const ClassHandle& h) {
    Json j;
    j["group"] = descriptor_json(h.group);
    j["zero"] = h.is_zero();
    Json coords = Json::array();
    for (const Int& c : h.torsion_coords) coords.push_back(c.str());
    for (const Int& c : h.free_coords) coords.push_back(c.str());
    j["coordinates"] = coords;
    return j;
}

Json cochain_json(const Cochain& c, const std::vector<std::string>& labels) {
    require(labels.size() == c.values.size(), errc::bad_argument,
            "cochain serialization: label count mismatch");
    Json j;
    j["dimension"] = c.dimension;
    j["basis"] = c.basis;
    j["coefficients"] = c.coeff_generators;
    Json values = Json::array();
    for (size_t i = 0; i < c.values.size(); ++i) {
        bool zero = true;
        for (const Int& v : c.values[i]) zero = zero && v == 0;
        if (zero) continue;
        Json entry = Json::array();
        entry.push_back(labels[i]);
        Json vec = Json::array();
        for (const Int& v : c.values[i]) vec.push_back(v.str());
        entry.push_back(vec);
        values.push_back(entry);
    }
    j["values"] = values;
    return j;
}

Cochain cochain_from_json(const Json& j, const std::vector<std::string>& labels) {
    require(j.contains("dimension") && j.contains("values"), errc::parse_error,
            "cochain JSON needs 'dimension' and 'values'");
    Cochain c;
    c.dimension = j["dimension"].get<int>();
    c.basis = j.value("basis", std::string("simplices"));
    c.coeff_generators = j.value("coefficients", 1);
    c.values.assign(labels.size(), std::vector<Int>(c.coeff_generators, 0));
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
    for (const auto& entry : j["values"]) {
        require(entry.is_array() && entry.size() == 2, errc::parse_error,
                "cochain values must be [label, coefficient-vector] pairs");
        std::string label = entry[0].get<std::string>();
        auto it = index.find(label);
        require(it != index.end(), errc::parse_error,
                "cochain value on unknown basis element '" + label + "'");
        const auto& vec = entry[1];
        require(vec.is_array() && static_cast<int>(vec.size()) == c.coeff_generators,
                errc::parse_error, "coefficient vector has the wrong width");
        for (int a = 0; a < c.coeff_generators; ++a) {
            if (vec[a].is_string())
                c.values[it->second][a] = Int(vec[a].get<std::string>());
            else
                c.values[it->second][a] = Int(vec[a].get<long long>());
        }
    }
    return c;
}

Json sc_verdict_json(const SCVerdictResult& v) {
    Json j;
    j["value"] = sc_value_name(v.value);
    if (v.value == SCVerdictResult::Value::yes) {
        j["evidence"] = Json{{"kind", "tietze_trivialization"},
                             {"moves", v.tietze_transcript},
                             {"budget", v.tietze_budget}};
    } else if (v.value == SCVerdictResult::Value::no && v.witness) {
        Json images = Json::array();
        for (const auto& img : v.witness->generator_images) images.push_back(img);
        j["evidence"] = Json{{"kind", "finite_quotient"},
                             {"group", v.witness->group_name},
                             {"order", v.witness->group_order},
                             {"degree", v.witness->degree},
                             {"generator_images", images}};
    } else {
        j["evidence"] = Json{{"kind", "none"}, {"note", v.note}};
    }
    return j;
}

Json manifold_report_json(const SimplicialComplex& K, const ManifoldReport& report) {
    Json j;
    j["dimension"] = report.dimension;
    j["is_homology_manifold"] = report.is_homology_manifold;
    j["closed"] = report.closed;
    j["orientable"] = report.orientable;

    Json counts;
    int sphere = 0, disk = 0, bad = 0;
    for (const auto& c : report.certificates) {
        if (c.verdict == LinkVerdict::sphere_like) ++sphere;
        if (c.verdict == LinkVerdict::disk_like) ++disk;
        if (c.verdict == LinkVerdict::bad) ++bad;
    }
    counts["sphere"] = sphere;
    counts["disk"] = disk;
    counts["bad"] = bad;
    j["certificate_counts"] = counts;

    Json certs = Json::array();
    for (const auto& c : report.certificates) {
        Json cj;
        cj["simplex"] = K.label_of(c.simplex);
        cj["expected_sphere_dim"] = c.expected_sphere_dim;
        cj["verdict"] = link_verdict_name(c.verdict);
        Json h = Json::array();
        if (c.link_homology.empty_complex) {
            cj["link"] = "empty";
        } else {
            for (const auto& g : c.link_homology.groups) h.push_back(g.to_string());
        }
        cj["reduced_homology"] = h;
        certs.push_back(cj);
    }
    j["certificates"] = certs;

    if (!report.boundary_subcomplex.is_empty()) {
        Json b;
        b["dimension"] = report.boundary_subcomplex.dimension();
        Json facets = Json::array();
        for (const auto& f : report.boundary_subcomplex.facet_list())
            facets.push_back(report.boundary_subcomplex.label_of(f));
        b["facets"] = facets;
        if (report.boundary_report) {
            b["is_homology_manifold"] = report.boundary_report->is_homology_manifold;
            b["closed"] = report.boundary_report->closed;
        }
        j["boundary"] = b;
    } else {
        j["boundary"] = nullptr;
    }

    if (report.singular_analysis_done) {
        auto vertex_json = [](const VertexVerdict& v) {
            Json vj;
            vj["vertex"] = v.vertex;
            vj["link_dimension"] = v.link_dimension;
            vj["boundary_vertex"] = v.boundary_vertex;
            vj["link_verdict"] = sc_verdict_json(v.link_verdict);
            if (v.boundary_link_verdict)
                vj["boundary_link_verdict"] = sc_verdict_json(*v.boundary_link_verdict);
            return vj;
        };
        Json singular = Json::array(), unknown = Json::array();
        for (const auto& v : report.singular_vertices) singular.push_back(vertex_json(v));
        for (const auto& v : report.unknown_vertices) unknown.push_back(vertex_json(v));
        j["singular_vertices"] = singular;
        j["unknown_vertices"] = unknown;
        j["metadata"] = Json{{"note", report.metadata_note}};
    }
    return j;
}

Json css_report_json(const SimplicialComplex& K, const CssReport& report) {
    Json j;
    j["dimension"] = report.dimension;
    j["orientable"] = report.orientable;
    j["model"] = Json::parse(report.model.to_json_text());

    Json links = Json::array();
    for (size_t i = 0; i < report.cone_labels.size(); ++i) {
        if (report.link_label_names[i] == "S3") continue;
        links.push_back(Json{{"cone_of", report.cone_labels[i]},
                             {"link_class", report.link_label_names[i]}});
    }
    j["nontrivial_links"] = links;

    j["cochain"] = cochain_json(report.cochain, report.cone_labels);
    j["is_cocycle"] = report.is_cocycle;
    j["class"] = class_json(report.css_class);
    if (report.class_witness)
        j["class_witness_support"] =
            cochain_json(*report.class_witness, report.witness_labels)["values"];
    j["h4_descriptors_match"] = report.h4_descriptors_match;

    j["ksm"] = cochain_json(report.ksm, report.cone_labels);
    j["ksm_is_cocycle"] = report.ksm_is_cocycle;

    Json obs;
    obs["defined"] = report.obstruction_defined;
    obs["group"] = descriptor_json(report.obstruction_group);
    obs["class"] = class_json(report.obstruction);
    obs["lift_consistent"] = report.obstruction_lift_consistent;
    obs["note"] = report.obstruction_note;
    j["obstruction"] = obs;

    j["homology_chain"] = cochain_json(report.homology_chain, report.cone_labels);
    j["homology_class"] = class_json(report.homology_class);
    j["chain_is_cycle"] = report.chain_is_cycle;

    j["duality_match"] = report.duality;
    j["incidence_permutation"] = report.incidence_permutation;
    j["warnings"] = report.warnings;
    return j;
}

}  // namespace homcert
