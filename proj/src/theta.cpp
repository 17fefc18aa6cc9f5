#include "homcert/theta.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "homcert/smith.hpp"
#include "homcert/tietze.hpp"

namespace homcert {

using Json = nlohmann::ordered_json;

std::string LinkProfile::key() const {
    std::ostringstream os;
    os << "h[";
    for (size_t i = 0; i < homology.size(); ++i) os << (i ? "," : "") << homology[i].to_string();
    os << "];sc=" << sc_value_name(sc) << ";q[";
    for (size_t i = 0; i < quotient_orders.size(); ++i)
        os << (i ? "," : "") << quotient_orders[i];
    os << "]";
    return os.str();
}

ThetaModel ThetaModel::free_on(const std::vector<std::pair<std::string, int>>& generators) {
    ThetaModel m;
    for (const auto& [name, rok] : generators) {
        require(m.index_of(name) < 0, errc::bad_argument, "duplicate generator '" + name + "'");
        m.names_.push_back(name);
        m.rok_.push_back(rok);
    }
    m.relations_ = IntegerMatrix(0, m.generator_count());
    m.validate();
    return m;
}

int ThetaModel::index_of(const std::string& name) const {
    for (int i = 0; i < generator_count(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

void ThetaModel::set_rok(const std::string& name, int value) {
    int i = index_of(name);
    require(i >= 0, errc::bad_argument, "unknown generator '" + name + "'");
    require(value == 0 || value == 1, errc::bad_argument, "rok values live in Z/2");
    rok_[i] = value;
    validate();
}

void ThetaModel::set_relations(IntegerMatrix relations) {
    require(relations.cols() == generator_count(), errc::bad_argument,
            "relation matrix column count must equal generator count");
    relations_ = std::move(relations);
    validate();
}

int ThetaModel::add_generator(const std::string& name) {
    require(index_of(name) < 0, errc::bad_argument, "duplicate generator '" + name + "'");
    names_.push_back(name);
    rok_.push_back(std::nullopt);
    IntegerMatrix rel(relations_.rows(), generator_count());
    for (int r = 0; r < relations_.rows(); ++r)
        for (const auto& [c, v] : relations_.row(r)) rel.set(r, c, v);
    relations_ = std::move(rel);
    return generator_count() - 1;
}

void ThetaModel::validate() const {
    for (int r = 0; r < relations_.rows(); ++r) {
        Int sum = 0;
        bool assigned = true;
        for (const auto& [c, v] : relations_.row(r)) {
            if (!rok_[c].has_value()) {
                assigned = false;
                break;
            }
            sum += v * *rok_[c];
        }
        require(!assigned || sum % 2 == 0, errc::bad_argument,
                "rok does not respect relation row " + std::to_string(r));
    }
}

CoefficientSystem ThetaModel::coefficient_system(bool twisted) const {
    CoefficientSystem base = CoefficientSystem::presented(generator_count(), relations_);
    return twisted ? base.with_orientation_twist() : base;
}

int ThetaModel::rok_of_value(const std::vector<Int>& value) const {
    require(static_cast<int>(value.size()) == generator_count(), errc::bad_argument,
            "value width does not match the model");
    Int sum = 0;
    for (int i = 0; i < generator_count(); ++i) {
        if (value[i] == 0) continue;
        require(rok_[i].has_value(), errc::missing_rok,
                "generator '" + names_[i] + "' contributes but has no rok value");
        sum += value[i] * *rok_[i];
    }
    Int m = sum % 2;
    if (m < 0) m += 2;
    return static_cast<int>(m);
}

bool ThetaModel::rok_surjective() const {
    for (int i = 0; i < generator_count(); ++i)
        if (rok_[i].has_value() && *rok_[i] % 2 == 1) return true;
    return false;
}

bool ThetaModel::rok_all_zero_or_unassigned() const {
    for (int i = 0; i < generator_count(); ++i)
        if (rok_[i].has_value() && *rok_[i] % 2 == 1) return false;
    return true;
}

CoefficientSequence ThetaModel::rok_kernel_sequence() const {
    require(rok_surjective(), errc::no_lift_possible, "rok is not surjective on this model");
    const int g = generator_count();
    for (int i = 0; i < g; ++i)
        require(rok_[i].has_value(), errc::missing_rok,
                "generator '" + names_[i] + "' has no rok value");

    // Basis of the sublattice { v : rok(v) even } of Z^g via the SNF of the
    // rok row: columns of V with the first scaled by 2.
    IntegerMatrix rok_row(1, g);
    for (int i = 0; i < g; ++i) rok_row.set(0, i, *rok_[i]);
    SNFResult snf = smith_normal_form(rok_row);
    require(snf.rank == 1 && snf.divisors[0] == 1, errc::internal, "rok row SNF unexpected");
    IntegerMatrix basis(g, g);  // columns are the sublattice basis
    for (int r = 0; r < g; ++r)
        for (const auto& [c, v] : snf.V.row(r)) basis.add_to(r, c, c == 0 ? 2 * v : v);

    // Relations of the kernel subgroup: the model relations in that basis.
    SNFResult basis_solver = smith_normal_form(basis);
    IntegerMatrix ker_rel(relations_.rows(), g);
    for (int r = 0; r < relations_.rows(); ++r) {
        std::vector<Int> row(g, 0);
        for (const auto& [c, v] : relations_.row(r)) row[c] = v;
        auto x = basis_solver.solve(row);
        require(x.has_value(), errc::internal, "model relation lies outside ker(rok)");
        for (int c = 0; c < g; ++c)
            if ((*x)[c] != 0) ker_rel.set(r, c, (*x)[c]);
    }

    CoefficientSequence seq;
    seq.sub = CoefficientSystem::presented(g, ker_rel);
    seq.mid = coefficient_system(false);
    seq.quot = CoefficientSystem::integers_mod(2);
    seq.incl = basis;
    seq.proj = rok_row;
    seq.verify_exact();
    return seq;
}

IntegerMatrix e8_intersection_matrix() {
    // The E8 graph as the tree with arms of lengths 1, 2, 4 at a center:
    // 2 on the diagonal, -1 across edges.
    IntegerMatrix m(8, 8);
    for (int i = 0; i < 8; ++i) m.set(i, i, 2);
    auto edge = [&m](int a, int b) {
        m.set(a, b, -1);
        m.set(b, a, -1);
    };
    edge(0, 1);
    edge(0, 2);
    edge(2, 3);
    edge(0, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    return m;
}

int poincare_rok_from_e8() {
    IntegerMatrix e8 = e8_intersection_matrix();
    require(e8.determinant() == 1, errc::internal, "E8 matrix is not unimodular");
    int sig = symmetric_signature(e8);
    require(sig % 8 == 0, errc::internal, "E8 signature is not divisible by 8");
    return std::abs(sig / 8) % 2;
}

ThetaModel default_theta_model() {
    return ThetaModel::free_on({{"Poincare", poincare_rok_from_e8()}});
}

ThetaModel ThetaModel::from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::parse_error, std::string("theta model JSON: ") + e.what());
    }
    require(j.contains("generators") && j["generators"].is_array(), errc::parse_error,
            "theta model JSON needs a 'generators' array");
    ThetaModel m;
    for (const auto& g : j["generators"]) {
        require(g.contains("name"), errc::parse_error, "generator without a name");
        std::string name = g["name"].get<std::string>();
        require(m.index_of(name) < 0, errc::parse_error, "duplicate generator '" + name + "'");
        m.names_.push_back(name);
        if (g.contains("rok") && !g["rok"].is_null()) {
            int v = g["rok"].get<int>();
            require(v == 0 || v == 1, errc::parse_error, "rok values live in Z/2");
            m.rok_.push_back(v);
        } else {
            m.rok_.push_back(std::nullopt);
        }
    }
    IntegerMatrix rel(0, m.generator_count());
    if (j.contains("relations") && !j["relations"].is_null()) {
        const auto& rows = j["relations"];
        require(rows.is_array(), errc::parse_error, "'relations' must be an array of rows");
        rel = IntegerMatrix(static_cast<int>(rows.size()), m.generator_count());
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            require(rows[r].is_array() &&
                        static_cast<int>(rows[r].size()) == m.generator_count(),
                    errc::parse_error, "relation rows must have one entry per generator");
            for (int c = 0; c < m.generator_count(); ++c)
                rel.set(r, c, Int(rows[r][c].get<long long>()));
        }
    }
    m.relations_ = std::move(rel);
    m.validate();
    return m;
}

std::string ThetaModel::to_json_text() const {
    Json j;
    j["generators"] = Json::array();
    for (int i = 0; i < generator_count(); ++i) {
        Json g;
        g["name"] = names_[i];
        if (rok_[i].has_value())
            g["rok"] = *rok_[i];
        else
            g["rok"] = nullptr;
        j["generators"].push_back(g);
    }
    j["relations"] = Json::array();
    for (int r = 0; r < relations_.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < generator_count(); ++c)
            row.push_back(static_cast<long long>(relations_.get(r, c)));
        j["relations"].push_back(row);
    }
    return j.dump(2);
}

LinkClassLabel link_class_of(const SimplicialComplex& K, const Simplex& sigma,
                             const Budgets& budgets) {
    SimplicialComplex link = K.link(sigma);
    ReducedHomology h = reduced_homology(link);
    bool s3_homology = !h.empty_complex && link.dimension() == 3 &&
                       static_cast<int>(h.groups.size()) == 4 && h.groups[0].is_trivial() &&
                       h.groups[1].is_trivial() && h.groups[2].is_trivial() &&
                       h.groups[3] == GroupDescriptor::free(1);
    require(s3_homology, errc::invalid_precondition,
            "link of '" + K.label_of(sigma) + "' does not have 3-sphere homology");

    LinkClassLabel out;
    out.profile.homology = h.groups;

    GroupPresentation p = edge_path_presentation(link);
    SCVerdictResult sc = simply_connected_verdict(p, budgets);
    out.profile.sc = sc.value;
    if (sc.value == SCVerdictResult::Value::yes) {
        out.name = "S3";
        out.recognized = true;
        return out;
    }

    out.profile.quotient_orders = quotient_order_spectrum(
        tietze_simplify(p, budgets.tietze_moves).simplified,
        shared_quotient_catalog(budgets.quotient_order_bound), budgets.quotient_node_budget);
    bool has60 = std::binary_search(out.profile.quotient_orders.begin(),
                                    out.profile.quotient_orders.end(), 60LL);
    bool has120 = std::binary_search(out.profile.quotient_orders.begin(),
                                     out.profile.quotient_orders.end(), 120LL);
    if (sc.value == SCVerdictResult::Value::no && has60 && has120) {
        out.name = "Poincare";
        out.recognized = true;
        return out;
    }
    out.name = "theta{" + out.profile.key() + "}";
    out.recognized = false;
    out.warning =
        "unrecognized link profile; profiles are invariants, not complete, so distinct classes "
        "may be conflated";
    return out;
}

}  // namespace homcert
