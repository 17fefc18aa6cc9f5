// homcert: certify PL homology manifolds and compute their
// triangulation-theoretic invariants with exact integer arithmetic.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "homcert/css.hpp"
#include "homcert/generators.hpp"
#include "homcert/json_io.hpp"

using namespace homcert;

namespace {

struct CommonFlags {
    std::string format = "json";
    int jobs = 1;
    int tietze_budget = 5000;
    int quotient_bound = 120;
    unsigned seed = 0;
    std::string theta_path;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_theta) {
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--jobs", f.jobs, "Parallelism degree")->check(CLI::PositiveNumber);
    cmd->add_option("--tietze-budget", f.tietze_budget, "Tietze move budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--quotient-bound", f.quotient_bound, "Quotient group order bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Seed recorded in reports (searches are deterministic)");
    if (with_theta) cmd->add_option("--theta", f.theta_path, "Theta model JSON path");
}

Budgets budgets_of(const CommonFlags& f) {
    Budgets b;
    b.tietze_moves = f.tietze_budget;
    b.quotient_order_bound = f.quotient_bound;
    b.seed = f.seed;
    b.jobs = f.jobs;
    return b;
}

ThetaModel load_model(const CommonFlags& f) {
    if (f.theta_path.empty()) return default_theta_model();
    std::ifstream in(f.theta_path);
    require(in.good(), errc::parse_error, "cannot open theta model '" + f.theta_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ThetaModel::from_json_text(text);
}

CoefficientSystem parse_coeff(const std::string& spec) {
    if (spec == "z") return CoefficientSystem::integers();
    if (spec == "z2") return CoefficientSystem::integers_mod(2);
    if (spec.rfind("zk:", 0) == 0) {
        Int k(spec.substr(3));
        return CoefficientSystem::integers_mod(k);
    }
    if (spec.rfind("model:", 0) == 0) {
        std::ifstream in(spec.substr(6));
        require(in.good(), errc::parse_error, "cannot open model '" + spec.substr(6) + "'");
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return ThetaModel::from_json_text(text).coefficient_system(false);
    }
    fail(errc::bad_argument, "coefficient spec '" + spec + "' (expected z|z2|zk:<k>|model:<path>)");
}

Json run_header(const std::string& command, const std::string& input, const CommonFlags& f) {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["seed"] = f.seed;
    j["jobs"] = f.jobs;
    return j;
}

void emit(const Json& j, const CommonFlags& f, const std::string& text_summary) {
    if (f.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text_summary;
}

int cmd_gen(const std::vector<std::string>& args, const std::string& out_path) {
    require(!args.empty(), errc::bad_argument, "gen needs a generator name");
    const std::string& name = args[0];
    SimplicialComplex K;
    if (name == "cone") {
        require(args.size() == 2, errc::bad_argument, "gen cone <file>");
        K = SimplicialComplex::read_facet_file(args[1]).cone();
    } else if (name == "susp") {
        require(args.size() >= 2 && args.size() <= 3, errc::bad_argument, "gen susp <file> [k]");
        int k = args.size() == 3 ? std::stoi(args[2]) : 1;
        require(k >= 1, errc::bad_argument, "suspension count must be positive");
        K = SimplicialComplex::read_facet_file(args[1]).suspension_iterated(k);
    } else if (name == "join") {
        require(args.size() == 3, errc::bad_argument, "gen join <file1> <file2>");
        K = join(SimplicialComplex::read_facet_file(args[1]),
                 SimplicialComplex::read_facet_file(args[2]));
    } else {
        K = generate_named(name, std::vector<std::string>(args.begin() + 1, args.end()));
    }
    if (out_path.empty()) {
        K.write_facet_stream(std::cout);
    } else {
        std::ofstream out(out_path);
        require(out.good(), errc::parse_error, "cannot open output '" + out_path + "'");
        K.write_facet_stream(out);
    }
    return 0;
}

int cmd_check(const std::string& path, const CommonFlags& f) {
    SimplicialComplex K = SimplicialComplex::read_facet_file(path);
    Budgets budgets = budgets_of(f);
    ManifoldReport report = is_homology_manifold(K, f.jobs);
    if (report.is_homology_manifold) analyze_singular_vertices(K, report, budgets);

    Json j = run_header("check", path, f);
    Json rj = manifold_report_json(K, report);
    for (auto& [k, v] : rj.items()) j[k] = v;

    std::string text = std::string("is_homology_manifold: ") +
                       (report.is_homology_manifold ? "yes" : "no") + "\n" +
                       "closed: " + (report.closed ? "yes" : "no") + "\n";
    if (report.singular_analysis_done) {
        text += "singular vertices:";
        for (const auto& v : report.singular_vertices) text += " " + v.vertex;
        text += "\nunknown vertices:";
        for (const auto& v : report.unknown_vertices) text += " " + v.vertex;
        text += "\n";
    }
    emit(j, f, text);
    return report.is_homology_manifold ? 0 : 2;
}

int cmd_homology(const std::string& path, int dim, bool dim_given, const std::string& coeff,
                 const CommonFlags& f) {
    SimplicialComplex K = SimplicialComplex::read_facet_file(path);
    CoefficientSystem c = parse_coeff(coeff);
    Json j = run_header("homology", path, f);
    j["coefficients"] = c.describe();
    std::string text;
    Json groups = Json::array();
    int lo = dim_given ? dim : 0;
    int hi = dim_given ? dim : K.dimension();
    ChainComplexData data = simplicial_chain_complex(K, c);
    for (int d = lo; d <= hi; ++d) {
        GroupDescriptor g = homology_of(data, d);
        groups.push_back(Json{{"degree", d}, {"group", descriptor_json(g)}});
        text += "H_" + std::to_string(d) + " = " + g.to_string() + "\n";
    }
    j["homology"] = groups;
    emit(j, f, text);
    return 0;
}

int cmd_css(const std::string& path, const CommonFlags& f) {
    SimplicialComplex K = SimplicialComplex::read_facet_file(path);
    Budgets budgets = budgets_of(f);
    ManifoldReport cert = is_homology_manifold(K, f.jobs);
    require(cert.is_homology_manifold, errc::invalid_precondition,
            "css requires a homology manifold; run 'check' for the certificates");
    ThetaModel model = load_model(f);
    CssOptions options;
    options.budgets = budgets;
    CssReport report = compute_css_report(K, cert, model, options);

    Json j = run_header("css", path, f);
    Json rj = css_report_json(K, report);
    for (auto& [k, v] : rj.items()) j[k] = v;

    std::string text = "cochain support:";
    for (size_t i = 0; i < report.cochain.values.size(); ++i) {
        bool zero = true;
        for (const Int& v : report.cochain.values[i]) zero = zero && v == 0;
        if (!zero) text += " [" + report.cone_labels[i] + "]";
    }
    text += "\nis_cocycle: " + std::string(report.is_cocycle ? "yes" : "no");
    text += "\nclass zero: " + std::string(report.css_class.is_zero() ? "yes" : "no");
    text += "\nduality_match: " + std::string(report.duality ? "yes" : "no") + "\n";
    emit(j, f, text);
    return 0;
}

int cmd_obstruct(const std::string& path, const std::string& cocycle_path, const CommonFlags& f) {
    SimplicialComplex K = SimplicialComplex::read_facet_file(path);
    ThetaModel model = load_model(f);
    FreeComplex chains = simplicial_chains(K);
    CochainCalculator z2(chains, CoefficientSystem::integers_mod(2), "simplices");

    Cochain ksm;
    std::string source;
    if (!cocycle_path.empty()) {
        std::ifstream in(cocycle_path);
        require(in.good(), errc::parse_error, "cannot open cocycle '" + cocycle_path + "'");
        Json cj = Json::parse(in, nullptr, true, true);
        int d = cj.value("dimension", 4);
        require(d == 4, errc::bad_argument, "obstruction input must be a 4-cochain");
        ksm = cochain_from_json(cj, z2.labels_at(4));
        source = "file:" + cocycle_path;
    } else {
        GroupDescriptor h4 = z2.group_at(4);
        if (h4.is_trivial()) {
            ksm = z2.zero_at(4);
            source = "zero (H^4(K;Z/2) is trivial)";
        } else {
            ksm = z2.generator(4, 0);
            source = "canonical generator of H^4(K;Z/2)";
        }
    }

    ObstructionResult result = triangulation_obstruction(chains, "simplices", ksm, model);

    Json j = run_header("obstruct", path, f);
    j["cocycle_source"] = source;
    j["ksm"] = cochain_json(ksm, z2.labels_at(4));
    j["obstruction_group"] = descriptor_json(result.group);
    j["obstruction_class"] = class_json(result.cls);
    j["obstructed"] = !result.zero;
    j["lift_exists"] = result.lift_exists;
    j["note"] = result.note;
    std::string text = std::string("obstructed: ") + (!result.zero ? "yes" : "no") + " (group " +
                       result.group.to_string() + ")\n";
    emit(j, f, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "homcert: homology-manifold certification and triangulation invariants over exact "
        "integers"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand(
        "gen", "Generate a facet file (sphere d | simplex d | rp2 | torus | poincare | sigma2p | "
               "sigma3rp2 | cone <file> | susp <file> [k] | join <f1> <f2>)");
    std::vector<std::string> gen_args;
    std::string gen_out;
    gen->add_option("name", gen_args, "Generator name and arguments")->required()->expected(-1);
    gen->add_option("-o,--output", gen_out, "Output path (default: stdout)");

    CommonFlags check_flags;
    auto* check = app.add_subcommand("check", "Certify a homology manifold and find singular "
                                              "vertices");
    std::string check_path;
    check->add_option("file", check_path, "Facet file")->required();
    add_common(check, check_flags, false);

    CommonFlags hom_flags;
    auto* hom = app.add_subcommand("homology", "Homology groups with chosen coefficients");
    std::string hom_path, hom_coeff = "z";
    int hom_dim = 0;
    bool hom_dim_given = false;
    hom->add_option("file", hom_path, "Facet file")->required();
    auto* dopt = hom->add_option("-d,--degree", hom_dim, "Degree (default: all)");
    hom->add_option("--coeff", hom_coeff, "Coefficients: z|z2|zk:<k>|model:<path>");
    add_common(hom, hom_flags, false);

    CommonFlags css_flags;
    auto* css = app.add_subcommand("css", "Codimension-four class, Kirby-Siebenmann reduction, "
                                          "obstruction, and duality report");
    std::string css_path;
    css->add_option("file", css_path, "Facet file")->required();
    add_common(css, css_flags, true);

    CommonFlags obs_flags;
    auto* obs = app.add_subcommand("obstruct", "Bockstein obstruction of a Z/2 4-cocycle through "
                                               "the model's rok sequence");
    std::string obs_path, obs_cocycle;
    obs->add_option("file", obs_path, "Facet file")->required();
    obs->add_option("--cocycle", obs_cocycle,
                    "Cocycle JSON (default: canonical generator of H^4(K;Z/2))");
    add_common(obs, obs_flags, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(gen_args, gen_out);
        if (check->parsed()) return cmd_check(check_path, check_flags);
        if (hom->parsed()) {
            hom_dim_given = dopt->count() > 0;
            return cmd_homology(hom_path, hom_dim, hom_dim_given, hom_coeff, hom_flags);
        }
        if (css->parsed()) return cmd_css(css_path, css_flags);
        if (obs->parsed()) return cmd_obstruct(obs_path, obs_cocycle, obs_flags);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
