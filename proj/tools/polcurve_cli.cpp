// Command-line front end: loads curve/multidegree documents, runs the
// classifiers and enumerations, and emits text, JSON, or DOT reports.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polcurve/io.hpp"

namespace {

constexpr const char* kVersion = "polcurve 0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

using polcurve::io::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw polcurve::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct Options {
    std::string curve_path;
    std::string deg_path;
    std::string deg2_path;
    long long g = -1;
    long long d = -1;
    std::string level = "balanced";
    std::string kind = "quasi_stable";
    std::string format = "text";
    int max_vertices = polcurve::kDefaultVertexCap;
    long long power = 3;
    unsigned seed = 0;
};

polcurve::BalanceLevel parse_level(const std::string& level) {
    if (level == "balanced") return polcurve::BalanceLevel::Balanced;
    if (level == "properly") return polcurve::BalanceLevel::Properly;
    if (level == "strictly") return polcurve::BalanceLevel::Strictly;
    if (level == "stably") return polcurve::BalanceLevel::Stably;
    throw polcurve::ParseError("unknown level '" + level + "'");
}

polcurve::ModelKind parse_kind(const std::string& kind) {
    if (kind == "quasi_stable") return polcurve::ModelKind::QuasiStable;
    if (kind == "quasi_p_stable") return polcurve::ModelKind::QuasiPStable;
    if (kind == "quasi_wp_stable") return polcurve::ModelKind::QuasiWpStable;
    throw polcurve::ParseError("unknown kind '" + kind + "'");
}

void emit(const Options& opt, const json& structured, const std::string& text) {
    if (opt.format == "json") std::cout << structured.dump(2) << "\n";
    else std::cout << "# " << kVersion << "\n" << text;
}

int run_classify(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    polcurve::Multidegree dvec =
        polcurve::io::parse_multidegree_text(read_file(opt.deg_path), curve);
    long long g = opt.g >= 0 ? opt.g : curve.genus();
    long long d = opt.d >= 0 ? opt.d : dvec.total();
    polcurve::GITReport report;
    try {
        report = polcurve::git_classify(curve, dvec, g, d, opt.max_vertices);
    } catch (const polcurve::Unsupported& err) {
        // Out of the characterized range: report everything undetermined.
        report.regime = polcurve::classify_regime(g, d);
        report.reasons.push_back(err.what());
    }
    polcurve::PositivityReport positivity;
    bool have_positivity = false;
    try {
        positivity = polcurve::positivity_report(curve, dvec, d, opt.max_vertices);
        have_positivity = true;
    } catch (const polcurve::NotBalanced&) {
    }
    json structured{{"git", polcurve::io::git_report_to_json(report)}};
    std::ostringstream text;
    text << "regime: " << structured["git"]["regime"].get<std::string>() << "\n"
         << "semistable: " << polcurve::verdict_name(report.semistable) << "\n"
         << "polystable: " << polcurve::verdict_name(report.polystable) << "\n"
         << "stable: " << polcurve::verdict_name(report.stable) << "\n";
    if (report.stabilizer_dimension)
        text << "stabilizer dim: " << *report.stabilizer_dimension << "\n";
    for (const auto& reason : report.reasons) text << "note: " << reason << "\n";
    if (have_positivity) {
        structured["positivity"] = polcurve::io::positivity_report_to_json(positivity);
        auto show = [&](const char* name, const polcurve::TriFlag& flag) {
            text << name << ": "
                 << (flag.is_true() ? "yes" : flag.is_false() ? "no" : "undetermined")
                 << "\n";
        };
        show("nef", positivity.nef);
        show("ample", positivity.ample);
        show("nonspecial", positivity.nonspecial);
        show("globally generated", positivity.globally_generated);
        show("very ample", positivity.very_ample);
        show("normally generated", positivity.normally_generated);
    }
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_balanced(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    long long d = opt.d >= 0 ? opt.d : 0;
    auto list = polcurve::enumerate_balanced(curve, d, parse_level(opt.level),
                                             opt.max_vertices);
    json structured = json::array();
    std::ostringstream text;
    for (const auto& dvec : list) {
        structured.push_back(polcurve::io::multidegree_to_json(curve, dvec));
        text << "(";
        for (int i = 0; i < dvec.size(); ++i) text << (i ? "," : "") << dvec[i];
        text << ")\n";
    }
    text << "count: " << list.size() << "\n";
    emit(opt, json{{"multidegrees", structured}, {"count", list.size()}}, text.str());
    return kExitOk;
}

int run_classgroup(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    polcurve::DegreeClassGroup group(curve);
    json structured = polcurve::io::class_group_to_json(group);
    std::ostringstream text;
    text << "invariant factors:";
    for (const auto& f : group.invariant_factors()) text << " " << f.to_string();
    if (group.invariant_factors().empty()) text << " (trivial)";
    text << "\norder: " << group.order().to_string() << "\n";
    if (!opt.deg_path.empty() && !opt.deg2_path.empty()) {
        polcurve::Multidegree d1 =
            polcurve::io::parse_multidegree_text(read_file(opt.deg_path), curve);
        polcurve::Multidegree d2 =
            polcurve::io::parse_multidegree_text(read_file(opt.deg2_path), curve);
        polcurve::EquivalenceResult eq =
            polcurve::are_equivalent(curve, d1, d2, true, opt.max_vertices);
        structured["equivalence"] = polcurve::io::equivalence_to_json(curve, eq);
        text << "equivalent: " << (eq.equivalent ? "yes" : "no") << "\n";
        if (eq.chain)
            text << "chain length: " << eq.chain->size() << "\n";
        else if (eq.equivalent && eq.chain_searched)
            text << "chain: not found within the search bound\n";
    }
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_reduce(const Options& opt, bool pseudo) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    polcurve::ReductionResult result = pseudo
                                           ? polcurve::ps_reduce(curve, opt.max_vertices)
                                           : polcurve::wps_reduce(curve, opt.max_vertices);
    json structured{{"curve", polcurve::io::curve_to_json(result.curve)},
                    {"contraction", polcurve::io::contraction_to_json(result.contraction)}};
    std::ostringstream text;
    text << structured["curve"].dump(2) << "\n";
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_models(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    auto models = polcurve::enumerate_models(curve, parse_kind(opt.kind), opt.max_vertices);
    json structured = json::array();
    for (const auto& model : models)
        structured.push_back(polcurve::io::curve_to_json(model));
    std::ostringstream text;
    text << "models: " << models.size() << "\n";
    emit(opt, json{{"models", structured}, {"count", models.size()}}, text.str());
    return kExitOk;
}

int run_strata(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    if (opt.d < 0) throw polcurve::ParseError("strata needs --d");
    polcurve::StrataPoset poset =
        polcurve::strata_poset(curve, opt.d, parse_kind(opt.kind), opt.max_vertices);
    if (opt.format == "dot") {
        std::cout << poset.to_dot();
        return kExitOk;
    }
    json nodes = json::array();
    for (const auto& node : poset.nodes)
        nodes.push_back({{"curve", polcurve::io::curve_to_json(node.curve)},
                         {"multidegree",
                          polcurve::io::multidegree_to_json(node.curve, node.deg)}});
    json structured{{"nodes", nodes}, {"covers", poset.covers}};
    std::ostringstream text;
    text << "strata: " << poset.nodes.size() << "\ncovers: " << poset.covers.size()
         << "\n";
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_specialize(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    polcurve::Multidegree dvec =
        polcurve::io::parse_multidegree_text(read_file(opt.deg_path), curve);
    polcurve::SpecializationResult result =
        polcurve::specialize_strictly({curve, dvec}, opt.max_vertices);
    json steps = json::array();
    for (const auto& step : result.steps) {
        json nodes = json::array();
        for (const auto& [u, w] : step.blown_up_nodes) nodes.push_back({u, w});
        steps.push_back(
            {{"witness", step.witness},
             {"blown_up_nodes", nodes},
             {"curve", polcurve::io::curve_to_json(step.result.curve)},
             {"multidegree", polcurve::io::multidegree_to_json(step.result.curve,
                                                               step.result.deg)}});
    }
    json structured{
        {"curve", polcurve::io::curve_to_json(result.final.curve)},
        {"multidegree",
         polcurve::io::multidegree_to_json(result.final.curve, result.final.deg)},
        {"steps", steps}};
    std::ostringstream text;
    text << "steps: " << result.steps.size() << "\n"
         << structured["multidegree"].dump(2) << "\n";
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_certify(const Options& opt) {
    json structured = json::object();
    std::ostringstream text;
    if (!opt.curve_path.empty()) {
        polcurve::CurveGraph curve =
            polcurve::io::parse_curve_text(read_file(opt.curve_path));
        polcurve::Multidegree dvec =
            polcurve::io::parse_multidegree_text(read_file(opt.deg_path), curve);
        long long g = opt.g >= 0 ? opt.g : curve.genus();
        long long d = opt.d >= 0 ? opt.d : dvec.total();
        auto certificate =
            polcurve::destabilizer_certificate(curve, dvec, g, d, opt.max_vertices);
        if (certificate) {
            structured["certificate"] =
                polcurve::io::destab_certificate_to_json(*certificate);
            text << "destabilizer: found (subcurve";
            for (const auto& id : certificate->subcurve) text << " " << id;
            text << ")\n";
        } else {
            structured["certificate"] = nullptr;
            text << "destabilizer: none\n";
        }
    }
    if (opt.g >= 2 && opt.d >= 0) {
        polcurve::DestabCheck check = polcurve::elliptic_tail_verdict(opt.g, opt.d);
        structured["elliptic_tail"] = polcurve::io::destab_check_to_json(check);
        text << "elliptic tail verdict: "
             << structured["elliptic_tail"]["verdict"].get<std::string>() << "\n";
    }
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_gcd(const Options& opt) {
    if (opt.g < 3 || opt.d < 0) throw polcurve::ParseError("gcd needs --g >= 3 and --d");
    bool geometric = polcurve::is_geometric_quotient(opt.g, opt.d);
    long long value = std::gcd(opt.d + 1 - opt.g, 2 * opt.g - 2);
    json structured{{"g", opt.g}, {"d", opt.d}, {"gcd", value}, {"geometric", geometric}};
    std::ostringstream text;
    text << "geometric quotient: " << (geometric ? "yes" : "no") << " (gcd=" << value
         << ")\n";
    emit(opt, structured, text.str());
    return kExitOk;
}

int run_canonical(const Options& opt) {
    polcurve::CurveGraph curve = polcurve::io::parse_curve_text(read_file(opt.curve_path));
    polcurve::PositivityReport report =
        polcurve::canonical_power_report(curve, opt.power, opt.max_vertices);
    json structured = polcurve::io::positivity_report_to_json(report);
    std::ostringstream text;
    auto show = [&](const char* name, const polcurve::TriFlag& flag) {
        text << name << ": "
             << (flag.is_true() ? "yes" : flag.is_false() ? "no" : "undetermined") << "\n";
    };
    show("nonspecial", report.nonspecial);
    show("globally generated", report.globally_generated);
    show("very ample", report.very_ample);
    show("normally generated", report.normally_generated);
    emit(opt, structured, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced-multidegree stability calculator for polarized curves"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--max-vertices", opt.max_vertices, "subcurve scan cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");

    auto add_curve = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--curve", opt.curve_path, "curve document (JSON)");
        if (required) o->required();
    };
    auto add_deg = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--deg", opt.deg_path, "multidegree document (JSON)");
        if (required) o->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "GIT and positivity report");
    classify->fallthrough();
    add_curve(classify);
    add_deg(classify);
    classify->add_option("--g", opt.g);
    classify->add_option("--d", opt.d);

    CLI::App* balanced = app.add_subcommand("balanced", "enumerate balanced multidegrees");
    balanced->fallthrough();
    add_curve(balanced);
    balanced->add_option("--d", opt.d)->required();
    balanced->add_option("--level", opt.level);

    CLI::App* classgroup = app.add_subcommand("classgroup", "degree class group");
    classgroup->fallthrough();
    add_curve(classgroup);
    classgroup->add_option("--deg", opt.deg_path, "first multidegree to compare");
    classgroup->add_option("--deg2", opt.deg2_path, "second multidegree to compare");

    CLI::App* reduce = app.add_subcommand("reduce", "wp-stable or p-stable reduction");
    reduce->fallthrough();
    add_curve(reduce);
    bool pseudo = false;
    reduce->add_flag("--pseudo", pseudo, "contract elliptic tails as well");

    CLI::App* models = app.add_subcommand("models", "enumerate blow-up models");
    models->fallthrough();
    add_curve(models);
    models->add_option("--kind", opt.kind);

    CLI::App* strata = app.add_subcommand("strata", "strata poset (DOT with --format dot)");
    strata->fallthrough();
    add_curve(strata);
    strata->add_option("--d", opt.d)->required();
    strata->add_option("--kind", opt.kind);

    CLI::App* specialize = app.add_subcommand("specialize", "isotrivial specialization");
    specialize->fallthrough();
    add_curve(specialize);
    add_deg(specialize);

    CLI::App* certify = app.add_subcommand("certify", "destabilization certificates");
    certify->fallthrough();
    add_curve(certify, false);
    add_deg(certify, false);
    certify->add_option("--g", opt.g);
    certify->add_option("--d", opt.d);

    CLI::App* gcd_cmd = app.add_subcommand("gcd", "geometric-quotient criterion");
    gcd_cmd->fallthrough();
    gcd_cmd->add_option("--g", opt.g)->required();
    gcd_cmd->add_option("--d", opt.d)->required();

    CLI::App* canonical = app.add_subcommand("canonical", "positivity of omega^i");
    canonical->fallthrough();
    add_curve(canonical);
    canonical->add_option("--i", opt.power);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(opt);
        if (balanced->parsed()) return run_balanced(opt);
        if (classgroup->parsed()) return run_classgroup(opt);
        if (reduce->parsed()) return run_reduce(opt, pseudo);
        if (models->parsed()) return run_models(opt);
        if (strata->parsed()) return run_strata(opt);
        if (specialize->parsed()) return run_specialize(opt);
        if (certify->parsed()) return run_certify(opt);
        if (gcd_cmd->parsed()) return run_gcd(opt);
        if (canonical->parsed()) return run_canonical(opt);
    } catch (const polcurve::TooLarge& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitCap;
    } catch (const polcurve::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
