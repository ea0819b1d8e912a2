// Command-line front end: compiles argumentation networks to CN theories,
// enumerates models and extensions, cross-checks against the labelling
// oracles, runs the structural reductions, and decides two-world validity.
//
// Exit codes: 0 success, 1 divergence detected, 2 input error, 3 size cap.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cnaf/apx.hpp"
#include "cnaf/enumerate.hpp"
#include "cnaf/errors.hpp"
#include "cnaf/oracle.hpp"
#include "cnaf/reduction.hpp"
#include "cnaf/report.hpp"
#include "cnaf/translate.hpp"
#include "cnaf/two_world.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDivergence = 1;
constexpr int kExitInput = 2;
constexpr int kExitSizeCap = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cnaf::DomainError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cnaf::Framework load_framework(const std::string& path, std::string format) {
    std::string text = read_input(path);
    if (format == "auto") {
        format = "apx";
        if (path.size() > 4 && path.substr(path.size() - 4) == ".tgf") format = "tgf";
    }
    if (format == "tgf") return cnaf::parse_tgf(text);
    if (format == "apx") return cnaf::parse_apx(text);
    throw cnaf::DomainError("unknown format '" + format + "'");
}

struct CommonOpts {
    std::string input;
    std::string format = "auto";
    bool json = false;
    std::size_t max_atoms = 20;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_input = true) {
    auto* opt = cmd->add_option("--input,-i", o.input, "input file ('-' for stdin)");
    if (need_input) opt->required();
    cmd->add_option("--format,-f", o.format, "apx|tgf (default: by extension)")
        ->check(CLI::IsMember({"apx", "tgf", "auto"}));
    cmd->add_flag("--json", o.json, "emit JSON on stdout");
    cmd->add_option("--max-atoms", o.max_atoms, "enumeration size cap");
}

int run_extensions_cmd(const CommonOpts& o, const std::string& semantics,
                       const std::string& engine) {
    cnaf::Framework fw = load_framework(o.input, o.format);
    cnaf::RunReport r =
        cnaf::run_extensions(fw, o.input, semantics, engine, o.max_atoms);
    if (o.json)
        std::cout << cnaf::report_json(r).dump(2) << "\n";
    else
        std::cout << cnaf::report_text(r);
    return r.divergences.empty() ? kExitOk : kExitDivergence;
}

int run_models_cmd(const CommonOpts& o) {
    cnaf::Framework fw = load_framework(o.input, o.format);
    cnaf::RunReport r = cnaf::run_models(fw, o.input, o.max_atoms);
    if (o.json)
        std::cout << cnaf::report_json(r).dump(2) << "\n";
    else
        std::cout << cnaf::report_text(r);
    return kExitOk;
}

int run_reduce_cmd(const CommonOpts& o, const std::string& kind) {
    cnaf::Framework fw = load_framework(o.input, o.format);
    if (kind == "joint") {
        const auto* jaf = std::get_if<cnaf::JointAf>(&fw);
        cnaf::JointAf singleton_view;
        if (!jaf) {
            // A plain network is a joint network with singleton groups.
            const auto* af = std::get_if<cnaf::Af>(&fw);
            if (!af) throw cnaf::DomainError("reduce joint expects a joint or plain network");
            singleton_view.arguments = af->arguments;
            for (const auto& [src, tgt] : af->attacks)
                singleton_view.attacks.push_back({{src}, tgt});
            jaf = &singleton_view;
        }
        cnaf::ReductionResult r = cnaf::joint_to_single(*jaf);
        nlohmann::json prov = nlohmann::json::object();
        for (const auto& [node, p] : r.naming) {
            prov[node] = {{"kind", p.kind}, {"target", p.target}, {"group", p.group}};
            if (p.kind == "edge") prov[node]["member"] = p.member;
        }
        if (o.json) {
            nlohmann::json j{{"apx", cnaf::print_apx(r.framework)},
                             {"embedded", r.embedded},
                             {"provenance", prov}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cnaf::print_apx(r.framework);
            std::cerr << prov.dump(2) << "\n"; // provenance sidecar
        }
        return kExitOk;
    }
    if (kind == "higher") {
        const auto* haf = std::get_if<cnaf::HigherAf>(&fw);
        if (!haf) throw cnaf::DomainError("reduce higher expects a higher-level network");
        cnaf::JointAf reduced = cnaf::higher_to_joint(*haf);
        if (o.json) {
            nlohmann::json j{{"apx", cnaf::print_apx(reduced)},
                             {"embedded", haf->arguments}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cnaf::print_apx(reduced);
        }
        return kExitOk;
    }
    throw cnaf::DomainError("unknown reduction kind '" + kind + "'");
}

int run_cnn_cmd(const std::string& formula_text, const std::string& action,
                bool json, std::size_t max_atoms) {
    cnaf::FormulaPtr f = cnaf::parse_formula(formula_text);
    cnaf::TwoWorldOptions opts;
    opts.max_atoms = max_atoms;
    if (action == "normalize") {
        std::string normalized = cnaf::print(cnaf::normalize_n(f));
        if (json)
            std::cout << nlohmann::json{{"formula", formula_text},
                                        {"normalized", normalized}}
                             .dump(2)
                      << "\n";
        else
            std::cout << normalized << "\n";
        return kExitOk;
    }
    if (action == "valid") {
        bool w1 = cnaf::is_valid(f, cnaf::ValidityMode::World1, opts);
        bool both = w1 && cnaf::is_valid(f, cnaf::ValidityMode::Both, opts);
        if (json)
            std::cout << nlohmann::json{{"formula", formula_text},
                                        {"valid_world1", w1},
                                        {"valid_both", both}}
                             .dump(2)
                      << "\n";
        else
            std::cout << (w1 ? "valid" : "not valid") << " at world 1; "
                      << (both ? "valid" : "not valid") << " at both worlds\n";
        return kExitOk;
    }
    if (action == "countermodel") {
        auto cm = cnaf::find_countermodel(f, cnaf::ValidityMode::Both, opts);
        if (json) {
            nlohmann::json j{{"formula", formula_text}, {"valid_both", !cm.has_value()}};
            if (cm) {
                j["countermodel"] = cnaf::countermodel_json(cm->model);
                j["world"] = cm->world;
            }
            std::cout << j.dump(2) << "\n";
        } else if (cm) {
            std::cout << "fails at world " << cm->world << ": "
                      << cnaf::countermodel_json(cm->model).dump() << "\n";
        } else {
            std::cout << "valid at both worlds\n";
        }
        return kExitOk;
    }
    throw cnaf::DomainError("unknown cnn action '" + action + "'");
}

int run_entails_cmd(const CommonOpts& o, const std::string& formula_text) {
    cnaf::Framework fw = load_framework(o.input, o.format);
    std::vector<std::string> issues = validate(fw);
    if (!issues.empty())
        throw cnaf::DomainError("invalid framework: " + issues.front());
    cnaf::FormulaPtr f = cnaf::parse_formula(formula_text);
    cnaf::Theory t = cnaf::theory_of(fw);
    cnaf::EnumerateOptions opts;
    opts.max_atoms = o.max_atoms;
    for (const auto& a : cnaf::atoms_of(f)) t.declare(a);
    bool holds = true;
    cnaf::CnModel witness;
    for (const auto& m : cnaf::enumerate_models(t, opts)) {
        if (!cnaf::evaluate_cn(f, m)) {
            holds = false;
            witness = m;
            break;
        }
    }
    if (o.json) {
        nlohmann::json j{{"formula", formula_text}, {"entailed", holds}};
        if (!holds) j["countermodel"] = cnaf::model_json(witness);
        std::cout << j.dump(2) << "\n";
    } else if (holds) {
        std::cout << "entailed\n";
    } else {
        std::cout << "not entailed; countermodel "
                  << cnaf::model_json(witness).dump() << "\n";
    }
    return kExitOk;
}

cnaf::Af random_af(std::mt19937_64& rng, std::size_t max_args) {
    std::uniform_int_distribution<std::size_t> nd(1, max_args);
    std::size_t n = nd(rng);
    cnaf::Af af;
    for (std::size_t i = 0; i < n; ++i)
        af.arguments.push_back("a" + std::to_string(i));
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    double p = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
    for (const auto& src : af.arguments)
        for (const auto& tgt : af.arguments)
            if (pd(rng) < p) af.attacks.emplace_back(src, tgt);
    return af;
}

cnaf::JointAf random_joint(std::mt19937_64& rng, std::size_t max_args) {
    std::uniform_int_distribution<std::size_t> nd(1, max_args);
    std::size_t n = nd(rng);
    cnaf::JointAf jaf;
    for (std::size_t i = 0; i < n; ++i)
        jaf.arguments.push_back("a" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> kd(0, 2 * n);
    std::size_t attacks = kd(rng);
    std::uniform_int_distribution<std::size_t> gd(1, std::min<std::size_t>(3, n));
    std::uniform_int_distribution<std::size_t> ad(0, n - 1);
    for (std::size_t k = 0; k < attacks; ++k) {
        cnaf::JointAttack a;
        std::size_t gs = gd(rng);
        for (std::size_t j = 0; j < gs; ++j)
            a.group.push_back(jaf.arguments[ad(rng)]);
        std::sort(a.group.begin(), a.group.end());
        a.group.erase(std::unique(a.group.begin(), a.group.end()), a.group.end());
        a.target = jaf.arguments[ad(rng)];
        jaf.attacks.push_back(std::move(a));
    }
    return jaf;
}

cnaf::DisjAf random_disj(std::mt19937_64& rng, std::size_t max_args) {
    std::uniform_int_distribution<std::size_t> nd(1, max_args);
    std::size_t n = nd(rng);
    cnaf::DisjAf daf;
    for (std::size_t i = 0; i < n; ++i)
        daf.arguments.push_back("a" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> ad(0, n - 1);
    std::size_t direct = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    for (std::size_t k = 0; k < direct; ++k)
        daf.direct_attacks.emplace_back(daf.arguments[ad(rng)],
                                        daf.arguments[ad(rng)]);
    std::size_t disj = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t k = 0; k < disj; ++k) {
        cnaf::DisjAttack a;
        a.source = daf.arguments[ad(rng)];
        std::size_t ts = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        for (std::size_t j = 0; j < ts; ++j)
            a.targets.push_back(daf.arguments[ad(rng)]);
        std::sort(a.targets.begin(), a.targets.end());
        a.targets.erase(std::unique(a.targets.begin(), a.targets.end()),
                        a.targets.end());
        daf.disj_attacks.push_back(std::move(a));
    }
    return daf;
}

int run_fuzz_cmd(std::uint64_t seed, std::size_t count, std::size_t max_args,
                 bool json) {
    std::mt19937_64 rng(seed);
    std::size_t divergences = 0;
    for (std::size_t i = 0; i < count; ++i) {
        cnaf::Framework fw;
        if (i % 3 == 2) fw = random_joint(rng, std::min<std::size_t>(max_args, 5));
        else if (i % 5 == 4) fw = random_disj(rng, std::min<std::size_t>(max_args, 5));
        else fw = random_af(rng, max_args);
        for (const char* sem : {"complete", "grounded", "stable", "preferred"}) {
            if (!std::holds_alternative<cnaf::Af>(fw) &&
                std::string(sem) == "grounded")
                continue;
            cnaf::RunReport r = cnaf::run_extensions(
                fw, "fuzz#" + std::to_string(i), sem, "both", 24);
            if (!r.divergences.empty()) {
                ++divergences;
                std::cerr << "divergence on instance " << i << " (" << sem
                          << "):\n"
                          << cnaf::print_apx(fw) << r.divergences[0].detail
                          << "\n";
            }
        }
    }
    if (json)
        std::cout << nlohmann::json{{"instances", count},
                                    {"seed", seed},
                                    {"divergences", divergences}}
                         .dump(2)
                  << "\n";
    else
        std::cout << count << " instances, " << divergences << " divergences\n";
    return divergences == 0 ? kExitOk : kExitDivergence;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CN argumentation toolkit"};
    app.require_subcommand(1);

    CommonOpts ext_opts;
    std::string semantics = "complete";
    std::string engine = "both";
    auto* ext = app.add_subcommand("extensions", "enumerate extensions");
    add_common(ext, ext_opts);
    ext->add_option("--semantics,-s", semantics, "complete|grounded|stable|preferred")
        ->check(CLI::IsMember({"complete", "grounded", "stable", "preferred"}));
    ext->add_option("--engine,-e", engine, "cn|oracle|both")
        ->check(CLI::IsMember({"cn", "oracle", "both"}));

    CommonOpts models_opts;
    auto* models = app.add_subcommand("models", "enumerate raw CN models");
    add_common(models, models_opts);

    CommonOpts reduce_opts;
    std::string kind = "joint";
    auto* reduce = app.add_subcommand("reduce", "structural reductions");
    add_common(reduce, reduce_opts);
    reduce->add_option("--kind,-k", kind, "joint|higher")
        ->check(CLI::IsMember({"joint", "higher"}));

    std::string cnn_formula, cnn_action = "valid";
    bool cnn_json = false;
    std::size_t cnn_max_atoms = 12;
    auto* cnn = app.add_subcommand("cnn", "two-world validity and normalization");
    cnn->add_option("formula", cnn_formula, "formula text")->required();
    cnn->add_option("--action,-a", cnn_action, "valid|countermodel|normalize")
        ->check(CLI::IsMember({"valid", "countermodel", "normalize"}));
    cnn->add_flag("--json", cnn_json, "emit JSON on stdout");
    cnn->add_option("--max-atoms", cnn_max_atoms, "valuation search cap");

    CommonOpts entails_opts;
    std::string entails_formula;
    auto* entails = app.add_subcommand("entails", "theory entailment check");
    add_common(entails, entails_opts);
    entails->add_option("formula", entails_formula, "formula text")->required();

    std::uint64_t seed = 0;
    std::size_t fuzz_count = 50, fuzz_max_args = 6;
    bool fuzz_json = false;
    auto* fuzz = app.add_subcommand("fuzz", "randomized differential testing");
    fuzz->add_option("--seed", seed, "RNG seed (reproducible instances)");
    fuzz->add_option("--count", fuzz_count, "number of instances");
    fuzz->add_option("--max-args", fuzz_max_args, "arguments per instance cap");
    fuzz->add_flag("--json", fuzz_json, "emit JSON on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(ext))
            return run_extensions_cmd(ext_opts, semantics, engine);
        if (app.got_subcommand(models)) return run_models_cmd(models_opts);
        if (app.got_subcommand(reduce)) return run_reduce_cmd(reduce_opts, kind);
        if (app.got_subcommand(cnn))
            return run_cnn_cmd(cnn_formula, cnn_action, cnn_json, cnn_max_atoms);
        if (app.got_subcommand(entails))
            return run_entails_cmd(entails_opts, entails_formula);
        if (app.got_subcommand(fuzz))
            return run_fuzz_cmd(seed, fuzz_count, fuzz_max_args, fuzz_json);
    } catch (const cnaf::SizeCapError& e) {
        std::cerr << "size cap: " << e.what() << "\n";
        return kExitSizeCap;
    } catch (const cnaf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const cnaf::DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
