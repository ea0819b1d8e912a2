#include "cnaf/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "cnaf/errors.hpp"
#include "cnaf/reduction.hpp"
#include "cnaf/translate.hpp"

namespace cnaf {

std::string family_name(const Framework& fw) {
    if (std::holds_alternative<Af>(fw)) return "plain";
    if (std::holds_alternative<JointAf>(fw)) return "joint";
    if (std::holds_alternative<HigherAf>(fw)) return "higher";
    if (std::holds_alternative<DisjAf>(fw)) return "disjunctive";
    if (std::holds_alternative<BipolarAf>(fw)) return "bipolar";
    return "adf";
}

Theory theory_of(const Framework& fw) {
    if (const auto* af = std::get_if<Af>(&fw)) return delta_af(*af);
    if (const auto* jaf = std::get_if<JointAf>(&fw)) return delta_joint(*jaf);
    if (const auto* haf = std::get_if<HigherAf>(&fw))
        return delta_joint(higher_to_joint(*haf));
    if (const auto* daf = std::get_if<DisjAf>(&fw)) return delta_disjunctive(*daf);
    if (const auto* baf = std::get_if<BipolarAf>(&fw))
        return delta_bipolar(*baf, BipolarVariant::Tau1);
    return delta_adf(std::get<AdfSpec>(fw));
}

namespace {

std::vector<Labelling> sorted_unique(std::vector<Labelling> ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

std::vector<Labelling> filter_stable(std::vector<Labelling> ls) {
    std::vector<Labelling> out;
    for (auto& l : ls) {
        bool has_und = false;
        for (const auto& [a, lab] : l.labels)
            if (lab == Label::Und) has_und = true;
        if (!has_und) out.push_back(std::move(l));
    }
    return out;
}

std::vector<Labelling> filter_preferred(const std::vector<Labelling>& ls) {
    std::vector<Labelling> out;
    for (const auto& l : ls) {
        auto in_l = l.in_set();
        bool maximal = true;
        for (const auto& o : ls) {
            auto in_o = o.in_set();
            if (in_o != in_l &&
                std::includes(in_o.begin(), in_o.end(), in_l.begin(), in_l.end()))
                maximal = false;
        }
        if (maximal) out.push_back(l);
    }
    return out;
}

// Complete labellings of any framework by the CN route, over its own S.
std::vector<Labelling> cn_complete(const Framework& fw, std::size_t max_atoms) {
    EnumerateOptions opts;
    opts.max_atoms = max_atoms;
    Theory t = theory_of(fw);
    std::vector<Labelling> out;
    for (const auto& m : enumerate_models(t, opts))
        out.push_back(model_to_labelling(m));
    if (std::holds_alternative<HigherAf>(fw)) {
        const auto& S = std::get<HigherAf>(fw).arguments;
        std::vector<Labelling> restricted;
        for (const auto& l : out) restricted.push_back(restrict_labelling(l, S));
        out = sorted_unique(std::move(restricted));
    }
    return out;
}

} // namespace

std::vector<Labelling> labellings_cn(const Framework& fw,
                                     const std::string& semantics,
                                     std::size_t max_atoms) {
    EnumerateOptions opts;
    opts.max_atoms = max_atoms;
    if (semantics == "complete") return cn_complete(fw, max_atoms);
    if (semantics == "stable") {
        if (const auto* af = std::get_if<Af>(&fw)) {
            // Models of delta union the stable axioms are exactly the
            // und-free labellings.
            Theory t = delta_af(*af);
            Theory st = stable_axioms(af->arguments);
            for (auto& f : st.formulas) t.formulas.push_back(std::move(f));
            std::vector<Labelling> out;
            for (const auto& m : enumerate_models(t, opts))
                out.push_back(model_to_labelling(m));
            return out;
        }
        return filter_stable(cn_complete(fw, max_atoms));
    }
    if (semantics == "preferred")
        return filter_preferred(cn_complete(fw, max_atoms));
    if (semantics == "grounded") {
        const auto* af = std::get_if<Af>(&fw);
        if (!af)
            throw DomainError("grounded semantics is defined for plain networks");
        Theory t = delta_af(*af);
        std::set<std::string> ext = grounded_by_entailment(t, opts);
        // The grounded labelling is the complete labelling with this in-set.
        for (auto& l : cn_complete(fw, max_atoms))
            if (l.in_set() == ext) return {l};
        throw DomainError("internal error: no complete labelling has the "
                          "entailed in-set");
    }
    throw DomainError("unknown semantics '" + semantics + "'");
}

std::vector<Labelling> labellings_oracle(const Framework& fw,
                                         const std::string& semantics,
                                         std::size_t max_args) {
    OracleOptions opts;
    opts.max_args = max_args;
    if (const auto* af = std::get_if<Af>(&fw)) {
        if (semantics == "complete") return complete_labellings(*af, opts);
        if (semantics == "grounded") return {grounded_fixpoint(*af)};
        if (semantics == "stable") return stable_labellings(*af, opts);
        if (semantics == "preferred") return preferred_labellings(*af, opts);
        throw DomainError("unknown semantics '" + semantics + "'");
    }
    if (const auto* jaf = std::get_if<JointAf>(&fw)) {
        auto ls = joint_labellings(*jaf, opts);
        if (semantics == "complete") return ls;
        if (semantics == "stable") return filter_stable(std::move(ls));
        if (semantics == "preferred") return filter_preferred(ls);
        throw DomainError("semantics '" + semantics +
                          "' not supported for joint networks");
    }
    if (const auto* haf = std::get_if<HigherAf>(&fw)) {
        JointAf reduced = higher_to_joint(*haf);
        auto ls = joint_labellings(reduced, opts);
        std::vector<Labelling> restricted;
        for (const auto& l : ls)
            restricted.push_back(restrict_labelling(l, haf->arguments));
        restricted = sorted_unique(std::move(restricted));
        if (semantics == "complete") return restricted;
        if (semantics == "stable") return filter_stable(std::move(restricted));
        if (semantics == "preferred") return filter_preferred(restricted);
        throw DomainError("semantics '" + semantics +
                          "' not supported for higher networks");
    }
    if (const auto* daf = std::get_if<DisjAf>(&fw)) {
        auto ls = disjunctive_labellings(*daf, opts);
        if (semantics == "complete") return ls;
        if (semantics == "stable") return filter_stable(std::move(ls));
        if (semantics == "preferred") return filter_preferred(ls);
        throw DomainError("semantics '" + semantics +
                          "' not supported for disjunctive networks");
    }
    throw DomainError("no labelling oracle for " + family_name(fw) +
                      " networks; use --engine cn");
}

namespace {

std::string labelling_set_text(const std::vector<Labelling>& ls) {
    std::string out = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) out += ", ";
        out += "[";
        bool first = true;
        for (const auto& [arg, lab] : ls[i].labels) {
            if (!first) out += " ";
            first = false;
            out += arg + ":" + label_name(lab);
        }
        out += "]";
    }
    return out + "}";
}

} // namespace

RunReport run_extensions(const Framework& fw, const std::string& input,
                         const std::string& semantics, const std::string& engine,
                         std::size_t max_atoms) {
    auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.input = input;
    r.family = family_name(fw);
    r.semantics = semantics;
    r.engine = engine;

    std::vector<std::string> issues = validate(fw);
    if (!issues.empty()) throw DomainError("invalid framework: " + issues.front());

    if (engine == "cn") {
        r.labellings = labellings_cn(fw, semantics, max_atoms);
    } else if (engine == "oracle") {
        r.labellings = labellings_oracle(fw, semantics, max_atoms);
    } else if (engine == "both") {
        auto cn = sorted_unique(labellings_cn(fw, semantics, max_atoms));
        auto oracle = sorted_unique(labellings_oracle(fw, semantics, max_atoms));
        if (cn != oracle) {
            r.divergences.push_back(
                {semantics, "cn=" + labelling_set_text(cn) +
                                " oracle=" + labelling_set_text(oracle)});
        }
        r.labellings = cn;
    } else {
        throw DomainError("unknown engine '" + engine + "'");
    }

    for (const auto& l : r.labellings) r.extensions.push_back(l.in_set());
    r.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
}

RunReport run_models(const Framework& fw, const std::string& input,
                     std::size_t max_atoms) {
    auto start = std::chrono::steady_clock::now();
    RunReport r;
    r.input = input;
    r.family = family_name(fw);
    r.semantics = "models";
    r.engine = "cn";

    std::vector<std::string> issues = validate(fw);
    if (!issues.empty()) throw DomainError("invalid framework: " + issues.front());

    EnumerateOptions opts;
    opts.max_atoms = max_atoms;
    r.models = enumerate_models(theory_of(fw), opts);
    for (const auto& m : r.models) {
        Labelling l = model_to_labelling(m);
        r.labellings.push_back(l);
        r.extensions.push_back(l.in_set());
    }
    r.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
}

nlohmann::json model_json(const CnModel& m) {
    nlohmann::json states = nlohmann::json::object();
    for (const auto& [atom, l] : m.states) states[atom] = label_name(l);
    return nlohmann::json{{"model", states}};
}

nlohmann::json labelling_json(const Labelling& l) {
    nlohmann::json labels = nlohmann::json::object();
    for (const auto& [arg, lab] : l.labels) labels[arg] = label_name(lab);
    return nlohmann::json{{"labelling", labels}};
}

nlohmann::json countermodel_json(const TwoWorldModel& m) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [atom, v] : m.valuation)
        out[atom] = nlohmann::json::array({v.first ? 1 : 0, v.second ? 1 : 0});
    return out;
}

nlohmann::json report_json(const RunReport& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["family"] = r.family;
    j["semantics"] = r.semantics;
    j["engine"] = r.engine;
    j["models"] = nlohmann::json::array();
    for (const auto& m : r.models) j["models"].push_back(model_json(m));
    j["labellings"] = nlohmann::json::array();
    for (const auto& l : r.labellings) j["labellings"].push_back(labelling_json(l));
    j["extensions"] = nlohmann::json::array();
    for (const auto& e : r.extensions)
        j["extensions"].push_back(std::vector<std::string>(e.begin(), e.end()));
    j["timing_ms"] = r.timing_ms;
    j["divergences"] = nlohmann::json::array();
    for (const auto& d : r.divergences)
        j["divergences"].push_back({{"semantics", d.semantics}, {"detail", d.detail}});
    return j;
}

std::string report_text(const RunReport& r) {
    std::string out;
    out += "input:     " + r.input + " (" + r.family + ")\n";
    out += "semantics: " + r.semantics + "  engine: " + r.engine + "\n";
    if (!r.models.empty()) {
        out += "models:\n";
        for (const auto& m : r.models) {
            out += "  ";
            for (const auto& [atom, l] : m.states)
                out += atom + "=" + label_name(l) + " ";
            out += "\n";
        }
    }
    out += "extensions (" + std::to_string(r.extensions.size()) + "):\n";
    for (std::size_t i = 0; i < r.extensions.size(); ++i) {
        out += "  {";
        bool first = true;
        for (const auto& a : r.extensions[i]) {
            if (!first) out += ",";
            first = false;
            out += a;
        }
        out += "}";
        const auto& labels = r.labellings[i].labels;
        out += "  [";
        first = true;
        for (const auto& [arg, lab] : labels) {
            if (!first) out += " ";
            first = false;
            out += arg + ":" + label_name(lab);
        }
        out += "]\n";
    }
    for (const auto& d : r.divergences)
        out += "DIVERGENCE (" + d.semantics + "): " + d.detail + "\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "time: %.2f ms\n", r.timing_ms);
    out += buf;
    return out;
}

} // namespace cnaf
