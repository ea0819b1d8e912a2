#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "cnaf/enumerate.hpp"
#include "cnaf/framework.hpp"
#include "cnaf/model.hpp"
#include "cnaf/oracle.hpp"
#include "cnaf/two_world.hpp"

namespace cnaf {

struct DivergenceRecord {
    std::string semantics;
    std::string detail;
};

struct RunReport {
    std::string input;    // input descriptor
    std::string family;   // plain|joint|higher|disjunctive|bipolar|adf
    std::string semantics;
    std::string engine;   // cn|oracle|both
    std::vector<CnModel> models;
    std::vector<Labelling> labellings;
    std::vector<std::set<std::string>> extensions; // in-sets of labellings
    double timing_ms = 0.0;
    std::vector<DivergenceRecord> divergences;
};

std::string family_name(const Framework& fw);

// The CN theory a framework compiles to. Higher-level networks go through
// the joint reduction; bipolar networks use tau1.
Theory theory_of(const Framework& fw);

// Labellings over the framework's own argument set, via the CN pipeline
// (models of the compiled theory, restricted for higher-level inputs).
std::vector<Labelling> labellings_cn(const Framework& fw,
                                     const std::string& semantics,
                                     std::size_t max_atoms);

// Labellings via the brute-force oracle. grounded/stable/preferred are
// plain-network semantics; joint, higher (through the reduction) and
// disjunctive networks support "complete".
std::vector<Labelling> labellings_oracle(const Framework& fw,
                                         const std::string& semantics,
                                         std::size_t max_args);

RunReport run_extensions(const Framework& fw, const std::string& input,
                         const std::string& semantics, const std::string& engine,
                         std::size_t max_atoms);

RunReport run_models(const Framework& fw, const std::string& input,
                     std::size_t max_atoms);

nlohmann::json model_json(const CnModel& m);          // {"model": {...}}
nlohmann::json labelling_json(const Labelling& l);    // {"labelling": {...}}
nlohmann::json countermodel_json(const TwoWorldModel& m); // {"atom": [w1,w2], ...}
nlohmann::json report_json(const RunReport& r);

std::string report_text(const RunReport& r);

} // namespace cnaf
