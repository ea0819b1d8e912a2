#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cnaf/formula.hpp"

namespace cnaf {

// The three argument states. A CN model gives each atom q a coherent pair
// (h(q), h(Nq)): In = (1,0), Out = (0,1), Und = (0,0). The incoherent pair
// (1,1) is unrepresentable.
enum class Label { In, Out, Und };

const char* label_name(Label l);
Label label_from_name(const std::string& s);

// Lexicographic state order used everywhere: In < Out < Und.
inline int label_rank(Label l) { return static_cast<int>(l); }

// A coherent truth assignment, total over some universe.
struct CnModel {
    std::map<std::string, Label> states;

    Label at(const std::string& atom) const;
    bool holds_atom(const std::string& atom) const;  // h(q) = 1
    bool holds_sneg(const std::string& atom) const;  // h(Nq) = 1
};

// A total map argument -> {in, out, und}.
struct Labelling {
    std::map<std::string, Label> labels;

    Label at(const std::string& arg) const;
    // The extension determined by the labelling.
    std::set<std::string> in_set() const;
};

bool operator==(const CnModel& a, const CnModel& b);
bool operator<(const CnModel& a, const CnModel& b);
bool operator==(const Labelling& a, const Labelling& b);
bool operator<(const Labelling& a, const Labelling& b);

// The state-preserving bijection between coherent assignments and
// labellings: in, out and und map to themselves.
Labelling model_to_labelling(const CnModel& m);
CnModel labelling_to_model(const Labelling& l);

// Classical evaluation of a CN-flat, @1-free formula: an atom q holds iff
// state(q) = In, and N q holds iff state(q) = Out. Throws DomainError on
// unknown atoms, non-flat input, or @1.
bool evaluate_cn(const FormulaPtr& f, const CnModel& m);

} // namespace cnaf
