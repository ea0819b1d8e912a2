#include "cnaf/model.hpp"

#include "cnaf/errors.hpp"

namespace cnaf {

const char* label_name(Label l) {
    switch (l) {
    case Label::In: return "in";
    case Label::Out: return "out";
    default: return "und";
    }
}

Label label_from_name(const std::string& s) {
    if (s == "in") return Label::In;
    if (s == "out") return Label::Out;
    if (s == "und") return Label::Und;
    throw DomainError("unknown label: '" + s + "'");
}

Label CnModel::at(const std::string& atom) const {
    auto it = states.find(atom);
    if (it == states.end())
        throw DomainError("atom '" + atom + "' not in model universe");
    return it->second;
}

bool CnModel::holds_atom(const std::string& atom) const {
    return at(atom) == Label::In;
}

bool CnModel::holds_sneg(const std::string& atom) const {
    return at(atom) == Label::Out;
}

Label Labelling::at(const std::string& arg) const {
    auto it = labels.find(arg);
    if (it == labels.end())
        throw DomainError("argument '" + arg + "' not in labelling");
    return it->second;
}

std::set<std::string> Labelling::in_set() const {
    std::set<std::string> s;
    for (const auto& [arg, l] : labels)
        if (l == Label::In) s.insert(arg);
    return s;
}

bool operator==(const CnModel& a, const CnModel& b) { return a.states == b.states; }
bool operator<(const CnModel& a, const CnModel& b) { return a.states < b.states; }
bool operator==(const Labelling& a, const Labelling& b) { return a.labels == b.labels; }
bool operator<(const Labelling& a, const Labelling& b) { return a.labels < b.labels; }

Labelling model_to_labelling(const CnModel& m) {
    Labelling l;
    l.labels = m.states;
    return l;
}

CnModel labelling_to_model(const Labelling& l) {
    CnModel m;
    m.states = l.labels;
    return m;
}

bool evaluate_cn(const FormulaPtr& f, const CnModel& m) {
    switch (f->op) {
    case Op::Top: return true;
    case Op::Bottom: return false;
    case Op::World1:
        throw DomainError("evaluate_cn: formula contains @1");
    case Op::Atom: return m.holds_atom(f->name);
    case Op::SNeg:
        if (f->lhs->op != Op::Atom)
            throw DomainError("evaluate_cn: formula is not CN-flat");
        return m.holds_sneg(f->lhs->name);
    case Op::Not: return !evaluate_cn(f->lhs, m);
    case Op::And: return evaluate_cn(f->lhs, m) && evaluate_cn(f->rhs, m);
    case Op::Or: return evaluate_cn(f->lhs, m) || evaluate_cn(f->rhs, m);
    case Op::Imp: return !evaluate_cn(f->lhs, m) || evaluate_cn(f->rhs, m);
    case Op::Iff: return evaluate_cn(f->lhs, m) == evaluate_cn(f->rhs, m);
    }
    return false;
}

} // namespace cnaf
