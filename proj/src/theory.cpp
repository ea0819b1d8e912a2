#include "cnaf/theory.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cnaf/errors.hpp"

namespace cnaf {

void Theory::add(FormulaPtr f) {
    for (const std::string& a : atoms_of(f)) declare(a);
    formulas.push_back(std::move(f));
}

void Theory::declare(const std::string& atom) {
    if (!has_atom(atom)) universe.push_back(atom);
}

bool Theory::has_atom(const std::string& atom) const {
    return std::find(universe.begin(), universe.end(), atom) != universe.end();
}

std::vector<std::string> canonical_formulas(const Theory& t) {
    std::set<std::string> s;
    for (const auto& f : t.formulas) s.insert(print(f));
    return {s.begin(), s.end()};
}

bool same_theory(const Theory& a, const Theory& b) {
    if (canonical_formulas(a) != canonical_formulas(b)) return false;
    std::set<std::string> ua(a.universe.begin(), a.universe.end());
    std::set<std::string> ub(b.universe.begin(), b.universe.end());
    return ua == ub;
}

std::string print_theory(const Theory& t) {
    std::string out;
    for (const auto& f : t.formulas) {
        out += print(f);
        out += "\n";
    }
    return out;
}

Theory parse_theory(const std::string& text) {
    Theory t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos || line[i] == '%') continue;
        t.add(parse_formula(line));
    }
    return t;
}

bool theory_is_cn_flat(const Theory& t) {
    for (const auto& f : t.formulas)
        if (!is_cn_flat(f) || contains_world1(f)) return false;
    return true;
}

} // namespace cnaf
