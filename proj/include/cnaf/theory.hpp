#pragma once

#include <string>
#include <vector>

#include "cnaf/formula.hpp"

namespace cnaf {

// A finite list of formulas together with its atom universe: every atom
// occurring in the formulas plus any explicitly declared arguments, in
// declaration order with no duplicates. Duplicate formulas are permitted and
// are deduplicated on comparison.
struct Theory {
    std::vector<FormulaPtr> formulas;
    std::vector<std::string> universe;

    // Appends a formula and extends the universe with any new atoms.
    void add(FormulaPtr f);
    // Adds an atom to the universe if not already present.
    void declare(const std::string& atom);

    bool has_atom(const std::string& atom) const;
};

// Sorted, deduplicated canonical prints of the formulas.
std::vector<std::string> canonical_formulas(const Theory& t);

// Equality up to formula duplication/order and universe order.
bool same_theory(const Theory& a, const Theory& b);

// One formula per line in the canonical grammar.
std::string print_theory(const Theory& t);

// Parses a formula-per-line text (blank lines and '%' comments skipped).
// The universe is the set of atoms occurring, in first-occurrence order.
Theory parse_theory(const std::string& text);

// True when every formula is CN-flat and none mentions @1.
bool theory_is_cn_flat(const Theory& t);

} // namespace cnaf
