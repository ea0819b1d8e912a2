#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cnaf/model.hpp"
#include "cnaf/theory.hpp"

namespace cnaf {

// A two-world Kripke model with atom persistence: truth at world 1 implies
// truth at world 2, so per-atom states are (0,0), (0,1), (1,1).
struct TwoWorldModel {
    std::map<std::string, std::pair<bool, bool>> valuation;

    bool at(const std::string& atom, int world) const;
};

// Truth clauses: classical connectives pointwise, @1 true only at world 1,
// and N A true at a world iff A is false at the other world.
bool eval_world(const FormulaPtr& f, const TwoWorldModel& m, int world);

enum class ValidityMode { World1, Both };

struct TwoWorldOptions {
    std::size_t max_atoms = 12;
    bool parallel = true;
};

// Exhaustive check over all 3^|atoms(f)| persistent valuations.
bool is_valid(const FormulaPtr& f, ValidityMode mode, TwoWorldOptions opts = {});

struct Countermodel {
    TwoWorldModel model;
    int world; // the world where the formula fails
};

// The lexicographically least failing valuation, if any.
std::optional<Countermodel> find_countermodel(const FormulaPtr& f, ValidityMode mode,
                                              TwoWorldOptions opts = {});

// The state bijection between coherent CN assignments and persistent
// two-world valuations: in -> (1,1), out -> (0,0), und -> (0,1).
TwoWorldModel cn_to_two_world(const CnModel& m);
CnModel two_world_to_cn(const TwoWorldModel& m);

// Intuitionistic connectives inside the two-world logic:
//   inn_not(X)   = ~X & N X
//   inn_imp(X,Y) = (X -> Y) & N (X & ~Y & N Y)
FormulaPtr inn_not(FormulaPtr f);
FormulaPtr inn_imp(FormulaPtr f, FormulaPtr g);

} // namespace cnaf
