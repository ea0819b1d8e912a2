#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cnaf/formula.hpp"

namespace cnaf {

// Plain argumentation network (S, R).
struct Af {
    std::vector<std::string> arguments;               // S, declaration order
    std::vector<std::pair<std::string, std::string>> attacks; // R

    std::vector<std::string> attackers_of(const std::string& arg) const;
    bool has_argument(const std::string& arg) const;
};

// Joint attacks: non-empty groups attacking single arguments.
struct JointAttack {
    std::vector<std::string> group; // G, declaration order of members
    std::string target;
};

struct JointAf {
    std::vector<std::string> arguments;
    std::vector<JointAttack> attacks; // R0

    std::vector<const JointAttack*> attacks_on(const std::string& arg) const;
    bool has_argument(const std::string& arg) const;
};

// Higher-level attacks: every attack carries a unique id and may itself be
// a target. Level 1 attacks target arguments; level i+1 attacks target
// level-i attack ids.
struct HigherAttack {
    std::string id;
    std::string source; // always an argument
    std::string target; // argument name or attack id
};

struct HigherAf {
    std::vector<std::string> arguments;
    std::vector<HigherAttack> attacks;

    const HigherAttack* find_attack(const std::string& id) const;
    bool has_argument(const std::string& arg) const;
    // 1 for attacks on arguments, 1 + level(target) otherwise.
    // Throws DomainError on dangling or cyclic id references.
    int level_of(const HigherAttack& a) const;
    int depth() const; // max level, 0 when there are no attacks
};

// Disjunctive attacks: single arguments attacking non-empty argument sets,
// alongside ordinary direct attacks.
struct DisjAttack {
    std::string source;
    std::vector<std::string> targets; // attacked set, non-empty
};

struct DisjAf {
    std::vector<std::string> arguments;
    std::vector<std::pair<std::string, std::string>> direct_attacks; // R
    std::vector<DisjAttack> disj_attacks;                            // rho

    bool has_argument(const std::string& arg) const;
};

struct BipolarAf {
    std::vector<std::string> arguments;
    std::vector<std::pair<std::string, std::string>> attacks;  // Ra
    std::vector<std::pair<std::string, std::string>> supports; // Rs

    bool has_argument(const std::string& arg) const;
};

// Per-argument classical acceptance formulas over S.
struct AdfSpec {
    std::vector<std::string> arguments;
    std::vector<std::pair<std::string, FormulaPtr>> acceptance; // arg -> phi

    bool has_argument(const std::string& arg) const;
    FormulaPtr acceptance_of(const std::string& arg) const;
};

using Framework = std::variant<Af, JointAf, HigherAf, DisjAf, BipolarAf, AdfSpec>;

// Checks the type invariants; the empty list means the framework is valid.
std::vector<std::string> validate(const Af& af);
std::vector<std::string> validate(const JointAf& jaf);
std::vector<std::string> validate(const HigherAf& haf);
std::vector<std::string> validate(const DisjAf& daf);
std::vector<std::string> validate(const BipolarAf& baf);
std::vector<std::string> validate(const AdfSpec& adf);
std::vector<std::string> validate(const Framework& fw);

const std::vector<std::string>& arguments_of(const Framework& fw);

} // namespace cnaf
