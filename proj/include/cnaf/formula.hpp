#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cnaf {

// Propositional connectives plus the strong-negation connective SNeg (written
// `N` in the concrete syntax) and the world-1 constant (written `@1`).
enum class Op {
    Top,
    Bottom,
    World1,
    Atom,
    Not,
    SNeg,
    And,
    Or,
    Imp,
    Iff,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula node. Subtrees may be shared; never mutated after
// construction, so formulas are safe to use from any number of threads.
class Formula {
public:
    Op op;
    std::string name;   // Op::Atom only
    FormulaPtr lhs;     // unary ops keep their child here
    FormulaPtr rhs;

    Formula(Op o, std::string n, FormulaPtr l, FormulaPtr r)
        : op(o), name(std::move(n)), lhs(std::move(l)), rhs(std::move(r)) {}
};

// Factories. mk_atom validates the name: identifiers over [A-Za-z0-9_],
// first char alphabetic, and not one of the reserved words T, F, N.
FormulaPtr mk_top();
FormulaPtr mk_bottom();
FormulaPtr mk_world1();
FormulaPtr mk_atom(std::string name);
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_sneg(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_or(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_imp(FormulaPtr l, FormulaPtr r);
FormulaPtr mk_iff(FormulaPtr l, FormulaPtr r);

// Folds. The empty conjunction is Top, the empty disjunction is Bottom, and
// a one-element fold is the element itself.
FormulaPtr mk_and_all(const std::vector<FormulaPtr>& fs);
FormulaPtr mk_or_all(const std::vector<FormulaPtr>& fs);

bool is_valid_atom_name(std::string_view name);

// Structural equality of ASTs.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Canonical printer: fully parenthesized, `~` for Not, `N ` for SNeg,
// `@1` for the world-1 constant. parse(print(f)) == f for every formula.
std::string print(const FormulaPtr& f);

// Parses the formula grammar. Precedence N,~ > & > | > -> > <->, with ->
// and <-> right-associative. Throws ParseError with a byte offset.
FormulaPtr parse_formula(std::string_view text);

// Atom names in first-occurrence order.
std::vector<std::string> atoms_of(const FormulaPtr& f);

// CN-flat: every SNeg node is applied directly to an atom.
bool is_cn_flat(const FormulaPtr& f);
bool contains_world1(const FormulaPtr& f);
bool contains_iff(const FormulaPtr& f);

// Expands every Iff node into (A -> B) & (B -> A).
FormulaPtr expand_iff(const FormulaPtr& f);

// Pushes strong negation down to atoms: NN A => A, N(A&B) => NA|NB,
// N(A|B) => NA&NB, N~A => ~NA, N(A->B) => ~NA&NB, NT => F, NF => T,
// N@1 => @1. Iff nodes are expanded first. The result is CN-flat and agrees
// with the input at both worlds of every two-world model.
FormulaPtr normalize_n(const FormulaPtr& f);

} // namespace cnaf
