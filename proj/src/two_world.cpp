#include "cnaf/two_world.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cnaf/errors.hpp"

namespace cnaf {

bool TwoWorldModel::at(const std::string& atom, int world) const {
    auto it = valuation.find(atom);
    if (it == valuation.end())
        throw DomainError("atom '" + atom + "' not in two-world model");
    return world == 1 ? it->second.first : it->second.second;
}

bool eval_world(const FormulaPtr& f, const TwoWorldModel& m, int world) {
    switch (f->op) {
    case Op::Top: return true;
    case Op::Bottom: return false;
    case Op::World1: return world == 1;
    case Op::Atom: return m.at(f->name, world);
    case Op::Not: return !eval_world(f->lhs, m, world);
    case Op::SNeg: return !eval_world(f->lhs, m, world == 1 ? 2 : 1);
    case Op::And: return eval_world(f->lhs, m, world) && eval_world(f->rhs, m, world);
    case Op::Or: return eval_world(f->lhs, m, world) || eval_world(f->rhs, m, world);
    case Op::Imp: return !eval_world(f->lhs, m, world) || eval_world(f->rhs, m, world);
    case Op::Iff: return eval_world(f->lhs, m, world) == eval_world(f->rhs, m, world);
    }
    return false;
}

namespace {

// Persistent per-atom states in lexicographic order.
const std::pair<bool, bool> kStates[3] = {{false, false}, {false, true}, {true, true}};

std::uint64_t ipow3(std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= 3;
    return r;
}

TwoWorldModel decode(std::uint64_t index, const std::vector<std::string>& atoms) {
    TwoWorldModel m;
    for (std::size_t i = atoms.size(); i-- > 0;) {
        m.valuation[atoms[i]] = kStates[index % 3];
        index /= 3;
    }
    return m;
}

// Index of the least valuation falsifying f at some requested world, or
// total if none. `world_out` reports the failing world.
std::uint64_t least_failure(const FormulaPtr& f, ValidityMode mode,
                            const TwoWorldOptions& opts, int* world_out) {
    std::vector<std::string> atoms = atoms_of(f);
    if (atoms.size() > opts.max_atoms)
        throw SizeCapError("two-world validity check", atoms.size(), opts.max_atoms);
    std::uint64_t total = ipow3(atoms.size());
    std::uint64_t best = total;
    int best_world = 0;

    auto check = [&](std::uint64_t i, int* world) {
        TwoWorldModel m = decode(i, atoms);
        if (!eval_world(f, m, 1)) {
            *world = 1;
            return true;
        }
        if (mode == ValidityMode::Both && !eval_world(f, m, 2)) {
            *world = 2;
            return true;
        }
        return false;
    };

    if (opts.parallel) {
#pragma omp parallel
        {
            std::uint64_t local_best = total;
            int local_world = 0;
#pragma omp for schedule(static) nowait
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
                if (static_cast<std::uint64_t>(i) >= local_best) continue;
                int w;
                if (check(static_cast<std::uint64_t>(i), &w)) {
                    local_best = static_cast<std::uint64_t>(i);
                    local_world = w;
                }
            }
#pragma omp critical
            {
                if (local_best < best) {
                    best = local_best;
                    best_world = local_world;
                }
            }
        }
    } else {
        for (std::uint64_t i = 0; i < total; ++i) {
            int w;
            if (check(i, &w)) {
                best = i;
                best_world = w;
                break;
            }
        }
    }
    if (world_out) *world_out = best_world;
    return best;
}

} // namespace

bool is_valid(const FormulaPtr& f, ValidityMode mode, TwoWorldOptions opts) {
    std::vector<std::string> atoms = atoms_of(f);
    return least_failure(f, mode, opts, nullptr) == ipow3(atoms.size());
}

std::optional<Countermodel> find_countermodel(const FormulaPtr& f, ValidityMode mode,
                                              TwoWorldOptions opts) {
    std::vector<std::string> atoms = atoms_of(f);
    int world = 0;
    std::uint64_t i = least_failure(f, mode, opts, &world);
    if (i == ipow3(atoms.size())) return std::nullopt;
    return Countermodel{decode(i, atoms), world};
}

TwoWorldModel cn_to_two_world(const CnModel& m) {
    TwoWorldModel out;
    for (const auto& [atom, state] : m.states) {
        switch (state) {
        case Label::In: out.valuation[atom] = {true, true}; break;
        case Label::Out: out.valuation[atom] = {false, false}; break;
        case Label::Und: out.valuation[atom] = {false, true}; break;
        }
    }
    return out;
}

CnModel two_world_to_cn(const TwoWorldModel& m) {
    CnModel out;
    for (const auto& [atom, v] : m.valuation) {
        if (v.first && v.second) out.states[atom] = Label::In;
        else if (!v.first && !v.second) out.states[atom] = Label::Out;
        else if (!v.first && v.second) out.states[atom] = Label::Und;
        else throw DomainError("valuation of '" + atom + "' is not persistent");
    }
    return out;
}

FormulaPtr inn_not(FormulaPtr f) {
    return mk_and(mk_not(f), mk_sneg(f));
}

FormulaPtr inn_imp(FormulaPtr f, FormulaPtr g) {
    return mk_and(mk_imp(f, g), mk_sneg(mk_and(f, mk_and(mk_not(g), mk_sneg(g)))));
}

} // namespace cnaf
