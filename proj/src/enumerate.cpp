#include "cnaf/enumerate.hpp"

#include <algorithm>
#include <map>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

// Formula compiled against a universe index, so the scan loop does no
// string lookups. Unary ops keep their child in `l`.
struct Node {
    Op op;
    int atom = -1;
    int l = -1;
    int r = -1;
};

struct Compiled {
    std::vector<Node> nodes;
    std::vector<int> roots; // one per theory formula
    std::size_t n_atoms = 0;
};

int compile_rec(const FormulaPtr& f, const std::map<std::string, int>& index,
                std::vector<Node>& nodes) {
    Node node;
    node.op = f->op;
    switch (f->op) {
    case Op::Top:
    case Op::Bottom:
        break;
    case Op::World1:
        throw DomainError("theory contains @1; CN models are two-valued");
    case Op::Atom: {
        auto it = index.find(f->name);
        if (it == index.end())
            throw DomainError("atom '" + f->name + "' missing from universe");
        node.atom = it->second;
        break;
    }
    case Op::SNeg:
        if (f->lhs->op != Op::Atom)
            throw DomainError("theory is not CN-flat: N applied to a compound");
        node.atom = index.at(f->lhs->name);
        break;
    case Op::Not:
        node.l = compile_rec(f->lhs, index, nodes);
        break;
    default:
        node.l = compile_rec(f->lhs, index, nodes);
        node.r = compile_rec(f->rhs, index, nodes);
        break;
    }
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
}

Compiled compile(const Theory& t) {
    Compiled c;
    c.n_atoms = t.universe.size();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < t.universe.size(); ++i)
        index[t.universe[i]] = static_cast<int>(i);
    for (const auto& f : t.formulas)
        c.roots.push_back(compile_rec(f, index, c.nodes));
    return c;
}

bool eval_node(const Compiled& c, int at, const Label* states) {
    const Node& n = c.nodes[at];
    switch (n.op) {
    case Op::Top: return true;
    case Op::Bottom: return false;
    case Op::Atom: return states[n.atom] == Label::In;
    case Op::SNeg: return states[n.atom] == Label::Out;
    case Op::Not: return !eval_node(c, n.l, states);
    case Op::And: return eval_node(c, n.l, states) && eval_node(c, n.r, states);
    case Op::Or: return eval_node(c, n.l, states) || eval_node(c, n.r, states);
    case Op::Imp: return !eval_node(c, n.l, states) || eval_node(c, n.r, states);
    case Op::Iff: return eval_node(c, n.l, states) == eval_node(c, n.r, states);
    default: return false;
    }
}

bool satisfies_all(const Compiled& c, const Label* states) {
    for (int root : c.roots)
        if (!eval_node(c, root, states)) return false;
    return true;
}

const Label kLabelOrder[3] = {Label::In, Label::Out, Label::Und};

// Per-atom candidate states after unit pruning, each kept in In<Out<Und
// order so the reduced scan stays lexicographic.
using Domains = std::vector<std::vector<Label>>;

void restrict_domain(std::vector<Label>& dom, bool keep_in, bool keep_out,
                     bool keep_und) {
    std::vector<Label> next;
    for (Label l : dom) {
        if ((l == Label::In && keep_in) || (l == Label::Out && keep_out) ||
            (l == Label::Und && keep_und))
            next.push_back(l);
    }
    dom = next;
}

// Narrows domains from formulas that are conjunctions of literals: an atom
// forces In, N q forces Out, ~q excludes In, ~N q excludes Out. Semantics is
// unchanged: excluded states falsify the unit formula anyway.
void prune_units(const FormulaPtr& f, const std::map<std::string, int>& index,
                 Domains& doms) {
    switch (f->op) {
    case Op::Atom:
        restrict_domain(doms[index.at(f->name)], true, false, false);
        return;
    case Op::SNeg:
        restrict_domain(doms[index.at(f->lhs->name)], false, true, false);
        return;
    case Op::Not:
        if (f->lhs->op == Op::Atom) {
            restrict_domain(doms[index.at(f->lhs->name)], false, true, true);
        } else if (f->lhs->op == Op::SNeg) {
            restrict_domain(doms[index.at(f->lhs->lhs->name)], true, false, true);
        }
        return;
    case Op::And:
        prune_units(f->lhs, index, doms);
        prune_units(f->rhs, index, doms);
        return;
    default:
        return;
    }
}

void decode(std::uint64_t index, const Domains& doms, std::vector<Label>& out) {
    for (std::size_t i = doms.size(); i-- > 0;) {
        std::size_t k = doms[i].size();
        out[i] = doms[i][index % k];
        index /= k;
    }
}

std::vector<CnModel> to_models(const std::vector<std::uint64_t>& hits,
                               const Domains& doms, const Theory& t) {
    std::vector<CnModel> models;
    models.reserve(hits.size());
    std::vector<Label> states(doms.size());
    for (std::uint64_t h : hits) {
        decode(h, doms, states);
        CnModel m;
        for (std::size_t i = 0; i < t.universe.size(); ++i)
            m.states[t.universe[i]] = states[i];
        models.push_back(std::move(m));
    }
    return models;
}

Domains full_domains(std::size_t n) {
    return Domains(n, {kLabelOrder[0], kLabelOrder[1], kLabelOrder[2]});
}

void check_cap(const Theory& t, const EnumerateOptions& opts) {
    if (t.universe.size() > opts.max_atoms)
        throw SizeCapError("model enumeration", t.universe.size(), opts.max_atoms);
}

std::vector<std::uint64_t> scan_serial(const Compiled& c, const Domains& doms) {
    std::uint64_t total = 1;
    for (const auto& d : doms) {
        if (d.empty()) return {};
        total *= d.size();
    }
    std::vector<std::uint64_t> hits;
    std::vector<Label> states(doms.size());
    for (std::uint64_t i = 0; i < total; ++i) {
        decode(i, doms, states);
        if (satisfies_all(c, states.data())) hits.push_back(i);
    }
    return hits;
}

std::vector<std::uint64_t> scan_parallel(const Compiled& c, const Domains& doms) {
    std::uint64_t total = 1;
    for (const auto& d : doms) {
        if (d.empty()) return {};
        total *= d.size();
    }
    std::vector<std::uint64_t> hits;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        std::vector<Label> states(doms.size());
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            decode(static_cast<std::uint64_t>(i), doms, states);
            if (satisfies_all(c, states.data()))
                local.push_back(static_cast<std::uint64_t>(i));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace

std::vector<CnModel> enumerate_models_serial(const Theory& t,
                                             EnumerateOptions opts) {
    check_cap(t, opts);
    Compiled c = compile(t);
    Domains doms = full_domains(t.universe.size());
    return to_models(scan_serial(c, doms), doms, t);
}

std::vector<CnModel> enumerate_models(const Theory& t, EnumerateOptions opts) {
    check_cap(t, opts);
    Compiled c = compile(t);
    Domains doms = full_domains(t.universe.size());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < t.universe.size(); ++i)
        index[t.universe[i]] = static_cast<int>(i);
    for (const auto& f : t.formulas) prune_units(f, index, doms);
    auto hits = opts.parallel ? scan_parallel(c, doms) : scan_serial(c, doms);
    return to_models(hits, doms, t);
}

bool is_model(const Theory& t, const CnModel& m) {
    for (const auto& atom : t.universe)
        if (m.states.find(atom) == m.states.end())
            throw DomainError("model missing universe atom '" + atom + "'");
    for (const auto& f : t.formulas)
        if (!evaluate_cn(f, m)) return false;
    return true;
}

bool entails(const Theory& t, const FormulaPtr& f, EnumerateOptions opts) {
    Theory extended = t;
    for (const auto& a : atoms_of(f)) extended.declare(a);
    for (const auto& m : enumerate_models(extended, opts))
        if (!evaluate_cn(f, m)) return false;
    return true;
}

std::set<std::string> grounded_by_entailment(const Theory& t,
                                             EnumerateOptions opts) {
    std::vector<CnModel> models = enumerate_models(t, opts);
    if (models.empty())
        throw DomainError("grounded_by_entailment: theory is inconsistent");
    std::set<std::string> out;
    for (const auto& atom : t.universe) {
        bool everywhere = true;
        for (const auto& m : models) {
            if (!m.holds_atom(atom)) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) out.insert(atom);
    }
    return out;
}

} // namespace cnaf
