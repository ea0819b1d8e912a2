#include "cnaf/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

// Index of each argument in declaration order, for canonical sorting.
std::map<std::string, std::size_t> decl_index(const std::vector<std::string>& args) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < args.size(); ++i) idx[args[i]] = i;
    return idx;
}

std::vector<std::string> canonical_names(std::vector<std::string> names,
                                         const std::map<std::string, std::size_t>& idx) {
    std::sort(names.begin(), names.end(),
              [&](const std::string& a, const std::string& b) {
                  return idx.at(a) < idx.at(b);
              });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

FormulaPtr atom(const std::string& a) { return mk_atom(a); }
FormulaPtr natom(const std::string& a) { return mk_sneg(mk_atom(a)); }

// ~x & ~Nx
FormulaPtr undecided(const std::string& x) {
    return mk_and(mk_not(atom(x)), mk_not(natom(x)));
}

void append_theta_n(Theory& t) {
    for (const auto& q : t.universe)
        t.formulas.push_back(mk_imp(natom(q), mk_not(atom(q))));
}

} // namespace

Theory theta_n(const std::vector<std::string>& universe) {
    Theory t;
    for (const auto& q : universe) t.declare(q);
    append_theta_n(t);
    return t;
}

Theory stable_axioms(const std::vector<std::string>& universe) {
    Theory t;
    for (const auto& q : universe) t.declare(q);
    for (const auto& q : universe)
        t.formulas.push_back(mk_or(atom(q), natom(q)));
    return t;
}

Theory delta_af(const Af& af) {
    auto idx = decl_index(af.arguments);
    Theory t;
    for (const auto& a : af.arguments) t.declare(a);

    std::map<std::string, std::vector<std::string>> attackers;
    for (const auto& a : af.arguments)
        attackers[a] = canonical_names(af.attackers_of(a), idx);

    for (const auto& a : af.arguments)
        if (attackers[a].empty()) t.formulas.push_back(atom(a));

    for (const auto& a : af.arguments) {
        const auto& zs = attackers[a];
        if (zs.empty()) continue;
        std::vector<FormulaPtr> snegs;
        for (const auto& z : zs) snegs.push_back(natom(z));
        t.formulas.push_back(mk_iff(atom(a), mk_and_all(snegs)));
    }

    for (const auto& a : af.arguments) {
        const auto& zs = attackers[a];
        if (zs.empty()) continue;
        std::vector<FormulaPtr> pos;
        for (const auto& z : zs) pos.push_back(atom(z));
        t.formulas.push_back(mk_imp(mk_or_all(pos), natom(a)));
    }

    for (const auto& a : af.arguments) {
        const auto& zs = attackers[a];
        if (zs.empty()) continue;
        std::vector<FormulaPtr> not_in, not_out;
        for (const auto& z : zs) {
            not_in.push_back(mk_not(atom(z)));
            not_out.push_back(mk_not(natom(z)));
        }
        t.formulas.push_back(mk_imp(
            mk_and(mk_and_all(not_in), mk_or_all(not_out)), undecided(a)));
    }

    append_theta_n(t);
    return t;
}

namespace {

// Attack groups on each argument, members and groups canonically ordered.
std::map<std::string, std::vector<std::vector<std::string>>>
joint_groups(const JointAf& jaf) {
    auto idx = decl_index(jaf.arguments);
    std::map<std::string, std::vector<std::vector<std::string>>> groups;
    for (const auto& a : jaf.attacks)
        groups[a.target].push_back(canonical_names(a.group, idx));
    for (auto& [target, gs] : groups) {
        std::sort(gs.begin(), gs.end(),
                  [&](const std::vector<std::string>& g1,
                      const std::vector<std::string>& g2) {
                      std::vector<std::size_t> i1, i2;
                      for (const auto& z : g1) i1.push_back(idx.at(z));
                      for (const auto& z : g2) i2.push_back(idx.at(z));
                      return i1 < i2;
                  });
        gs.erase(std::unique(gs.begin(), gs.end()), gs.end());
    }
    return groups;
}

} // namespace

Theory delta_joint(const JointAf& jaf) {
    Theory t;
    for (const auto& a : jaf.arguments) t.declare(a);
    auto groups = joint_groups(jaf);

    for (const auto& x : jaf.arguments)
        if (groups[x].empty()) t.formulas.push_back(atom(x));

    for (const auto& x : jaf.arguments) {
        const auto& gs = groups[x];
        if (gs.empty()) continue;
        std::vector<FormulaPtr> per_group;
        for (const auto& g : gs) {
            std::vector<FormulaPtr> snegs;
            for (const auto& z : g) snegs.push_back(natom(z));
            per_group.push_back(mk_or_all(snegs));
        }
        t.formulas.push_back(mk_iff(atom(x), mk_and_all(per_group)));
    }

    for (const auto& x : jaf.arguments) {
        const auto& gs = groups[x];
        if (gs.empty()) continue;
        std::vector<FormulaPtr> per_group;
        for (const auto& g : gs) {
            std::vector<FormulaPtr> pos;
            for (const auto& z : g) pos.push_back(atom(z));
            per_group.push_back(mk_and_all(pos));
        }
        t.formulas.push_back(mk_imp(mk_or_all(per_group), natom(x)));
    }

    for (const auto& x : jaf.arguments) {
        const auto& gs = groups[x];
        if (gs.empty()) continue;
        std::vector<FormulaPtr> some_not_in, all_in_or_und;
        for (const auto& g : gs) {
            std::vector<FormulaPtr> neg;
            for (const auto& z : g) neg.push_back(mk_not(atom(z)));
            some_not_in.push_back(mk_or_all(neg));
            if (g.size() == 1) {
                // A singleton group degenerates to the plain-attack form:
                // given ~z, (z | ~Nz) is ~Nz.
                all_in_or_und.push_back(mk_not(natom(g[0])));
            } else {
                std::vector<FormulaPtr> live;
                for (const auto& z : g)
                    live.push_back(mk_or(atom(z), mk_not(natom(z))));
                all_in_or_und.push_back(mk_and_all(live));
            }
        }
        t.formulas.push_back(mk_imp(
            mk_and(mk_and_all(some_not_in), mk_or_all(all_in_or_und)),
            undecided(x)));
    }

    append_theta_n(t);
    return t;
}

namespace {

struct IndirectAttack {
    std::string source;                  // z_j
    std::vector<std::string> co_targets; // u^j_k, may be empty
};

} // namespace

Theory delta_disjunctive(const DisjAf& daf) {
    auto idx = decl_index(daf.arguments);
    Theory t;
    for (const auto& a : daf.arguments) t.declare(a);

    std::map<std::string, std::vector<std::string>> direct;
    for (const auto& x : daf.arguments) {
        std::vector<std::string> ys;
        for (const auto& [src, tgt] : daf.direct_attacks)
            if (tgt == x) ys.push_back(src);
        direct[x] = canonical_names(std::move(ys), idx);
    }

    std::map<std::string, std::vector<IndirectAttack>> indirect;
    for (const auto& x : daf.arguments) {
        std::vector<IndirectAttack> as;
        for (const auto& d : daf.disj_attacks) {
            if (std::find(d.targets.begin(), d.targets.end(), x) == d.targets.end())
                continue;
            std::vector<std::string> co;
            for (const auto& u : d.targets)
                if (u != x) co.push_back(u);
            as.push_back({d.source, canonical_names(std::move(co), idx)});
        }
        std::sort(as.begin(), as.end(),
                  [&](const IndirectAttack& a, const IndirectAttack& b) {
                      if (idx.at(a.source) != idx.at(b.source))
                          return idx.at(a.source) < idx.at(b.source);
                      return a.co_targets < b.co_targets;
                  });
        as.erase(std::unique(as.begin(), as.end(),
                             [](const IndirectAttack& a, const IndirectAttack& b) {
                                 return a.source == b.source &&
                                        a.co_targets == b.co_targets;
                             }),
                 as.end());
        indirect[x] = std::move(as);
    }

    auto unattacked = [&](const std::string& x) {
        return direct[x].empty() && indirect[x].empty();
    };

    for (const auto& x : daf.arguments)
        if (unattacked(x)) t.formulas.push_back(atom(x));

    // in-formulas
    for (const auto& x : daf.arguments) {
        if (unattacked(x)) continue;
        std::vector<FormulaPtr> conj;
        for (const auto& y : direct[x]) conj.push_back(natom(y));
        for (const auto& ia : indirect[x]) {
            std::vector<FormulaPtr> outs;
            for (const auto& u : ia.co_targets) outs.push_back(natom(u));
            conj.push_back(mk_imp(atom(ia.source), mk_or_all(outs)));
        }
        t.formulas.push_back(mk_iff(atom(x), mk_and_all(conj)));
    }

    // out-formulas
    for (const auto& x : daf.arguments) {
        if (unattacked(x)) continue;
        std::vector<FormulaPtr> disj;
        for (const auto& y : direct[x]) disj.push_back(atom(y));
        for (const auto& ia : indirect[x]) {
            std::vector<FormulaPtr> parts{atom(ia.source)};
            for (const auto& u : ia.co_targets)
                parts.push_back(mk_not(natom(u)));
            disj.push_back(mk_and_all(parts));
        }
        t.formulas.push_back(mk_imp(mk_or_all(disj), natom(x)));
    }

    // und-formulas: every attack fails to succeed and some attack is
    // undecided, with attack statuses spelled per kind.
    for (const auto& x : daf.arguments) {
        if (unattacked(x)) continue;
        std::vector<FormulaPtr> not_successful, und_status;
        for (const auto& y : direct[x]) {
            not_successful.push_back(mk_not(atom(y)));
            und_status.push_back(mk_not(natom(y)));
        }
        for (const auto& ia : indirect[x]) {
            std::vector<FormulaPtr> succ{atom(ia.source)};
            for (const auto& u : ia.co_targets)
                succ.push_back(mk_not(natom(u)));
            not_successful.push_back(mk_not(mk_and_all(succ)));

            std::vector<FormulaPtr> st{mk_not(natom(ia.source))};
            for (const auto& u : ia.co_targets)
                st.push_back(mk_not(natom(u)));
            std::vector<FormulaPtr> unds{undecided(ia.source)};
            for (const auto& u : ia.co_targets) unds.push_back(undecided(u));
            st.push_back(mk_or_all(unds));
            und_status.push_back(mk_and_all(st));
        }
        t.formulas.push_back(mk_imp(
            mk_and(mk_and_all(not_successful), mk_or_all(und_status)),
            undecided(x)));
    }

    append_theta_n(t);
    return t;
}

Theory delta_adf(const AdfSpec& adf) {
    Theory t;
    for (const auto& a : adf.arguments) t.declare(a);
    for (const auto& a : adf.arguments)
        t.formulas.push_back(mk_iff(atom(a), adf.acceptance_of(a)));
    append_theta_n(t);
    return t;
}

Theory delta_bipolar(const BipolarAf& baf, BipolarVariant variant) {
    Af attack_part{baf.arguments, baf.attacks};
    Theory t = delta_af(attack_part);
    // Support clauses go between the attack clauses and theta_n.
    std::vector<FormulaPtr> thetas(t.formulas.end() - baf.arguments.size(),
                                   t.formulas.end());
    t.formulas.resize(t.formulas.size() - baf.arguments.size());
    for (const auto& [x, y] : baf.supports) {
        if (variant == BipolarVariant::Tau1)
            t.formulas.push_back(mk_imp(atom(x), atom(y)));
        else
            t.formulas.push_back(mk_imp(atom(x), mk_not(natom(y))));
    }
    for (auto& f : thetas) t.formulas.push_back(std::move(f));
    return t;
}

Theory delta_higher_direct(const HigherAf& haf) {
    if (haf.depth() > 2)
        throw DomainError("delta_higher_direct handles at most two levels");
    auto idx = decl_index(haf.arguments);
    Theory t;
    for (const auto& a : haf.arguments) t.declare(a);

    // Level-1 arcs per target argument, canonical source order.
    std::map<std::string, std::vector<const HigherAttack*>> arcs;
    for (const auto& x : haf.arguments) {
        std::vector<const HigherAttack*> on_x;
        for (const auto& a : haf.attacks)
            if (a.target == x) on_x.push_back(&a);
        std::sort(on_x.begin(), on_x.end(),
                  [&](const HigherAttack* a, const HigherAttack* b) {
                      if (idx.at(a->source) != idx.at(b->source))
                          return idx.at(a->source) < idx.at(b->source);
                      return a->id < b->id;
                  });
        arcs[x] = std::move(on_x);
    }

    auto arc_attackers = [&](const HigherAttack* arc) {
        std::vector<std::string> ys;
        for (const auto& a : haf.attacks)
            if (a.target == arc->id) ys.push_back(a.source);
        return canonical_names(std::move(ys), idx);
    };

    // live(arc) = z & /\ Ny, dead(arc) = Nz | \/ y.
    auto live = [&](const HigherAttack* arc) {
        std::vector<FormulaPtr> parts{atom(arc->source)};
        for (const auto& y : arc_attackers(arc)) parts.push_back(natom(y));
        return mk_and_all(parts);
    };
    auto dead = [&](const HigherAttack* arc) {
        std::vector<FormulaPtr> parts{natom(arc->source)};
        for (const auto& y : arc_attackers(arc)) parts.push_back(atom(y));
        return mk_or_all(parts);
    };

    for (const auto& x : haf.arguments)
        if (arcs[x].empty()) t.formulas.push_back(atom(x));

    for (const auto& x : haf.arguments) {
        if (arcs[x].empty()) continue;
        std::vector<FormulaPtr> deads;
        for (const auto* arc : arcs[x]) deads.push_back(dead(arc));
        t.formulas.push_back(mk_iff(atom(x), mk_and_all(deads)));
    }

    for (const auto& x : haf.arguments) {
        if (arcs[x].empty()) continue;
        std::vector<FormulaPtr> lives;
        for (const auto* arc : arcs[x]) lives.push_back(live(arc));
        t.formulas.push_back(mk_imp(mk_or_all(lives), natom(x)));
    }

    for (const auto& x : haf.arguments) {
        if (arcs[x].empty()) continue;
        std::vector<FormulaPtr> not_live, not_dead;
        for (const auto* arc : arcs[x]) {
            not_live.push_back(mk_not(live(arc)));
            not_dead.push_back(mk_not(dead(arc)));
        }
        t.formulas.push_back(mk_imp(
            mk_and(mk_and_all(not_live), mk_or_all(not_dead)), undecided(x)));
    }

    append_theta_n(t);
    return t;
}

} // namespace cnaf
