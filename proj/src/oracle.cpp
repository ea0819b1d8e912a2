#include "cnaf/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

const Label kOrder[3] = {Label::In, Label::Out, Label::Und};

void check_cap(std::size_t n, const OracleOptions& opts, const char* what) {
    if (n > opts.max_args) throw SizeCapError(what, n, opts.max_args);
}

std::uint64_t ipow3(std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= 3;
    return r;
}

void decode3(std::uint64_t index, std::size_t n, std::vector<Label>& out) {
    for (std::size_t i = n; i-- > 0;) {
        out[i] = kOrder[index % 3];
        index /= 3;
    }
}

Labelling to_labelling(const std::vector<std::string>& args,
                       const std::vector<Label>& states) {
    Labelling l;
    for (std::size_t i = 0; i < args.size(); ++i) l.labels[args[i]] = states[i];
    return l;
}

// Generic 3^n scan. `ok` checks a candidate state vector.
template <typename Check>
std::vector<std::uint64_t> scan3_serial(std::size_t n, Check ok) {
    std::vector<std::uint64_t> hits;
    std::vector<Label> states(n);
    std::uint64_t total = ipow3(n);
    for (std::uint64_t i = 0; i < total; ++i) {
        decode3(i, n, states);
        if (ok(states)) hits.push_back(i);
    }
    return hits;
}

template <typename Check>
std::vector<std::uint64_t> scan3_parallel(std::size_t n, Check ok) {
    std::vector<std::uint64_t> hits;
    std::uint64_t total = ipow3(n);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        std::vector<Label> states(n);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
            decode3(static_cast<std::uint64_t>(i), n, states);
            if (ok(states)) local.push_back(static_cast<std::uint64_t>(i));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

template <typename Check>
std::vector<Labelling> scan3(const std::vector<std::string>& args, Check ok,
                             bool parallel) {
    auto hits = parallel ? scan3_parallel(args.size(), ok)
                         : scan3_serial(args.size(), ok);
    std::vector<Labelling> out;
    out.reserve(hits.size());
    std::vector<Label> states(args.size());
    for (std::uint64_t h : hits) {
        decode3(h, args.size(), states);
        out.push_back(to_labelling(args, states));
    }
    return out;
}

// Attacker index lists for a plain network.
std::vector<std::vector<int>> attacker_table(const Af& af) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < af.arguments.size(); ++i)
        idx[af.arguments[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> att(af.arguments.size());
    for (const auto& [src, tgt] : af.attacks) {
        auto& v = att[idx.at(tgt)];
        int s = idx.at(src);
        if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
    }
    return att;
}

// The three legitimacy conditions at a single argument given attacker labels.
bool legitimate_at(Label lab, const std::vector<int>& attackers,
                   const std::vector<Label>& states) {
    bool all_out = true, some_in = false, some_und = false;
    for (int a : attackers) {
        if (states[a] != Label::Out) all_out = false;
        if (states[a] == Label::In) some_in = true;
        if (states[a] == Label::Und) some_und = true;
    }
    switch (lab) {
    case Label::In: return all_out;
    case Label::Out: return some_in;
    case Label::Und: return !some_in && some_und;
    }
    return false;
}

// The label forced by the attacker labels (total: exactly one condition
// holds once all attackers are decided).
Label forced_label(const std::vector<int>& attackers,
                   const std::vector<Label>& states) {
    bool all_out = true, some_in = false;
    for (int a : attackers) {
        if (states[a] != Label::Out) all_out = false;
        if (states[a] == Label::In) some_in = true;
    }
    if (all_out) return Label::In;
    if (some_in) return Label::Out;
    return Label::Und;
}

} // namespace

std::vector<Labelling> complete_labellings_serial(const Af& af, OracleOptions opts) {
    check_cap(af.arguments.size(), opts, "complete labelling enumeration");
    auto att = attacker_table(af);
    auto ok = [&](const std::vector<Label>& states) {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (!legitimate_at(states[i], att[i], states)) return false;
        return true;
    };
    return scan3(af.arguments, ok, false);
}

std::vector<Labelling> complete_labellings_scan(const Af& af, OracleOptions opts) {
    check_cap(af.arguments.size(), opts, "complete labelling enumeration");
    auto att = attacker_table(af);
    auto ok = [&](const std::vector<Label>& states) {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (!legitimate_at(states[i], att[i], states)) return false;
        return true;
    };
    return scan3(af.arguments, ok, opts.parallel);
}

namespace {

constexpr Label kUnset = static_cast<Label>(3);

struct Backtracker {
    const std::vector<std::vector<int>>& att;
    std::size_t n;
    std::vector<Label> states;
    std::vector<Labelling>* out;
    const std::vector<std::string>* args;

    bool decided(int i) const { return states[i] != kUnset; }

    bool attackers_decided(int i) const {
        for (int a : att[i])
            if (!decided(a)) return false;
        return true;
    }

    // Assigns every argument whose label is forced; returns false on a
    // contradiction with an earlier assignment. `trail` records changes.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (decided(static_cast<int>(i)) || !attackers_decided(static_cast<int>(i)))
                    continue;
                states[i] = forced_label(att[i], states);
                trail.push_back(static_cast<int>(i));
                changed = true;
            }
        }
        // Check every decided argument whose attackers are all decided.
        for (std::size_t i = 0; i < n; ++i) {
            if (!decided(static_cast<int>(i)) || !attackers_decided(static_cast<int>(i)))
                continue;
            if (!legitimate_at(states[i], att[i], states)) return false;
        }
        return true;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            states[trail.back()] = kUnset;
            trail.pop_back();
        }
    }

    void search(std::vector<int>& trail) {
        std::size_t mark = trail.size();
        if (!propagate(trail)) {
            undo(trail, mark);
            return;
        }
        int branch = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!decided(static_cast<int>(i))) {
                branch = static_cast<int>(i);
                break;
            }
        }
        if (branch < 0) {
            out->push_back(to_labelling(*args, states));
            undo(trail, mark);
            return;
        }
        for (Label l : kOrder) {
            states[branch] = l;
            trail.push_back(branch);
            search(trail);
            states[branch] = kUnset;
            trail.pop_back();
        }
        undo(trail, mark);
    }
};

} // namespace

std::vector<Labelling> complete_labellings(const Af& af, OracleOptions opts) {
    check_cap(af.arguments.size(), opts, "complete labelling enumeration");
    auto att = attacker_table(af);
    std::vector<Labelling> out;
    Backtracker bt{att, af.arguments.size(),
                   std::vector<Label>(af.arguments.size(), kUnset), &out,
                   &af.arguments};
    std::vector<int> trail;
    bt.search(trail);
    std::sort(out.begin(), out.end(), [&](const Labelling& a, const Labelling& b) {
        for (const auto& arg : af.arguments) {
            int ra = label_rank(a.at(arg)), rb = label_rank(b.at(arg));
            if (ra != rb) return ra < rb;
        }
        return false;
    });
    return out;
}

Labelling grounded_fixpoint(const Af& af) {
    auto att = attacker_table(af);
    std::size_t n = af.arguments.size();
    std::vector<Label> states(n, kUnset);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (states[i] != kUnset) continue;
            bool all_out = true, some_in = false;
            for (int a : att[i]) {
                if (states[a] != Label::Out) all_out = false;
                if (states[a] == Label::In) some_in = true;
            }
            if (all_out) {
                states[i] = Label::In;
                changed = true;
            } else if (some_in) {
                states[i] = Label::Out;
                changed = true;
            }
        }
    }
    for (auto& s : states)
        if (s == kUnset) s = Label::Und;
    return to_labelling(af.arguments, states);
}

std::vector<Labelling> stable_labellings(const Af& af, OracleOptions opts) {
    std::vector<Labelling> out;
    for (auto& l : complete_labellings(af, opts)) {
        bool has_und = false;
        for (const auto& [arg, lab] : l.labels)
            if (lab == Label::Und) has_und = true;
        if (!has_und) out.push_back(std::move(l));
    }
    return out;
}

std::vector<Labelling> preferred_labellings(const Af& af, OracleOptions opts) {
    std::vector<Labelling> all = complete_labellings(af, opts);
    std::vector<Labelling> out;
    for (const auto& l : all) {
        auto in_l = l.in_set();
        bool maximal = true;
        for (const auto& other : all) {
            auto in_o = other.in_set();
            if (in_o != in_l &&
                std::includes(in_o.begin(), in_o.end(), in_l.begin(), in_l.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(l);
    }
    return out;
}

namespace {

struct JointTable {
    // Per argument: list of attacking groups as index lists.
    std::vector<std::vector<std::vector<int>>> groups;
};

JointTable joint_table(const JointAf& jaf) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < jaf.arguments.size(); ++i)
        idx[jaf.arguments[i]] = static_cast<int>(i);
    JointTable t;
    t.groups.resize(jaf.arguments.size());
    for (const auto& a : jaf.attacks) {
        std::vector<int> g;
        for (const auto& z : a.group) g.push_back(idx.at(z));
        t.groups[idx.at(a.target)].push_back(std::move(g));
    }
    return t;
}

// CG1-CG3 at one argument.
bool cg_legitimate_at(Label lab, const std::vector<std::vector<int>>& groups,
                      const std::vector<Label>& states) {
    bool every_group_has_out = true;   // CG1 (vacuous when unattacked)
    bool some_group_all_in = false;    // CG2
    bool every_group_has_not_in = true;
    bool some_group_in_or_und = false; // CG3 witness
    for (const auto& g : groups) {
        bool has_out = false, all_in = true, has_not_in = false, all_in_or_und = true;
        for (int z : g) {
            if (states[z] == Label::Out) has_out = true;
            if (states[z] != Label::In) {
                all_in = false;
                has_not_in = true;
            }
            if (states[z] == Label::Out) all_in_or_und = false;
        }
        if (!has_out) every_group_has_out = false;
        if (all_in) some_group_all_in = true;
        if (!has_not_in) every_group_has_not_in = false;
        if (all_in_or_und) some_group_in_or_und = true;
    }
    switch (lab) {
    case Label::In:
        return every_group_has_out;
    case Label::Out:
        return some_group_all_in;
    case Label::Und:
        return every_group_has_not_in && some_group_in_or_und;
    }
    return false;
}

} // namespace

std::vector<Labelling> joint_labellings(const JointAf& jaf, OracleOptions opts) {
    check_cap(jaf.arguments.size(), opts, "joint labelling enumeration");
    JointTable t = joint_table(jaf);
    auto ok = [&](const std::vector<Label>& states) {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (!cg_legitimate_at(states[i], t.groups[i], states)) return false;
        return true;
    };
    return scan3(jaf.arguments, ok, opts.parallel);
}

std::vector<Labelling> joint_labellings_serial(const JointAf& jaf, OracleOptions opts) {
    OracleOptions o = opts;
    o.parallel = false;
    return joint_labellings(jaf, o);
}

namespace {

struct DisjTable {
    // Per argument: direct attacker indices and indirect attacks
    // (source index, co-target indices).
    std::vector<std::vector<int>> direct;
    std::vector<std::vector<std::pair<int, std::vector<int>>>> indirect;
};

DisjTable disj_table(const DisjAf& daf) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < daf.arguments.size(); ++i)
        idx[daf.arguments[i]] = static_cast<int>(i);
    DisjTable t;
    t.direct.resize(daf.arguments.size());
    t.indirect.resize(daf.arguments.size());
    for (const auto& [src, tgt] : daf.direct_attacks)
        t.direct[idx.at(tgt)].push_back(idx.at(src));
    for (const auto& d : daf.disj_attacks) {
        for (const auto& x : d.targets) {
            std::vector<int> co;
            for (const auto& u : d.targets)
                if (u != x) co.push_back(idx.at(u));
            t.indirect[idx.at(x)].emplace_back(idx.at(d.source), std::move(co));
        }
    }
    return t;
}

// D1-D3 at one argument. D1 and D2 are implications; D3 is an iff over
// per-attack statuses (out / undecided / successful).
bool d_legitimate_at(std::size_t i, Label lab, const DisjTable& t,
                     const std::vector<Label>& states) {
    const auto& ys = t.direct[i];
    const auto& zs = t.indirect[i];

    // D1 condition: every direct attacker out; every in indirect source has
    // an out co-target.
    bool d1 = true;
    for (int y : ys)
        if (states[y] != Label::Out) d1 = false;
    for (const auto& [z, co] : zs) {
        if (states[z] == Label::In) {
            bool some_co_out = false;
            for (int u : co)
                if (states[u] == Label::Out) some_co_out = true;
            if (!some_co_out) d1 = false;
        }
    }

    // D2 condition: some direct attacker in, or some indirect source in with
    // no co-target out.
    bool d2 = false;
    for (int y : ys)
        if (states[y] == Label::In) d2 = true;
    for (const auto& [z, co] : zs) {
        if (states[z] != Label::In) continue;
        bool some_co_out = false;
        for (int u : co)
            if (states[u] == Label::Out) some_co_out = true;
        if (!some_co_out) d2 = true;
    }

    // D3 condition over attack statuses. The three statuses are made
    // mutually exclusive: a successful attack (source in, no co-target out)
    // is not counted as undecided even when a co-target is undecided.
    bool has_attack = !ys.empty() || !zs.empty();
    bool all_out_or_und = true, some_und = false;
    for (int y : ys) {
        bool att_out = states[y] == Label::Out;
        bool att_und = states[y] == Label::Und;
        if (!att_out && !att_und) all_out_or_und = false;
        if (att_und) some_und = true;
    }
    for (const auto& [z, co] : zs) {
        bool att_out = states[z] == Label::Out;
        for (int u : co)
            if (states[u] == Label::Out) att_out = true;
        bool successful = states[z] == Label::In && !att_out;
        bool any_und = states[z] == Label::Und;
        for (int u : co)
            if (states[u] == Label::Und) any_und = true;
        bool att_und = !att_out && !successful && any_und;
        if (!att_out && !att_und) all_out_or_und = false;
        if (att_und) some_und = true;
    }
    bool d3 = has_attack && all_out_or_und && some_und;

    if (d1 && lab != Label::In) return false;
    if (d2 && lab != Label::Out) return false;
    return (lab == Label::Und) == d3;
}

} // namespace

std::vector<Labelling> disjunctive_labellings(const DisjAf& daf, OracleOptions opts) {
    check_cap(daf.arguments.size(), opts, "disjunctive labelling enumeration");
    DisjTable t = disj_table(daf);
    auto ok = [&](const std::vector<Label>& states) {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (!d_legitimate_at(i, states[i], t, states)) return false;
        return true;
    };
    return scan3(daf.arguments, ok, opts.parallel);
}

std::vector<Labelling> disjunctive_labellings_serial(const DisjAf& daf,
                                                     OracleOptions opts) {
    OracleOptions o = opts;
    o.parallel = false;
    return disjunctive_labellings(daf, o);
}

} // namespace cnaf
