// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cnaf/enumerate.hpp"
#include "cnaf/errors.hpp"
#include "cnaf/oracle.hpp"
#include "cnaf/reduction.hpp"
#include "cnaf/translate.hpp"
#include "cnaf/two_world.hpp"

using namespace cnaf;

namespace {

Labelling lab(const std::vector<std::pair<std::string, Label>>& states) {
    Labelling l;
    for (const auto& [a, s] : states) l.labels[a] = s;
    return l;
}

CnModel model_of(const std::vector<std::pair<std::string, Label>>& states) {
    CnModel m;
    for (const auto& [a, s] : states) m.states[a] = s;
    return m;
}

std::vector<Labelling> sorted_unique(std::vector<Labelling> ls) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

std::vector<CnModel> sorted_unique(std::vector<CnModel> ms) {
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return ms;
}

std::vector<Labelling> cn_labellings(const Theory& t) {
    std::vector<Labelling> out;
    for (const auto& m : enumerate_models(t)) out.push_back(model_to_labelling(m));
    return out;
}

std::string show(const Labelling& l) {
    std::string out = "[";
    bool first = true;
    for (const auto& [a, s] : l.labels) {
        if (!first) out += " ";
        first = false;
        out += a + ":" + label_name(s);
    }
    return out + "]";
}

std::string show_set(const std::vector<Labelling>& ls) {
    std::string out = "{";
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) out += ", ";
        out += show(ls[i]);
    }
    return out + "}";
}

// The curated corpus: every plain network drawn in or derived from the
// source figures, twenty in all.
std::vector<Af> curated_corpus() {
    return {
        // self-attacker
        {{"x"}, {{"x", "x"}}},
        // one attack plus an isolated node
        {{"x", "y", "z"}, {{"x", "y"}}},
        // two-step chain
        {{"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}},
        // chain variant with a mutual pair at the tail
        {{"x", "y", "z"}, {{"x", "y"}, {"z", "y"}, {"y", "z"}}},
        // self-attacker that also attacks a counter-attacking node
        {{"x", "y"}, {{"x", "x"}, {"x", "y"}, {"y", "x"}}},
        // mutual attack
        {{"a", "b"}, {{"a", "b"}, {"b", "a"}}},
        // odd cycle with a two-step tail
        {{"a", "b", "c", "d", "e"},
         {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}}},
        // mutual pair feeding an even cycle
        {{"a", "b", "c", "d", "e"},
         {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "c"}}},
        // mutual pair with one direct attack on x (y isolated)
        {{"a", "b", "x", "y"}, {{"a", "b"}, {"b", "a"}, {"a", "x"}}},
        // mutual pair with one direct attack on y (x isolated)
        {{"a", "b", "x", "y"}, {{"a", "b"}, {"b", "a"}, {"a", "y"}}},
        // unattacked source picking off one of two targets
        {{"x", "a", "b"}, {{"x", "a"}}},
        {{"x", "a", "b"}, {{"x", "b"}}},
        // the single-group reduction gadget written out as a plain network
        {{"a", "b", "x", "x__G1", "e__x__G1__a", "e__x__G1__b"},
         {{"a", "e__x__G1__a"},
          {"b", "e__x__G1__b"},
          {"e__x__G1__a", "x__G1"},
          {"e__x__G1__b", "x__G1"},
          {"x__G1", "x"}}},
        // one arc among bystanders
        {{"z", "x", "y", "u", "w"}, {{"z", "x"}}},
        // bare odd cycle
        {{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}},
        // five-node chain
        {{"a", "b", "c", "d", "e"},
         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}}},
        // single unattacked argument
        {{"a"}, {}},
        // self-attacking middle of a three-node loop
        {{"a", "b", "c"}, {{"a", "b"}, {"b", "b"}, {"b", "c"}, {"c", "a"}}},
        // bare even cycle
        {{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}},
        // mutual attacks all around a triangle
        {{"a", "b", "c"},
         {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"a", "c"}, {"c", "a"}}},
    };
}

Af random_af(std::mt19937_64& rng, std::size_t max_args) {
    Af af;
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_args)(rng);
    for (std::size_t i = 0; i < n; ++i)
        af.arguments.push_back("a" + std::to_string(i));
    double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    for (const auto& s : af.arguments)
        for (const auto& t : af.arguments)
            if (pd(rng) < p) af.attacks.emplace_back(s, t);
    return af;
}

JointAf random_joint(std::mt19937_64& rng, std::size_t max_args,
                     std::size_t max_group) {
    JointAf jaf;
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_args)(rng);
    for (std::size_t i = 0; i < n; ++i)
        jaf.arguments.push_back("a" + std::to_string(i));
    std::size_t attacks = std::uniform_int_distribution<std::size_t>(0, n + 1)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < attacks; ++k) {
        JointAttack a;
        std::size_t gs =
            std::uniform_int_distribution<std::size_t>(1, std::min(max_group, n))(rng);
        for (std::size_t j = 0; j < gs; ++j)
            a.group.push_back(jaf.arguments[pick(rng)]);
        std::sort(a.group.begin(), a.group.end());
        a.group.erase(std::unique(a.group.begin(), a.group.end()), a.group.end());
        a.target = jaf.arguments[pick(rng)];
        jaf.attacks.push_back(std::move(a));
    }
    return jaf;
}

// Random CN-flat formula without @1: N only on atoms.
FormulaPtr random_flat(std::mt19937_64& rng, int depth, int n_atoms) {
    auto atom_name = [&] {
        return "q" + std::to_string(
                         std::uniform_int_distribution<int>(0, n_atoms - 1)(rng));
    };
    if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: return mk_atom(atom_name());
        case 1: return mk_sneg(mk_atom(atom_name()));
        case 2: return mk_top();
        default: return mk_bottom();
        }
    }
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return mk_not(random_flat(rng, depth - 1, n_atoms));
    case 1:
        return mk_and(random_flat(rng, depth - 1, n_atoms),
                      random_flat(rng, depth - 1, n_atoms));
    case 2:
        return mk_or(random_flat(rng, depth - 1, n_atoms),
                     random_flat(rng, depth - 1, n_atoms));
    case 3:
        return mk_imp(random_flat(rng, depth - 1, n_atoms),
                      random_flat(rng, depth - 1, n_atoms));
    default:
        return mk_iff(random_flat(rng, depth - 1, n_atoms),
                      random_flat(rng, depth - 1, n_atoms));
    }
}

// Random unrestricted formula: N on compounds, @1 allowed.
FormulaPtr random_general(std::mt19937_64& rng, int depth, int n_atoms) {
    auto atom_name = [&] {
        return "q" + std::to_string(
                         std::uniform_int_distribution<int>(0, n_atoms - 1)(rng));
    };
    if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
        switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0:
        case 1: return mk_atom(atom_name());
        case 2: return mk_top();
        case 3: return mk_bottom();
        default: return mk_world1();
        }
    }
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return mk_not(random_general(rng, depth - 1, n_atoms));
    case 1: return mk_sneg(random_general(rng, depth - 1, n_atoms));
    case 2:
        return mk_and(random_general(rng, depth - 1, n_atoms),
                      random_general(rng, depth - 1, n_atoms));
    case 3:
        return mk_or(random_general(rng, depth - 1, n_atoms),
                     random_general(rng, depth - 1, n_atoms));
    case 4:
        return mk_imp(random_general(rng, depth - 1, n_atoms),
                      random_general(rng, depth - 1, n_atoms));
    default:
        return mk_iff(random_general(rng, depth - 1, n_atoms),
                      random_general(rng, depth - 1, n_atoms));
    }
}

FormulaPtr random_inn(std::mt19937_64& rng, int depth) {
    static const char* names[] = {"p", "q", "r"};
    if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        return mk_atom(names[std::uniform_int_distribution<int>(0, 2)(rng)]);
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return mk_and(random_inn(rng, depth - 1), random_inn(rng, depth - 1));
    case 1: return mk_or(random_inn(rng, depth - 1), random_inn(rng, depth - 1));
    case 2: return inn_not(random_inn(rng, depth - 1));
    default:
        return inn_imp(random_inn(rng, depth - 1), random_inn(rng, depth - 1));
    }
}

std::vector<TwoWorldModel> all_two_world(const std::vector<std::string>& atoms) {
    std::vector<TwoWorldModel> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
    const std::pair<bool, bool> states[3] = {{false, false}, {false, true}, {true, true}};
    for (std::size_t idx = 0; idx < total; ++idx) {
        TwoWorldModel m;
        std::size_t v = idx;
        for (const auto& a : atoms) {
            m.valuation[a] = states[v % 3];
            v /= 3;
        }
        out.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

bool criterion_correspondence(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Af> corpus = curated_corpus();
    std::mt19937_64 rng(540001);
    for (int i = 0; i < 500; ++i) corpus.push_back(random_af(rng, 7));

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        auto cn = sorted_unique(cn_labellings(delta_af(corpus[i])));
        auto oracle = sorted_unique(complete_labellings(corpus[i]));
        if (cn != oracle) {
            detail = "instance " + std::to_string(i) + ": cn " + show_set(cn) +
                     " vs oracle " + show_set(oracle);
            return false;
        }
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%zu instances in %.2f s", corpus.size(), secs);
    detail = buf;
    return secs < 60.0;
}

bool criterion_grounded(std::string& detail) {
    std::vector<Af> corpus = curated_corpus();
    std::mt19937_64 rng(540001);
    for (int i = 0; i < 500; ++i) corpus.push_back(random_af(rng, 7));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::set<std::string> by_entailment =
            grounded_by_entailment(delta_af(corpus[i]));
        std::set<std::string> by_fixpoint = grounded_fixpoint(corpus[i]).in_set();
        if (by_entailment != by_fixpoint) {
            detail = "instance " + std::to_string(i) + " disagrees";
            return false;
        }
    }
    detail = std::to_string(corpus.size()) + " instances";
    return true;
}

bool criterion_consistency(std::string& detail) {
    std::vector<Af> corpus = curated_corpus();
    std::mt19937_64 rng(540001);
    for (int i = 0; i < 500; ++i) corpus.push_back(random_af(rng, 7));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (enumerate_models(delta_af(corpus[i])).empty()) {
            detail = "instance " + std::to_string(i) + " has no model";
            return false;
        }
    }
    detail = std::to_string(corpus.size()) + " instances";
    return true;
}

bool criterion_stable(std::string& detail) {
    std::vector<Af> corpus = curated_corpus();
    std::mt19937_64 rng(540001);
    for (int i = 0; i < 500; ++i) corpus.push_back(random_af(rng, 7));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Theory t = delta_af(corpus[i]);
        for (auto& f : stable_axioms(corpus[i].arguments).formulas)
            t.formulas.push_back(std::move(f));
        auto cn = sorted_unique(cn_labellings(t));
        auto oracle = sorted_unique(stable_labellings(corpus[i]));
        if (cn != oracle) {
            detail = "instance " + std::to_string(i) + ": cn " + show_set(cn) +
                     " vs oracle " + show_set(oracle);
            return false;
        }
    }
    detail = std::to_string(corpus.size()) + " instances";
    return true;
}

void check_exact_models(const Theory& t, std::vector<CnModel> expected,
                        const char* what, std::string& detail, bool& ok) {
    auto models = sorted_unique(enumerate_models(t));
    expected = sorted_unique(std::move(expected));
    if (models != expected) {
        ok = false;
        detail += std::string("\n    ") + what + ": got " +
                  std::to_string(models.size()) + " models, expected " +
                  std::to_string(expected.size());
    }
}

bool criterion_goldens(std::string& detail) {
    bool ok = true;

    // Self-attacker: the unique model is all-und.
    check_exact_models(delta_af(Af{{"x"}, {{"x", "x"}}}),
                       {model_of({{"x", Label::Und}})}, "self-attacker", detail, ok);

    // Three equivalent shapes with the single model x=in, y=out, z=in.
    CnModel a_expected =
        model_of({{"x", Label::In}, {"y", Label::Out}, {"z", Label::In}});
    check_exact_models(delta_af(Af{{"x", "y", "z"}, {{"x", "y"}}}), {a_expected},
                       "net A1", detail, ok);
    check_exact_models(delta_af(Af{{"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}}),
                       {a_expected}, "net A2", detail, ok);
    check_exact_models(
        delta_af(Af{{"x", "y", "z"}, {{"x", "y"}, {"z", "y"}, {"y", "z"}}}),
        {a_expected}, "net A3", detail, ok);

    // Double loop: exactly y-in/x-out and all-und.
    check_exact_models(
        delta_af(Af{{"x", "y"}, {{"x", "x"}, {"x", "y"}, {"y", "x"}}}),
        {model_of({{"x", Label::Out}, {"y", Label::In}}),
         model_of({{"x", Label::Und}, {"y", Label::Und}})},
        "double loop", detail, ok);

    // Odd cycle with tail: all-und only.
    check_exact_models(
        delta_af(Af{{"a", "b", "c", "d", "e"},
                    {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}, {"d", "e"}}}),
        {model_of({{"a", Label::Und},
                   {"b", Label::Und},
                   {"c", Label::Und},
                   {"d", Label::Und},
                   {"e", Label::Und}})},
        "odd cycle with tail", detail, ok);

    // Acceptance-condition table: exactly the four expected rows.
    AdfSpec adf{{"a", "b", "c", "d"},
                {{"a", parse_formula("T")},
                 {"b", parse_formula("b")},
                 {"c", parse_formula("a & b")},
                 {"d", parse_formula("~b")}}};
    check_exact_models(
        delta_adf(adf),
        {model_of({{"a", Label::In}, {"b", Label::In}, {"c", Label::In}, {"d", Label::Out}}),
         model_of({{"a", Label::In}, {"b", Label::Und}, {"c", Label::Und}, {"d", Label::In}}),
         model_of({{"a", Label::In}, {"b", Label::In}, {"c", Label::In}, {"d", Label::Und}}),
         model_of({{"a", Label::In}, {"b", Label::Out}, {"c", Label::Out}, {"d", Label::In}})},
        "acceptance table", detail, ok);

    // Disjunctive pick-one: the two expected labellings.
    DisjAf f26a{{"x", "a", "b"}, {}, {{"x", {"a", "b"}}}};
    auto got = sorted_unique(disjunctive_labellings(f26a));
    std::vector<Labelling> expected26 = sorted_unique(
        {lab({{"x", Label::In}, {"b", Label::Out}, {"a", Label::Und}}),
         lab({{"x", Label::In}, {"a", Label::Out}, {"b", Label::Und}})});
    if (got != expected26) {
        ok = false;
        detail += "\n    disjunctive pick-one: got " + show_set(got) +
                  ", expected " + show_set(expected26);
    }
    return ok;
}

bool criterion_joint(std::string& detail) {
    std::mt19937_64 rng(540006);
    for (int i = 0; i < 200; ++i) {
        JointAf jaf = random_joint(rng, 5, 3);
        auto cn = sorted_unique(cn_labellings(delta_joint(jaf)));
        auto oracle = sorted_unique(joint_labellings(jaf));
        if (cn != oracle) {
            detail = "instance " + std::to_string(i) + ": cn " + show_set(cn) +
                     " vs oracle " + show_set(oracle);
            return false;
        }
    }
    detail = "200 instances";
    return true;
}

bool criterion_reduction(std::string& detail) {
    std::mt19937_64 rng(540006);
    OracleOptions big;
    big.max_args = 48;
    for (int i = 0; i < 200; ++i) {
        JointAf jaf = random_joint(rng, 5, 3);
        ReductionResult r = joint_to_single(jaf);
        auto reduced = complete_labellings(r.framework, big);
        std::vector<Labelling> restricted;
        for (const auto& l : reduced)
            restricted.push_back(restrict_labelling(l, jaf.arguments));
        if (sorted_unique(restricted).size() != restricted.size()) {
            detail = "instance " + std::to_string(i) + ": extension not unique";
            return false;
        }
        if (sorted_unique(restricted) != sorted_unique(joint_labellings(jaf))) {
            detail = "instance " + std::to_string(i) + ": restriction mismatch";
            return false;
        }

        // The fresh points play no logical role: reduced models satisfy the
        // joint formula groups of the original network.
        Theory reduced_theory = delta_af(r.framework);
        Theory joint_theory = delta_joint(jaf);
        for (const auto& l : reduced) {
            CnModel m = labelling_to_model(l);
            if (!is_model(reduced_theory, m)) {
                detail = "instance " + std::to_string(i) +
                         ": labelling is not a reduced model";
                return false;
            }
            for (const auto& f : joint_theory.formulas) {
                if (!evaluate_cn(f, m)) {
                    detail = "instance " + std::to_string(i) +
                             ": reduced model falsifies " + print(f);
                    return false;
                }
            }
        }
    }
    detail = "200 instances";
    return true;
}

bool criterion_disjunctive_union(std::string& detail) {
    DisjAf fs2{{"a", "b", "x", "y"},
               {{"a", "b"}, {"b", "a"}},
               {{"a", {"x", "y"}}}};
    Af fs3{{"a", "b", "x", "y"}, {{"a", "b"}, {"b", "a"}, {"a", "x"}}};
    Af fs4{{"a", "b", "x", "y"}, {{"a", "b"}, {"b", "a"}, {"a", "y"}}};

    auto lhs = sorted_unique(enumerate_models(delta_disjunctive(fs2)));
    std::vector<CnModel> rhs;
    for (const auto& m : enumerate_models(delta_af(fs3))) rhs.push_back(m);
    for (const auto& m : enumerate_models(delta_af(fs4))) rhs.push_back(m);
    auto united = sorted_unique(std::move(rhs));
    if (lhs != united) {
        detail = "disjunctive theory has " + std::to_string(lhs.size()) +
                 " models, union of the split networks has " +
                 std::to_string(united.size());
        return false;
    }
    detail = "exact";
    return true;
}

bool criterion_entailment(std::string& detail) {
    Af chain{{"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}};
    Theory tc = delta_af(chain);
    bool ok = true;
    if (!entails(tc, parse_formula("x <-> z"))) {
        ok = false;
        detail += "\n    chain does not entail x <-> z";
    }
    if (!entails(tc, parse_formula("N x <-> N z"))) {
        ok = false;
        detail += "\n    chain does not entail N x <-> N z";
    }

    Af loop{{"x", "y"}, {{"x", "x"}, {"x", "y"}, {"y", "x"}}};
    Theory tl = delta_af(loop);
    for (const char* f : {"~x", "~N y", "(y & N x) | (~y & ~N y & ~x & ~N x)"}) {
        if (!entails(tl, parse_formula(f))) {
            ok = false;
            detail += std::string("\n    double loop does not entail ") + f;
        }
    }
    return ok;
}

bool criterion_modal(std::string& detail) {
    bool ok = true;
    const char* axioms[] = {
        "N (p & q) <-> (N p | N q)", // K
        "~N p <-> N ~p",             // F
        "p -> N (N p)",              // C
        "@1 -> (p -> N ~p)",         // A
        "@1 <-> N @1",               // T
        "N (N p) <-> p",             // NN
        "N (p | q) <-> (N p & N q)",
        "N ~p <-> ~N p",
    };
    for (const char* a : axioms) {
        if (!is_valid(parse_formula(a), ValidityMode::Both)) {
            ok = false;
            detail += std::string("\n    axiom not valid: ") + a;
        }
    }

    FormulaPtr noncontra = parse_formula("~(q & N q)");
    if (!is_valid(noncontra, ValidityMode::World1)) {
        ok = false;
        detail += "\n    ~(q & N q) not world-1 valid";
    }
    bool falsifiable_w2 = false;
    for (const auto& m : all_two_world({"q"}))
        if (!eval_world(noncontra, m, 2)) falsifiable_w2 = true;
    if (!falsifiable_w2) {
        ok = false;
        detail += "\n    ~(q & N q) not falsifiable at world 2";
    }

    auto cm =
        find_countermodel(parse_formula("p | (~p & N p)"), ValidityMode::World1);
    if (!cm || cm->model.valuation.at("p") != std::pair<bool, bool>(false, true)) {
        ok = false;
        detail += "\n    excluded-middle countermodel is not p=(0,1)";
    }

    std::mt19937_64 rng(540010);
    for (int i = 0; i < 200; ++i) {
        FormulaPtr f = random_inn(rng, 3);
        for (const auto& m : all_two_world(atoms_of(f))) {
            if (eval_world(f, m, 1) && !eval_world(f, m, 2)) {
                ok = false;
                detail += "\n    INN persistence fails for " + print(f);
                break;
            }
        }
    }
    return ok;
}

bool criterion_bridge(std::string& detail) {
    std::mt19937_64 rng(540011);
    for (int i = 0; i < 500; ++i) {
        FormulaPtr f = random_flat(rng, 4, 5);
        for (const auto& m : all_two_world(atoms_of(f))) {
            CnModel cm = two_world_to_cn(m);
            if (evaluate_cn(f, cm) != eval_world(f, m, 1)) {
                detail = "formula " + print(f) + " disagrees";
                return false;
            }
        }
    }
    detail = "500 formulas";
    return true;
}

bool criterion_normalize(std::string& detail) {
    std::mt19937_64 rng(540012);
    for (int i = 0; i < 500; ++i) {
        FormulaPtr f = random_general(rng, 4, 5);
        FormulaPtr n = normalize_n(f);
        if (!is_cn_flat(n)) {
            detail = "normalization not flat for " + print(f);
            return false;
        }
        if (!equal(normalize_n(n), n)) {
            detail = "normalization not idempotent for " + print(f);
            return false;
        }
        for (const auto& m : all_two_world(atoms_of(f))) {
            if (eval_world(f, m, 1) != eval_world(n, m, 1) ||
                eval_world(f, m, 2) != eval_world(n, m, 2)) {
                detail = "normalization changes " + print(f);
                return false;
            }
        }
    }
    detail = "500 formulas";
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "correspondence: CN models = complete labellings", criterion_correspondence},
        {2, "grounded extension by entailment = fixpoint", criterion_grounded},
        {3, "every compiled plain theory is consistent", criterion_consistency},
        {4, "stable axioms carve out the und-free labellings", criterion_stable},
        {5, "golden instances, exact model sets", criterion_goldens},
        {6, "joint correspondence on random networks", criterion_joint},
        {7, "joint-to-single reduction is faithful", criterion_reduction},
        {8, "disjunctive split: model set equals the union", criterion_disjunctive_union},
        {9, "entailment goldens", criterion_entailment},
        {10, "two-world modal suite", criterion_modal},
        {11, "flat evaluation agrees with world-1 truth", criterion_bridge},
        {12, "N-normalization is sound and idempotent", criterion_normalize},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name, detail.empty() ? "" : " -- ", detail.c_str());
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures;
}
