#include "cnaf/framework.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

void check_unique(const std::vector<std::string>& names, const char* what,
                  std::vector<std::string>& out) {
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            out.push_back(std::string("duplicate ") + what + ": " + n);
}

} // namespace

std::vector<std::string> Af::attackers_of(const std::string& arg) const {
    std::vector<std::string> out;
    for (const auto& [src, tgt] : attacks)
        if (tgt == arg) out.push_back(src);
    return out;
}

bool Af::has_argument(const std::string& arg) const {
    return contains(arguments, arg);
}

std::vector<const JointAttack*> JointAf::attacks_on(const std::string& arg) const {
    std::vector<const JointAttack*> out;
    for (const auto& a : attacks)
        if (a.target == arg) out.push_back(&a);
    return out;
}

bool JointAf::has_argument(const std::string& arg) const {
    return contains(arguments, arg);
}

const HigherAttack* HigherAf::find_attack(const std::string& id) const {
    for (const auto& a : attacks)
        if (a.id == id) return &a;
    return nullptr;
}

bool HigherAf::has_argument(const std::string& arg) const {
    return contains(arguments, arg);
}

int HigherAf::level_of(const HigherAttack& a) const {
    int level = 1;
    const HigherAttack* cur = &a;
    // Attack graphs are finite; more hops than attacks means a cycle.
    for (std::size_t hops = 0; !has_argument(cur->target); ++hops) {
        if (hops > attacks.size())
            throw DomainError("cyclic attack id references at '" + a.id + "'");
        const HigherAttack* next = find_attack(cur->target);
        if (!next)
            throw DomainError("dangling attack id '" + cur->target + "'");
        cur = next;
        ++level;
    }
    return level;
}

int HigherAf::depth() const {
    int d = 0;
    for (const auto& a : attacks) d = std::max(d, level_of(a));
    return d;
}

bool DisjAf::has_argument(const std::string& arg) const {
    return contains(arguments, arg);
}

bool BipolarAf::has_argument(const std::string& arg) const {
    return contains(arguments, arg);
}

bool AdfSpec::has_argument(const std::string& arg) const {
    return contains(arguments, arg);
}

FormulaPtr AdfSpec::acceptance_of(const std::string& arg) const {
    for (const auto& [a, f] : acceptance)
        if (a == arg) return f;
    throw DomainError("no acceptance formula for '" + arg + "'");
}

std::vector<std::string> validate(const Af& af) {
    std::vector<std::string> out;
    if (af.arguments.empty()) out.push_back("argument set is empty");
    check_unique(af.arguments, "argument", out);
    for (const auto& [src, tgt] : af.attacks) {
        if (!af.has_argument(src)) out.push_back("attack source '" + src + "' not declared");
        if (!af.has_argument(tgt)) out.push_back("attack target '" + tgt + "' not declared");
    }
    return out;
}

std::vector<std::string> validate(const JointAf& jaf) {
    std::vector<std::string> out;
    if (jaf.arguments.empty()) out.push_back("argument set is empty");
    check_unique(jaf.arguments, "argument", out);
    for (const auto& a : jaf.attacks) {
        if (a.group.empty()) out.push_back("empty attacking group");
        for (const auto& z : a.group)
            if (!jaf.has_argument(z))
                out.push_back("group member '" + z + "' not declared");
        if (!jaf.has_argument(a.target))
            out.push_back("attack target '" + a.target + "' not declared");
    }
    return out;
}

std::vector<std::string> validate(const HigherAf& haf) {
    std::vector<std::string> out;
    if (haf.arguments.empty()) out.push_back("argument set is empty");
    check_unique(haf.arguments, "argument", out);
    std::set<std::string> ids;
    for (const auto& a : haf.attacks) {
        if (!ids.insert(a.id).second)
            out.push_back("duplicate attack id: " + a.id);
        if (haf.has_argument(a.id))
            out.push_back("attack id '" + a.id + "' collides with an argument");
        if (!haf.has_argument(a.source))
            out.push_back("attack source '" + a.source + "' not declared");
        if (!haf.has_argument(a.target) && !haf.find_attack(a.target))
            out.push_back("attack target '" + a.target + "' unknown");
    }
    if (out.empty()) {
        for (const auto& a : haf.attacks) {
            try {
                haf.level_of(a);
            } catch (const DomainError& e) {
                out.push_back(e.what());
            }
        }
    }
    return out;
}

std::vector<std::string> validate(const DisjAf& daf) {
    std::vector<std::string> out;
    if (daf.arguments.empty()) out.push_back("argument set is empty");
    check_unique(daf.arguments, "argument", out);
    for (const auto& [src, tgt] : daf.direct_attacks) {
        if (!daf.has_argument(src)) out.push_back("attack source '" + src + "' not declared");
        if (!daf.has_argument(tgt)) out.push_back("attack target '" + tgt + "' not declared");
    }
    for (const auto& a : daf.disj_attacks) {
        if (!daf.has_argument(a.source))
            out.push_back("attack source '" + a.source + "' not declared");
        if (a.targets.empty()) out.push_back("empty attacked set");
        for (const auto& t : a.targets)
            if (!daf.has_argument(t))
                out.push_back("attacked member '" + t + "' not declared");
    }
    return out;
}

std::vector<std::string> validate(const BipolarAf& baf) {
    std::vector<std::string> out;
    if (baf.arguments.empty()) out.push_back("argument set is empty");
    check_unique(baf.arguments, "argument", out);
    for (const auto& [src, tgt] : baf.attacks) {
        if (!baf.has_argument(src)) out.push_back("attack source '" + src + "' not declared");
        if (!baf.has_argument(tgt)) out.push_back("attack target '" + tgt + "' not declared");
    }
    for (const auto& [src, tgt] : baf.supports) {
        if (!baf.has_argument(src)) out.push_back("support source '" + src + "' not declared");
        if (!baf.has_argument(tgt)) out.push_back("support target '" + tgt + "' not declared");
    }
    return out;
}

std::vector<std::string> validate(const AdfSpec& adf) {
    std::vector<std::string> out;
    if (adf.arguments.empty()) out.push_back("argument set is empty");
    check_unique(adf.arguments, "argument", out);
    std::map<std::string, int> count;
    for (const auto& [arg, f] : adf.acceptance) {
        count[arg]++;
        if (!adf.has_argument(arg))
            out.push_back("acceptance for undeclared argument '" + arg + "'");
        if (!is_cn_flat(f) || contains_world1(f))
            out.push_back("acceptance formula for '" + arg + "' is not classical");
        for (const auto& atom : atoms_of(f)) {
            if (!adf.has_argument(atom))
                out.push_back("acceptance formula for '" + arg +
                              "' mentions undeclared '" + atom + "'");
        }
        // N-free: the formula must be classical over S-atoms.
        std::vector<FormulaPtr> stack{f};
        while (!stack.empty()) {
            FormulaPtr g = stack.back();
            stack.pop_back();
            if (g->op == Op::SNeg) {
                out.push_back("acceptance formula for '" + arg + "' uses N");
                break;
            }
            if (g->lhs) stack.push_back(g->lhs);
            if (g->rhs) stack.push_back(g->rhs);
        }
    }
    for (const auto& arg : adf.arguments)
        if (count[arg] != 1)
            out.push_back("argument '" + arg + "' has " +
                          std::to_string(count[arg]) + " acceptance formulas");
    return out;
}

std::vector<std::string> validate(const Framework& fw) {
    return std::visit([](const auto& f) { return validate(f); }, fw);
}

const std::vector<std::string>& arguments_of(const Framework& fw) {
    return std::visit(
        [](const auto& f) -> const std::vector<std::string>& {
            return f.arguments;
        },
        fw);
}

} // namespace cnaf
