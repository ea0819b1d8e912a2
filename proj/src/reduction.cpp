#include "cnaf/reduction.hpp"

#include <algorithm>
#include <map>

#include "cnaf/errors.hpp"

namespace cnaf {

namespace {

std::map<std::string, std::size_t> decl_index(const std::vector<std::string>& args) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < args.size(); ++i) idx[args[i]] = i;
    return idx;
}

} // namespace

ReductionResult joint_to_single(const JointAf& jaf) {
    auto idx = decl_index(jaf.arguments);
    ReductionResult r;
    r.embedded = jaf.arguments;
    r.framework.arguments = jaf.arguments;

    for (const auto& x : jaf.arguments) {
        // Attacking sets of x in canonical order: members sorted by
        // declaration index, groups sorted lexicographically, duplicates
        // dropped. G-indices are assigned in this order.
        std::vector<std::vector<std::string>> groups;
        for (const auto& a : jaf.attacks) {
            if (a.target != x) continue;
            std::vector<std::string> g = a.group;
            std::sort(g.begin(), g.end(),
                      [&](const std::string& p, const std::string& q) {
                          return idx.at(p) < idx.at(q);
                      });
            g.erase(std::unique(g.begin(), g.end()), g.end());
            groups.push_back(std::move(g));
        }
        std::sort(groups.begin(), groups.end(),
                  [&](const std::vector<std::string>& a,
                      const std::vector<std::string>& b) {
                      std::vector<std::size_t> ia, ib;
                      for (const auto& z : a) ia.push_back(idx.at(z));
                      for (const auto& z : b) ib.push_back(idx.at(z));
                      return ia < ib;
                  });
        groups.erase(std::unique(groups.begin(), groups.end()), groups.end());

        for (std::size_t k = 0; k < groups.size(); ++k) {
            const auto& g = groups[k];
            std::string gnode = x + "__G" + std::to_string(k + 1);
            r.framework.arguments.push_back(gnode);
            r.naming[gnode] = {"group", x, g, ""};
            for (const auto& z : g) {
                std::string enode = "e__" + x + "__G" + std::to_string(k + 1) + "__" + z;
                r.framework.arguments.push_back(enode);
                r.naming[enode] = {"edge", x, g, z};
                r.framework.attacks.emplace_back(z, enode);
                r.framework.attacks.emplace_back(enode, gnode);
            }
            r.framework.attacks.emplace_back(gnode, x);
        }
    }
    return r;
}

JointAf higher_to_joint(const HigherAf& haf) {
    JointAf out;
    out.arguments = haf.arguments;
    for (const auto& a : haf.attacks) out.arguments.push_back(a.id);
    for (const auto& a : haf.attacks)
        out.attacks.push_back({{a.source, a.id}, a.target});
    return out;
}

Labelling restrict_labelling(const Labelling& l, const std::vector<std::string>& keep) {
    Labelling out;
    for (const auto& arg : keep) {
        auto it = l.labels.find(arg);
        if (it == l.labels.end())
            throw DomainError("restrict_labelling: unknown argument '" + arg + "'");
        out.labels[arg] = it->second;
    }
    return out;
}

} // namespace cnaf
