#pragma once

#include <map>
#include <string>
#include <vector>

#include "cnaf/framework.hpp"
#include "cnaf/model.hpp"

namespace cnaf {

// Provenance of a fresh node introduced by joint_to_single.
struct FreshNode {
    std::string kind;             // "group" or "edge"
    std::string target;           // the attacked argument x
    std::vector<std::string> group;
    std::string member;           // edge nodes only: the z the edge tracks
};

struct ReductionResult {
    Af framework;
    std::vector<std::string> embedded; // the original argument set S
    std::map<std::string, FreshNode> naming;
};

// Reduces joint attacks to single attacks. For each attacking set G_k of x
// (canonical attack order) it adds a group node `<x>__G<k>` and edge nodes
// `e__<x>__G<k>__<z>` with arcs z -> e -> group -> x. Fresh names are
// deterministic and collision-free.
ReductionResult joint_to_single(const JointAf& jaf);

// Turns every attack arc into an argument: each attack (z, t) with id a
// becomes the joint attack {z, a} on t. Arguments of the result are
// S followed by the attack ids.
JointAf higher_to_joint(const HigherAf& haf);

// Domain restriction of a labelling. Throws DomainError when `keep` is not
// a subset of the labelling's domain.
Labelling restrict_labelling(const Labelling& l, const std::vector<std::string>& keep);

} // namespace cnaf
