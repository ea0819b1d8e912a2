#pragma once

#include "cnaf/framework.hpp"
#include "cnaf/model.hpp"

namespace cnaf {

struct OracleOptions {
    // Argument sets larger than this abort with SizeCapError unless raised.
    std::size_t max_args = 12;
    bool parallel = true;
};

// All total labellings satisfying the three legitimacy conditions: an
// argument is in iff all its attackers are out (vacuously when unattacked),
// out iff some attacker is in, und iff no attacker is in and some attacker
// is und. Lexicographic order (In < Out < Und, arguments in declaration
// order). The default path is a propagating backtracker (forced labels are
// filled in as soon as all attackers are decided); the scan variants walk
// all 3^|S| labellings and exist as references for tests and benchmarks.
std::vector<Labelling> complete_labellings(const Af& af, OracleOptions opts = {});
std::vector<Labelling> complete_labellings_scan(const Af& af, OracleOptions opts = {});
std::vector<Labelling> complete_labellings_serial(const Af& af, OracleOptions opts = {});

// Least fixed point: label in every argument all of whose attackers are
// out, out every argument with an in attacker, iterate; the rest is und.
Labelling grounded_fixpoint(const Af& af);

// Filters over complete_labellings.
std::vector<Labelling> stable_labellings(const Af& af, OracleOptions opts = {});
std::vector<Labelling> preferred_labellings(const Af& af, OracleOptions opts = {});

// All labellings satisfying the joint-attack conditions CG1-CG3.
std::vector<Labelling> joint_labellings(const JointAf& jaf, OracleOptions opts = {});
std::vector<Labelling> joint_labellings_serial(const JointAf& jaf, OracleOptions opts = {});

// All labellings satisfying the disjunctive conditions D1-D3 as stated:
// D1 and D2 are implications from their conditions to the label, D3 is a
// biconditional over per-attack statuses.
std::vector<Labelling> disjunctive_labellings(const DisjAf& daf, OracleOptions opts = {});
std::vector<Labelling> disjunctive_labellings_serial(const DisjAf& daf, OracleOptions opts = {});

} // namespace cnaf
