#pragma once

#include "cnaf/framework.hpp"
#include "cnaf/theory.hpp"

namespace cnaf {

// The strong-negation axioms {Nq -> ~q | q in universe}.
Theory theta_n(const std::vector<std::string>& universe);

// The stable axioms {q | Nq | q in universe}.
Theory stable_axioms(const std::vector<std::string>& universe);

// Compiles a plain network into its CN theory. Formula order is canonical:
// facts, in-formulas, out-formulas, und-formulas, then theta_n, arguments in
// declaration order throughout. Unattacked arguments degenerate to facts
// (the empty conjunction is T) and get no out/und formulas.
Theory delta_af(const Af& af);

// Joint-attack translation: per attacked argument x,
//   out: (\/_{G R0 x} /\_{z in G} z) -> Nx
//   in:  x <-> /\_{G R0 x} \/_{z in G} Nz
//   und: /\_G (\/_z ~z) & (\/_G /\_z (z | ~Nz)) -> ~x & ~Nx
Theory delta_joint(const JointAf& jaf);

// Disjunctive-attack translation. For x with direct attackers y_i and
// indirect attacks (z_j with co-targets u^j_k):
//   in:  x <-> /\_i Ny_i & /\_j (z_j -> \/_k Nu^j_k)
//   out: (\/_i y_i | \/_j (z_j & /\_k ~Nu^j_k)) -> Nx
//   und: every attack not successful and some attack undecided -> ~x & ~Nx
Theory delta_disjunctive(const DisjAf& daf);

// ADF translation: {x <-> phi_x | x in S} plus theta_n.
Theory delta_adf(const AdfSpec& adf);

enum class BipolarVariant { Tau1, Tau2 };

// Attack part as in delta_af on (S, Ra); supports as x -> y (tau1) or
// x -> ~Ny (tau2, N~y normalized at build time).
Theory delta_bipolar(const BipolarAf& baf, BipolarVariant variant);

// Direct formulas for two-level networks (exploratory; see higher_to_joint
// for the normative reduction route). Per argument x with level-1 attackers
// z (arc a_z) and arc attackers y in R1(a_z):
//   out: (\/_z (z & /\_y Ny)) -> Nx
//   in:  x <-> /\_z (Nz | \/_y y)
//   und: (/\_z ~live_z) & (\/_z ~dead_z) -> ~x & ~Nx
// Throws DomainError when the network has more than two levels.
Theory delta_higher_direct(const HigherAf& haf);

} // namespace cnaf
