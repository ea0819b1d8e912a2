#pragma once

#include <string>

#include "cnaf/framework.hpp"

namespace cnaf {

// Trivial Graph Format: node ids one per line, a '#' line, then "src tgt"
// edge lines. Throws ParseError.
Af parse_tgf(const std::string& text);

// Extended APX: facts ending in '.', '%' comments. Recognised facts:
//   arg(a).  att(a,b).  jatt([a,b],c).  natt(id,a,b).  hatt(id2,z,id1).
//   datt(a,[b,c]).  supp(a,b).  ac(x,"<formula>").
// Returns the most specific framework family consistent with the facts;
// mixing incompatible families is an error. Arguments must be declared with
// arg(...) before use.
Framework parse_apx(const std::string& text);

std::string print_tgf(const Af& af);
std::string print_apx(const Af& af);
std::string print_apx(const JointAf& jaf);
std::string print_apx(const HigherAf& haf);
std::string print_apx(const DisjAf& daf);
std::string print_apx(const BipolarAf& baf);
std::string print_apx(const AdfSpec& adf);
std::string print_apx(const Framework& fw);

} // namespace cnaf
