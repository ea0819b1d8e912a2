#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cnaf/model.hpp"
#include "cnaf/theory.hpp"

namespace cnaf {

struct EnumerateOptions {
    // Universes larger than this abort with SizeCapError unless raised.
    std::size_t max_atoms = 20;
    bool parallel = true;
};

// All coherent assignments satisfying every formula of the CN-flat theory,
// in lexicographic state order (In < Out < Und per atom, atoms in universe
// order). The parallel kernel partitions the state space across OpenMP
// workers and merges order-stably; results are identical to the serial
// reference.
std::vector<CnModel> enumerate_models(const Theory& t, EnumerateOptions opts = {});

// Plain single-threaded scan without unit pruning, kept as the reference
// implementation for differential tests and benchmarks.
std::vector<CnModel> enumerate_models_serial(const Theory& t,
                                             EnumerateOptions opts = {});

bool is_model(const Theory& t, const CnModel& m);

// True iff every model of t satisfies f.
bool entails(const Theory& t, const FormulaPtr& f, EnumerateOptions opts = {});

// The universe atoms entailed by a consistent theory; for compiled plain
// networks this in-set is the grounded extension. Throws DomainError when
// the theory has no models.
std::set<std::string> grounded_by_entailment(const Theory& t,
                                             EnumerateOptions opts = {});

} // namespace cnaf
