#pragma once

#include <string>

#include "mols/design.hpp"
#include "mols/sim.hpp"
#include "mols/stopping.hpp"

namespace mols {

// JSON document for a stopping-set census: code parameters (when the matrix
// carries them), cap, both histogram views, stopping distance (number, or
// the string "greater than cap"), and per-size witness column sets.
std::string stopping_report_json(const SparseMatrix& h, const StoppingReport& report);

// Plot-ready CSV: one row per epsilon with columns
// epsilon,trials,bit_errors,ber,word_failures,det_1..det_<cap>,det_overflow.
std::string sim_result_csv(const SimResult& result);

} // namespace mols
