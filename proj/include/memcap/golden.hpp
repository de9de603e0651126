#pragma once

#include "memcap/matrix.hpp"

namespace memcap {

// The weight-1, 10-neuron reference matrix holding 38 memory classes; the
// same bytes ship as fixtures/golden10.matrix. verify-paper checks against
// this embedded copy so file edits cannot weaken the gate.
const char* golden10_text();
SynapticMatrix golden10_matrix();

}  // namespace memcap
