#pragma once

#include <vector>

#include "gaussalg/gauss.hpp"

namespace gaussalg {

/// Hand-checked witness constructions for the cubic squarefree families in
/// dimensions 5 through 7: one construction per orbit of the classified
/// generator set, plus the support-4 construction in dimension 5.  Generator
/// lists keep their original order; determinants are recomputed at load.
/// Used by selfcheck and the test suite as a fixed fixture corpus.
const std::vector<Witness>& reference_witnesses();

}  // namespace gaussalg
