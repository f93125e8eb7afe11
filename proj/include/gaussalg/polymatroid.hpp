#pragma once

#include <optional>
#include <vector>

#include "gaussalg/sets.hpp"

namespace gaussalg {

struct TriedCandidate {
  Index j;            // donor variable that was tried
  Monomial rejected;  // x_j * u / x_i, not a member of the set
};

/// Certificate of a failed exchange: u and v in the set with u_i > v_i such
/// that no j with u_j < v_j keeps x_j * u / x_i inside the set.
struct ExchangeViolation {
  Monomial u, v;
  Index i;
  std::vector<TriedCandidate> tried;
};

/// Common degree of a nonempty single-degree set.  Throws EmptySet or
/// MixedDegrees.
Int assert_single_degree(const MonomialSet& s);

/// Checks the exchange property of the base-set polymatroid axioms on a
/// single-degree set.  Ordered pairs are scanned in canonical order with the
/// comparison monomial v outermost and u inner, then i ascending; the first
/// failing triple (v, u, i) is reported with every rejected candidate for
/// that i.  Permutation-closed sets take an orbit-reduced path that returns
/// the identical certificate.
std::optional<ExchangeViolation> exchange_check(const MonomialSet& s, int threads = 1);

/// Same scan contract as exchange_check, written as plain nested loops with
/// linear membership scans.  Slow; kept as an independent cross-check.
std::optional<ExchangeViolation> exchange_check_reference(const MonomialSet& s);

}  // namespace gaussalg
