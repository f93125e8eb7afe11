#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>

#include "gaussalg/core.hpp"

namespace gaussalg {

/// coeff * x^mono; coeff 0 encodes the zero term.
struct Term {
  Int coeff = 0;
  Monomial mono;
};

/// Integer-coefficient polynomial as an ordered monomial -> coefficient map.
class TermSum {
 public:
  TermSum() = default;
  explicit TermSum(Index dim) : dim_(dim) {}

  Index dimension() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int, CanonicalLess>& terms() const { return terms_; }

  void add(Int coeff, const Monomial& mono);
  void add(const Term& t) { add(t.coeff, t.mono); }

  /// The polynomial times the monomial m.
  TermSum shifted_by(const Eigen::Ref<const Monomial>& m) const;

  bool operator==(const TermSum& o) const;

  std::string to_string() const;

 private:
  Index dim_ = 0;
  std::map<Monomial, Int, CanonicalLess> terms_;
};

/// Partial derivative of the monomial m with respect to variable j (0-based).
Term partial(const Eigen::Ref<const Monomial>& m, Index j);

/// Jacobian determinant of the monomial family gs (d monomials in d
/// variables), expanded symbolically over all d! permutations.  Entry (i, j)
/// of the underlying matrix is the partial of gs[i] with respect to x_{j+1}.
/// Guarded to d <= 8 (throws TooLarge beyond).
TermSum theta_minor(std::span<const Monomial> gs);

struct IdentityMismatch {
  TermSum lhs;  // (x_1...x_d) * theta_minor(gs)
  TermSum rhs;  // det(log_matrix(gs)) * product(gs)
};

/// Verifies (x_1...x_d) * det Theta(gs) == det Log(gs) * (g_1...g_d), with the
/// left side from the symbolic expansion and the right side from exact
/// elimination.  Returns the two sides on mismatch, nothing when they agree.
std::optional<IdentityMismatch> check_identity(std::span<const Monomial> gs);

}  // namespace gaussalg
