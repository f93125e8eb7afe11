#include "gaussalg/jacobian.hpp"

#include <algorithm>
#include <numeric>

namespace gaussalg {

void TermSum::add(Int coeff, const Monomial& mono) {
  if (coeff == 0) return;
  if (mono.size() != dim_) throw DimensionMismatch("TermSum: wrong monomial dimension");
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, coeff);
    return;
  }
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

TermSum TermSum::shifted_by(const Eigen::Ref<const Monomial>& m) const {
  if (m.size() != dim_) throw DimensionMismatch("TermSum: wrong monomial dimension");
  TermSum out(dim_);
  for (const auto& [mono, coeff] : terms_) out.add(coeff, mono + m);
  return out;
}

bool TermSum::operator==(const TermSum& o) const {
  if (dim_ != o.dim_ || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!same_monomial(it->first, jt->first) || it->second != jt->second) return false;
  return true;
}

std::string TermSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, coeff] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(coeff);
    for (Index i = 0; i < mono.size(); ++i) {
      if (mono(i) == 0) continue;
      s += "*x" + std::to_string(i + 1);
      if (mono(i) > 1) s += "^" + std::to_string(mono(i));
    }
  }
  return s;
}

Term partial(const Eigen::Ref<const Monomial>& m, Index j) {
  if (j < 0 || j >= m.size()) throw InvalidArgument("partial: variable index out of range");
  Term t;
  if (m(j) == 0) {
    t.coeff = 0;
    t.mono = Monomial::Zero(m.size());
    return t;
  }
  t.coeff = m(j);
  t.mono = m;
  t.mono(j) -= 1;
  return t;
}

TermSum theta_minor(std::span<const Monomial> gs) {
  if (gs.empty()) throw DimensionMismatch("theta_minor: empty family");
  const Index d = gs.front().size();
  if (static_cast<Index>(gs.size()) != d)
    throw NotSquare("theta_minor: need as many monomials as variables");
  for (const Monomial& g : gs)
    if (g.size() != d) throw DimensionMismatch("theta_minor: mixed ambient dimensions");
  if (d > 8) throw TooLarge("theta_minor: symbolic expansion limited to d <= 8");

  TermSum sum(d);
  std::vector<Index> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), Index{0});
  Monomial mono(d);
  do {
    Int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Int coeff = sign;
    mono.setZero();
    bool vanishes = false;
    for (Index i = 0; i < d; ++i) {
      const Monomial& g = gs[static_cast<std::size_t>(i)];
      const Index xj = perm[static_cast<std::size_t>(i)];
      if (g(xj) == 0) {
        vanishes = true;
        break;
      }
      coeff = checked_mul(coeff, g(xj));
      mono += g;
      mono(xj) -= 1;
    }
    if (!vanishes) sum.add(coeff, mono);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::optional<IdentityMismatch> check_identity(std::span<const Monomial> gs) {
  const TermSum theta = theta_minor(gs);
  const Index d = gs.front().size();
  TermSum lhs = theta.shifted_by(Monomial::Ones(d));
  TermSum rhs(d);
  rhs.add(determinant(log_matrix(gs)), multiply(gs));
  if (lhs == rhs) return std::nullopt;
  return IdentityMismatch{std::move(lhs), std::move(rhs)};
}

}  // namespace gaussalg
