#include "gaussalg/polymatroid.hpp"

#include <array>
#include <optional>

#include "gaussalg/detail/packing.hpp"
#include "gaussalg/parallel.hpp"

namespace gaussalg {

Int assert_single_degree(const MonomialSet& s) {
  if (s.empty()) throw EmptySet("assert_single_degree: empty set");
  const Int r = degree(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (degree(s[i]) != r) throw MixedDegrees("assert_single_degree: mixed degrees");
  return r;
}

namespace {

using detail::KeySet;

// Existence test for a violation in the ordered pair (u, v); no certificate
// material, packed membership only.
bool pair_violates(const Eigen::Ref<const Monomial>& u, std::uint64_t key_u,
                   const Eigen::Ref<const Monomial>& v, const KeySet& keys) {
  const Index d = u.size();
  std::array<Index, 16> up, down;
  int nup = 0, ndown = 0;
  for (Index k = 0; k < d; ++k) {
    if (u(k) > v(k))
      up[static_cast<std::size_t>(nup++)] = k;
    else if (u(k) < v(k))
      down[static_cast<std::size_t>(ndown++)] = k;
  }
  for (int a = 0; a < nup; ++a) {
    const std::uint64_t base = key_u - detail::slot(up[static_cast<std::size_t>(a)]);
    bool ok = false;
    for (int b = 0; b < ndown; ++b)
      if (keys.count(base + detail::slot(down[static_cast<std::size_t>(b)]))) {
        ok = true;
        break;
      }
    if (!ok) return true;
  }
  return false;
}

// Full certificate for the first failing i of the ordered pair (u, v), with
// the rejected candidates for that i.
template <class Member>
std::optional<ExchangeViolation> pair_certificate(const Eigen::Ref<const Monomial>& u,
                                                  const Eigen::Ref<const Monomial>& v,
                                                  const Member& member) {
  const Index d = u.size();
  Monomial cand(d);
  for (Index i = 0; i < d; ++i) {
    if (u(i) <= v(i)) continue;
    bool ok = false;
    std::vector<TriedCandidate> tried;
    for (Index j = 0; j < d; ++j) {
      if (u(j) >= v(j)) continue;
      cand = u;
      cand(i) -= 1;
      cand(j) += 1;
      if (member(cand)) {
        ok = true;
        break;
      }
      tried.push_back({j, cand});
    }
    if (!ok) return ExchangeViolation{Monomial(u), Monomial(v), i, std::move(tried)};
  }
  return std::nullopt;
}

bool permutation_closed(const MonomialSet& s, const KeySet& keys) {
  const Index d = s.dimension();
  if (d < 2) return true;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const auto m = s[n];
    std::uint64_t key = detail::pack(m);
    for (Index k = 0; k + 1 < d; ++k) {
      if (m(k) == m(k + 1)) continue;
      const std::uint64_t swapped =
          key - static_cast<std::uint64_t>(m(k)) * detail::slot(k) -
          static_cast<std::uint64_t>(m(k + 1)) * detail::slot(k + 1) +
          static_cast<std::uint64_t>(m(k)) * detail::slot(k + 1) +
          static_cast<std::uint64_t>(m(k + 1)) * detail::slot(k);
      if (!keys.count(swapped)) return false;
    }
  }
  return true;
}

// Orbit-reduced scan for permutation-closed sets.  Violating pairs map to
// violating pairs under every relabeling, so it is enough to test u against
// one representative per orbit; the certificate of the full scan is then
// recovered from the canonically first violating comparison monomial.
std::optional<ExchangeViolation> check_closed(const MonomialSet& s, const KeySet& keys,
                                              int threads) {
  const Index d = s.dimension();
  const std::vector<ExponentPartition> reps = orbit_representatives(s);
  std::vector<std::optional<ExponentPartition>> min_v(reps.size());
  parallel_for(reps.size(), threads, [&](std::size_t t) {
    const Monomial u = leading_arrangement(reps[t], d);
    const std::uint64_t key_u = detail::pack(u);
    std::optional<ExponentPartition> best;
    for (std::size_t n = 0; n < s.size(); ++n) {
      if (pair_violates(u, key_u, s[n], keys)) {
        ExponentPartition pv = canonical(s[n]);
        if (!best || pv < *best) best = std::move(pv);
      }
    }
    min_v[t] = std::move(best);
  });
  std::optional<ExponentPartition> first_v;
  for (const auto& pv : min_v)
    if (pv && (!first_v || *pv < *first_v)) first_v = *pv;
  if (!first_v) return std::nullopt;

  const Monomial vstar = leading_arrangement(*first_v, d);
  auto member = [&](const Monomial& c) { return keys.count(detail::pack(c)) != 0; };
  for (std::size_t n = 0; n < s.size(); ++n) {
    const auto u = s[n];
    if (!pair_violates(u, detail::pack(u), vstar, keys)) continue;
    return pair_certificate(u, vstar, member);
  }
  return std::nullopt;  // unreachable: first_v's orbit contains a violating v
}

template <class Member>
std::optional<ExchangeViolation> check_full(const MonomialSet& s, const Member& member) {
  for (std::size_t vi = 0; vi < s.size(); ++vi) {
    const auto v = s[vi];
    for (std::size_t ui = 0; ui < s.size(); ++ui) {
      auto viol = pair_certificate(s[ui], v, member);
      if (viol) return viol;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExchangeViolation> exchange_check(const MonomialSet& s, int threads) {
  assert_single_degree(s);
  auto keys = detail::build_key_set(s);
  if (keys) {
    if (permutation_closed(s, *keys)) return check_closed(s, *keys, threads);
    auto member = [&](const Monomial& c) { return keys->count(detail::pack(c)) != 0; };
    return check_full(s, member);
  }
  auto member = [&](const Monomial& c) { return s.contains(c); };
  return check_full(s, member);
}

std::optional<ExchangeViolation> exchange_check_reference(const MonomialSet& s) {
  assert_single_degree(s);
  auto member = [&](const Monomial& c) {
    for (std::size_t k = 0; k < s.size(); ++k)
      if (same_monomial(s[k], c)) return true;
    return false;
  };
  return check_full(s, member);
}

}  // namespace gaussalg
