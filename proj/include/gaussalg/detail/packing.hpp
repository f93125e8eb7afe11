#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>

#include "gaussalg/core.hpp"
#include "gaussalg/sets.hpp"

namespace gaussalg::detail {

// 5-bit-per-variable packing of exponent vectors into one 64-bit key.  Usable
// when d <= 12 and every entry stays <= 30, which leaves headroom for the
// +1 perturbations the exchange scan probes with.
inline constexpr int kPackBits = 5;
inline constexpr Int kPackMax = 30;

inline bool packable_dim(Index d) { return d >= 1 && d * kPackBits <= 60; }

inline std::uint64_t pack(const Eigen::Ref<const Monomial>& m) {
  std::uint64_t k = 0;
  for (Index i = 0; i < m.size(); ++i)
    k |= static_cast<std::uint64_t>(m(i)) << (kPackBits * i);
  return k;
}

inline std::uint64_t slot(Index i) { return std::uint64_t{1} << (kPackBits * i); }

struct MixHash {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

using KeySet = std::unordered_set<std::uint64_t, MixHash>;

/// Hash index of a whole set, or nothing when the set does not fit the packing.
inline std::optional<KeySet> build_key_set(const MonomialSet& s) {
  if (!packable_dim(s.dimension())) return std::nullopt;
  KeySet keys;
  keys.reserve(s.size() * 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto m = s[i];
    for (Index j = 0; j < m.size(); ++j)
      if (m(j) < 0 || m(j) > kPackMax) return std::nullopt;
    keys.insert(pack(m));
  }
  return keys;
}

}  // namespace gaussalg::detail
