#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gaussalg/core.hpp"

namespace gaussalg {

/// Immutable set of monomials of one ambient dimension, kept in canonical
/// order (descending lexicographic).  Storage is one flat column-major block
/// so that scans over large sets stay cache friendly.
class MonomialSet {
 public:
  MonomialSet() = default;
  explicit MonomialSet(Index dim) : dim_(dim) {}

  /// Builds a set from arbitrary monomials: sorts canonically, drops duplicates.
  static MonomialSet from_monomials(Index dim, const std::vector<Monomial>& elems);

  Index dimension() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : data_.size() / static_cast<std::size_t>(dim_); }
  bool empty() const { return data_.empty(); }

  Eigen::Map<const Monomial> operator[](std::size_t i) const {
    return Eigen::Map<const Monomial>(data_.data() + i * static_cast<std::size_t>(dim_), dim_);
  }

  bool contains(const Eigen::Ref<const Monomial>& m) const;

  /// Elements of *this not in other (same dimension required).
  MonomialSet difference(const MonomialSet& other) const;

  bool operator==(const MonomialSet& other) const {
    return dim_ == other.dim_ && data_ == other.data_;
  }

  /// One monomial per line as comma-separated exponents, in canonical order.
  void write_lines(std::ostream& os) const;
  static MonomialSet read_lines(std::istream& is);

  class const_iterator {
   public:
    const_iterator(const MonomialSet* s, std::size_t i) : s_(s), i_(i) {}
    Eigen::Map<const Monomial> operator*() const { return (*s_)[i_]; }
    const_iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return i_ != o.i_; }
    bool operator==(const const_iterator& o) const { return i_ == o.i_; }

   private:
    const MonomialSet* s_;
    std::size_t i_;
  };
  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, size()}; }

  /// Appends without re-sorting; caller guarantees canonical order is kept.
  void append_sorted(const Eigen::Ref<const Monomial>& m);

 private:
  Index dim_ = 0;
  std::vector<Int> data_;
};

/// Weakly decreasing positive exponent multiset; the label of a symmetric
/// orbit of monomials.
class ExponentPartition {
 public:
  ExponentPartition() = default;
  explicit ExponentPartition(std::vector<Int> parts);

  const std::vector<Int>& parts() const { return parts_; }
  std::size_t count() const { return parts_.size(); }
  Int degree() const;
  std::string to_string() const;

  bool operator==(const ExponentPartition& o) const { return parts_ == o.parts_; }
  /// Canonical order on partitions: descending lexicographic with shorter
  /// tuples padded by zeros, matching the order of their largest arrangements.
  bool operator<(const ExponentPartition& o) const;

 private:
  std::vector<Int> parts_;
};

/// Orbit label of a monomial: its nonzero exponents sorted decreasingly.
ExponentPartition canonical(const Eigen::Ref<const Monomial>& m);

/// Distinct orbit labels occurring in s, in canonical order.
std::vector<ExponentPartition> orbit_representatives(const MonomialSet& s);

/// The arrangement of p that comes first in canonical order: exponents
/// weakly decreasing, zeros at the end.
Monomial leading_arrangement(const ExponentPartition& p, Index d);

/// All arrangements of p in dimension d (zeros fill the free slots).
MonomialSet orbit_expand(const ExponentPartition& p, Index d);

/// Number of arrangements of p in dimension d.
std::uint64_t orbit_size(const ExponentPartition& p, Index d);

/// Squarefree monomials of degree r in d variables.
MonomialSet veronese(Int r, Index d);

/// Monomials of degree r in d variables with support size at least t.
MonomialSet mon(Int t, Int r, Index d);

/// As mon, but every exponent is additionally capped by d - 2.
MonomialSet mon_star(Int t, Int r, Index d);

/// Excluded family: degree-2d monomials in d variables with every exponent at
/// most d - 2, support of size exactly 4, and smallest nonzero exponent 1.
/// Equivalently the monomials x_i x_j x_k x_l * v^2 with v squarefree of
/// degree d - 3 supported inside {i,j,k,l}: squaring v doubles d - 3 of the
/// four exponents of the squarefree quartic and the remaining one stays 1,
/// and conversely an exponent-1 slot together with the cap d - 2 forces
/// exactly this shape.
MonomialSet e_set(Index d);

/// Closed-form description of e_set proven only for d = 5, 6, 7: arrangements
/// of (d-2, a, b, 1) with a + b = d + 1 and 1 <= a, b <= d - 2.  Throws
/// OutOfProvenRange outside that window (at d = 8 it already misses the
/// shape (5,5,5,1)).
MonomialSet e_set_closed(Index d);

}  // namespace gaussalg
