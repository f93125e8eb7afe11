#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "gaussalg/errors.hpp"

namespace gaussalg {

using Int = std::int64_t;
using Index = Eigen::Index;

/// Exponent vector of a monomial; entry i is the exponent of x_{i+1}.
using Monomial = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Matrix whose columns are exponent vectors of monomials (rows = variables).
using LogMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// -- checked 64-bit arithmetic ------------------------------------------------

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("add overflows int64");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("sub overflows int64");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("mul overflows int64");
  return r;
}

/// Division known to be exact; a nonzero remainder indicates a logic error upstream.
inline Int exact_div(Int num, Int den) {
  if (den == 0 || num % den != 0) throw ArithmeticOverflow("inexact division in fraction-free step");
  return num / den;
}

// -- monomial basics ----------------------------------------------------------

template <class D>
Int degree(const Eigen::MatrixBase<D>& m) {
  return m.sum();
}

/// Indices of the variables that occur, ascending.
template <class D>
std::vector<Index> support(const Eigen::MatrixBase<D>& m) {
  std::vector<Index> s;
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) != 0) s.push_back(i);
  return s;
}

template <class D>
Index support_size(const Eigen::MatrixBase<D>& m) {
  Index n = 0;
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) != 0) ++n;
  return n;
}

inline Monomial monomial_of(std::initializer_list<Int> exps) {
  Monomial m(static_cast<Index>(exps.size()));
  Index i = 0;
  for (Int e : exps) m(i++) = e;
  return m;
}

/// Product of monomials over a fixed ambient dimension; the empty product is 1.
inline Monomial multiply(std::span<const Monomial> ms, Index dim) {
  Monomial p = Monomial::Zero(dim);
  for (const Monomial& m : ms) {
    if (m.size() != dim) throw DimensionMismatch("multiply: mixed ambient dimensions");
    p += m;
  }
  return p;
}

inline Monomial multiply(std::span<const Monomial> ms) {
  if (ms.empty()) throw DimensionMismatch("multiply: empty product has no dimension");
  return multiply(ms, ms.front().size());
}

inline Monomial multiply(const Eigen::Ref<const Monomial>& a, const Eigen::Ref<const Monomial>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("multiply: mixed ambient dimensions");
  return a + b;
}

/// Quotient a / b; requires b to divide a in every variable.
inline Monomial divide_exact(const Eigen::Ref<const Monomial>& a, const Eigen::Ref<const Monomial>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("divide_exact: mixed ambient dimensions");
  if ((b.array() > a.array()).any()) throw NotDivisible("divide_exact: not a divisor");
  return a - b;
}

/// Matrix of exponent vectors: column j is the exponent vector of ms[j].
inline LogMatrix log_matrix(std::span<const Monomial> ms) {
  if (ms.empty()) throw DimensionMismatch("log_matrix: empty family");
  const Index d = ms.front().size();
  LogMatrix L(d, static_cast<Index>(ms.size()));
  for (Index j = 0; j < L.cols(); ++j) {
    if (ms[static_cast<std::size_t>(j)].size() != d)
      throw DimensionMismatch("log_matrix: mixed ambient dimensions");
    L.col(j) = ms[static_cast<std::size_t>(j)];
  }
  return L;
}

// -- canonical order ----------------------------------------------------------

// The canonical order on monomials of one dimension is descending lexicographic
// on exponent vectors (x1-major), i.e. the classic lex term order with the
// largest element first.  All set containers and certificate scans use it.

template <class DA, class DB>
bool same_monomial(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

template <class DA, class DB>
bool canonical_before(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  const Index n = std::min(a.size(), b.size());
  for (Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) > b(i);
  }
  return a.size() > b.size();
}

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return canonical_before(a, b); }
};

// -- exact elimination --------------------------------------------------------

/// Determinant of an integer matrix, computed exactly by fraction-free
/// (Bareiss) elimination with row pivoting.  Throws NotSquare for rectangular
/// input and ArithmeticOverflow when an intermediate leaves int64 range.
inline Int determinant(const LogMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return 1;
  LogMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = exact_div(checked_sub(checked_mul(a(k, k), a(i, j)), checked_mul(a(i, k), a(k, j))), prev);
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

/// Incremental fraction-free elimination over the integers.  Columns are fed
/// one at a time; dependent columns are rejected without changing the state,
/// and the last committed column can be popped in O(1).  Committed state k
/// keeps the column reduced against pivots 1..k-1, so earlier state never
/// changes and a snapshot per search depth is just push/pop.
class Eliminator {
 public:
  explicit Eliminator(Index dim) : dim_(dim), reduced_(dim, dim), work_(dim) {
    pivot_rows_.reserve(static_cast<std::size_t>(dim));
    pivots_.reserve(static_cast<std::size_t>(dim));
  }

  Index dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(pivots_.size()); }
  bool full() const { return rank() == dim_; }

  /// Tries to append a column.  Returns false (state unchanged) when the
  /// column is linearly dependent on those already committed.
  bool add(const Eigen::Ref<const Monomial>& col) {
    if (col.size() != dim_) throw DimensionMismatch("Eliminator: wrong column size");
    if (full()) return false;
    work_ = col;
    const Index k = rank();
    for (Index i = 0; i < k; ++i) {
      const Int p = pivots_[static_cast<std::size_t>(i)];
      const Int prev = i == 0 ? 1 : pivots_[static_cast<std::size_t>(i - 1)];
      const Int vi = work_(pivot_rows_[static_cast<std::size_t>(i)]);
      for (Index r = 0; r < dim_; ++r)
        work_(r) = exact_div(checked_sub(checked_mul(p, work_(r)), checked_mul(vi, reduced_(r, i))), prev);
    }
    Index row = -1;
    for (Index r = 0; r < dim_; ++r)
      if (work_(r) != 0) {
        row = r;
        break;
      }
    if (row < 0) return false;
    reduced_.col(k) = work_;
    pivot_rows_.push_back(row);
    pivots_.push_back(work_(row));
    return true;
  }

  /// Undoes the most recent successful add.
  void pop() {
    pivot_rows_.pop_back();
    pivots_.pop_back();
  }

  /// Determinant of the committed columns, in insertion order.  Valid only
  /// when the matrix is square (rank == dim): the last fraction-free pivot is
  /// the determinant of the pivot-row-permuted matrix, and the parity of the
  /// pivot-row sequence restores the sign.
  Int determinant() const {
    if (!full()) throw NotSquare("Eliminator: determinant requires a full square system");
    Int sign = 1;
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
      for (std::size_t j = i + 1; j < pivot_rows_.size(); ++j)
        if (pivot_rows_[i] > pivot_rows_[j]) sign = -sign;
    return checked_mul(sign, pivots_.back());
  }

 private:
  Index dim_;
  LogMatrix reduced_;
  std::vector<Index> pivot_rows_;
  std::vector<Int> pivots_;
  Monomial work_;
};

/// Rank of an integer matrix over the rationals, computed exactly.
inline Index rank(const LogMatrix& m) {
  Eliminator e(m.rows());
  for (Index j = 0; j < m.cols(); ++j) {
    if (e.full()) break;
    e.add(m.col(j));
  }
  return e.rank();
}

}  // namespace gaussalg
