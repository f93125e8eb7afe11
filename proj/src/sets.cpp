#include "gaussalg/sets.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace gaussalg {

void MonomialSet::append_sorted(const Eigen::Ref<const Monomial>& m) {
  if (m.size() != dim_) throw DimensionMismatch("MonomialSet: wrong element dimension");
  data_.insert(data_.end(), m.data(), m.data() + m.size());
}

MonomialSet MonomialSet::from_monomials(Index dim, const std::vector<Monomial>& elems) {
  for (const Monomial& m : elems)
    if (m.size() != dim) throw DimensionMismatch("MonomialSet: wrong element dimension");
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Monomial &ma = elems[a], &mb = elems[b];
    if (canonical_before(ma, mb)) return true;
    if (canonical_before(mb, ma)) return false;
    return a < b;
  });
  MonomialSet s(dim);
  s.data_.reserve(elems.size() * static_cast<std::size_t>(dim));
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Monomial& m = elems[order[k]];
    if (k > 0 && same_monomial(m, elems[order[k - 1]])) continue;
    s.append_sorted(m);
  }
  return s;
}

bool MonomialSet::contains(const Eigen::Ref<const Monomial>& m) const {
  if (m.size() != dim_) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (canonical_before((*this)[mid], m))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < size() && same_monomial((*this)[lo], m);
}

MonomialSet MonomialSet::difference(const MonomialSet& other) const {
  if (!empty() && !other.empty() && dim_ != other.dim_)
    throw DimensionMismatch("difference: mixed ambient dimensions");
  MonomialSet out(dim_);
  for (std::size_t i = 0; i < size(); ++i)
    if (!other.contains((*this)[i])) out.append_sorted((*this)[i]);
  return out;
}

void MonomialSet::write_lines(std::ostream& os) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const auto m = (*this)[i];
    for (Index j = 0; j < dim_; ++j) {
      if (j) os << ',';
      os << m(j);
    }
    os << '\n';
  }
}

MonomialSet MonomialSet::read_lines(std::istream& is) {
  std::vector<Monomial> elems;
  std::string line;
  Index dim = -1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<Int> exps;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) exps.push_back(std::stoll(field));
    Monomial m(static_cast<Index>(exps.size()));
    for (std::size_t j = 0; j < exps.size(); ++j) m(static_cast<Index>(j)) = exps[j];
    if (dim < 0) dim = m.size();
    if (m.size() != dim) throw DimensionMismatch("read_lines: ragged rows");
    elems.push_back(std::move(m));
  }
  if (dim < 0) return MonomialSet();
  return from_monomials(dim, elems);
}

ExponentPartition::ExponentPartition(std::vector<Int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidArgument("ExponentPartition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InvalidArgument("ExponentPartition: parts must be weakly decreasing");
  }
}

Int ExponentPartition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }

std::string ExponentPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  s += ')';
  return s;
}

bool ExponentPartition::operator<(const ExponentPartition& o) const {
  const std::size_t n = std::max(parts_.size(), o.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Int a = i < parts_.size() ? parts_[i] : 0;
    const Int b = i < o.parts_.size() ? o.parts_[i] : 0;
    if (a != b) return a > b;
  }
  return false;
}

ExponentPartition canonical(const Eigen::Ref<const Monomial>& m) {
  std::vector<Int> parts;
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) != 0) parts.push_back(m(i));
  std::sort(parts.begin(), parts.end(), std::greater<Int>());
  return ExponentPartition(std::move(parts));
}

std::vector<ExponentPartition> orbit_representatives(const MonomialSet& s) {
  std::set<ExponentPartition> reps;
  for (std::size_t i = 0; i < s.size(); ++i) reps.insert(canonical(s[i]));
  return {reps.begin(), reps.end()};
}

Monomial leading_arrangement(const ExponentPartition& p, Index d) {
  if (static_cast<Index>(p.count()) > d)
    throw TooManyParts("leading_arrangement: more parts than variables");
  Monomial m = Monomial::Zero(d);
  for (std::size_t i = 0; i < p.count(); ++i) m(static_cast<Index>(i)) = p.parts()[i];
  return m;
}

MonomialSet orbit_expand(const ExponentPartition& p, Index d) {
  if (static_cast<Index>(p.count()) > d)
    throw TooManyParts("orbit_expand: more parts than variables");
  std::vector<Int> v(static_cast<std::size_t>(d), 0);
  std::copy(p.parts().begin(), p.parts().end(), v.begin());
  std::sort(v.begin(), v.end());
  std::vector<Monomial> elems;
  do {
    Monomial m(d);
    for (Index i = 0; i < d; ++i) m(i) = v[static_cast<std::size_t>(i)];
    elems.push_back(std::move(m));
  } while (std::next_permutation(v.begin(), v.end()));
  return MonomialSet::from_monomials(d, elems);
}

std::uint64_t orbit_size(const ExponentPartition& p, Index d) {
  if (static_cast<Index>(p.count()) > d)
    throw TooManyParts("orbit_size: more parts than variables");
  // d! divided by the factorials of the value multiplicities (zeros included)
  std::uint64_t n = 1;
  Index used = 0;
  auto choose_run = [&](Index run) {
    // multiply by C(d - used, run)
    for (Index i = 0; i < run; ++i) {
      n = n * static_cast<std::uint64_t>(d - used) / static_cast<std::uint64_t>(i + 1);
      ++used;
    }
  };
  const auto& parts = p.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    choose_run(static_cast<Index>(j - i));
    i = j;
  }
  return n;
}

namespace {

// Enumerates exponent vectors of total degree r with entries capped by hi,
// first coordinate largest first, so emission order is descending
// lexicographic (the canonical order).
void for_each_composition(Int r, Index d, Int cap, Monomial& buf, Index pos,
                          const std::function<void(const Monomial&)>& fn) {
  if (pos == d) {
    if (r == 0) fn(buf);
    return;
  }
  const Int slack = cap * (d - pos - 1);
  for (Int e = std::min(r, cap); e >= 0; --e) {
    if (r - e > slack) continue;
    buf(pos) = e;
    for_each_composition(r - e, d, cap, buf, pos + 1, fn);
  }
  buf(pos) = 0;
}

MonomialSet build_filtered(Int r, Index d, Int cap, const std::function<bool(const Monomial&)>& keep) {
  MonomialSet s(d);
  Monomial buf = Monomial::Zero(d);
  for_each_composition(r, d, cap, buf, 0, [&](const Monomial& m) {
    if (keep(m)) s.append_sorted(m);
  });
  return s;
}

Int min_nonzero(const Monomial& m) {
  Int mn = 0;
  for (Index i = 0; i < m.size(); ++i)
    if (m(i) != 0 && (mn == 0 || m(i) < mn)) mn = m(i);
  return mn;
}

}  // namespace

MonomialSet veronese(Int r, Index d) {
  if (r < 1 || r > static_cast<Int>(d)) throw InvalidDegree("veronese: need 1 <= r <= d");
  return build_filtered(r, d, 1, [](const Monomial&) { return true; });
}

MonomialSet mon(Int t, Int r, Index d) {
  if (t < 1 || r < 1 || d < 1) throw InvalidArgument("mon: need t, r, d >= 1");
  return build_filtered(r, d, r, [&](const Monomial& m) { return support_size(m) >= t; });
}

MonomialSet mon_star(Int t, Int r, Index d) {
  if (t < 1 || r < 1) throw InvalidArgument("mon_star: need t, r >= 1");
  if (d < 3) throw InvalidArgument("mon_star: need d >= 3");
  return build_filtered(r, d, static_cast<Int>(d) - 2,
                        [&](const Monomial& m) { return support_size(m) >= t; });
}

MonomialSet e_set(Index d) {
  if (d < 5) throw InvalidArgument("e_set: need d >= 5");
  return build_filtered(2 * static_cast<Int>(d), d, static_cast<Int>(d) - 2, [&](const Monomial& m) {
    return support_size(m) == 4 && min_nonzero(m) == 1;
  });
}

MonomialSet e_set_closed(Index d) {
  if (d < 5 || d > 7)
    throw OutOfProvenRange("e_set_closed: description proven only for d = 5, 6, 7");
  std::vector<ExponentPartition> shapes;
  const Int top = static_cast<Int>(d) - 2;
  for (Int a = 1; a <= top; ++a) {
    const Int b = static_cast<Int>(d) + 1 - a;
    if (b < 1 || b > top || b > a) continue;
    std::vector<Int> parts{top, a, b, Int{1}};
    std::sort(parts.begin(), parts.end(), std::greater<Int>());
    ExponentPartition p(std::move(parts));
    if (std::find(shapes.begin(), shapes.end(), p) == shapes.end()) shapes.push_back(std::move(p));
  }
  std::vector<Monomial> elems;
  for (const ExponentPartition& p : shapes) {
    MonomialSet orbit = orbit_expand(p, d);
    for (std::size_t i = 0; i < orbit.size(); ++i) elems.emplace_back(orbit[i]);
  }
  return MonomialSet::from_monomials(d, elems);
}

}  // namespace gaussalg
