#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "gaussalg/sets.hpp"

namespace ga = gaussalg;

namespace {

// odometer over {0..cap}^d, keeping vectors the predicate accepts; the
// independent oracle for every set builder
std::vector<ga::Monomial> brute(ga::Index d, ga::Int cap,
                                const std::function<bool(const ga::Monomial&)>& keep) {
  std::vector<ga::Monomial> out;
  ga::Monomial m = ga::Monomial::Zero(d);
  while (true) {
    if (keep(m)) out.push_back(m);
    ga::Index i = 0;
    while (i < d && m(i) == cap) {
      m(i) = 0;
      ++i;
    }
    if (i == d) break;
    m(i) += 1;
  }
  std::sort(out.begin(), out.end(), ga::CanonicalLess{});
  return out;
}

bool equals_brute(const ga::MonomialSet& s, const std::vector<ga::Monomial>& want) {
  if (s.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (!ga::same_monomial(s[i], want[i])) return false;
  return true;
}

ga::Int min_nonzero(const ga::Monomial& m) {
  ga::Int lo = 0;
  for (ga::Index i = 0; i < m.size(); ++i)
    if (m(i) != 0 && (lo == 0 || m(i) < lo)) lo = m(i);
  return lo;
}

}  // namespace

TEST_CASE("builders against the odometer oracle") {
  auto deg = [](ga::Int r) {
    return [r](const ga::Monomial& m) { return ga::degree(m) == r; };
  };
  CHECK(equals_brute(ga::veronese(3, 5), brute(5, 1, deg(3))));
  CHECK(equals_brute(ga::veronese(2, 4), brute(4, 1, deg(2))));
  CHECK(equals_brute(ga::mon(3, 4, 4), brute(4, 4, [](const ga::Monomial& m) {
                       return ga::degree(m) == 4 && ga::support_size(m) >= 3;
                     })));
  CHECK(equals_brute(ga::mon(3, 5, 5), brute(5, 5, [](const ga::Monomial& m) {
                       return ga::degree(m) == 5 && ga::support_size(m) >= 3;
                     })));
  CHECK(equals_brute(ga::mon_star(4, 10, 5), brute(5, 3, [](const ga::Monomial& m) {
                       return ga::degree(m) == 10 && ga::support_size(m) >= 4 &&
                              m.maxCoeff() <= 3;
                     })));
  CHECK(equals_brute(ga::mon_star(4, 8, 4), brute(4, 2, [](const ga::Monomial& m) {
                       return ga::degree(m) == 8 && ga::support_size(m) >= 4 &&
                              m.maxCoeff() <= 2;
                     })));
  for (ga::Index d : {5, 6}) {
    CHECK(equals_brute(ga::e_set(d), brute(d, d - 2, [d](const ga::Monomial& m) {
                         return ga::degree(m) == 2 * d && ga::support_size(m) == 4 &&
                                m.maxCoeff() <= d - 2 && min_nonzero(m) == 1;
                       })));
  }
}

TEST_CASE("cardinalities of the named families") {
  CHECK(ga::veronese(3, 5).size() == 10);
  CHECK(ga::veronese(3, 6).size() == 20);
  CHECK(ga::veronese(3, 7).size() == 35);
  CHECK(ga::mon(3, 4, 4).size() == 13);
  CHECK(ga::mon(3, 5, 5).size() == 81);
  CHECK(ga::mon_star(4, 8, 4).size() == 1);

  const std::size_t star[] = {101, 1731, 18222, 154309};
  const std::size_t excl[] = {20, 180, 840, 2800};
  for (ga::Index d = 5; d <= 8; ++d) {
    const ga::MonomialSet s = ga::mon_star(4, 2 * d, d);
    const ga::MonomialSet e = ga::e_set(d);
    CHECK(s.size() == star[d - 5]);
    CHECK(e.size() == excl[d - 5]);
    CHECK(s.difference(e).size() == star[d - 5] - excl[d - 5]);
    for (const auto m : e) CHECK(s.contains(m));
  }
}

TEST_CASE("builder preconditions") {
  CHECK_THROWS_AS(ga::veronese(0, 4), ga::InvalidDegree);
  CHECK_THROWS_AS(ga::veronese(5, 4), ga::InvalidDegree);
  CHECK_THROWS_AS(ga::mon(0, 3, 4), ga::InvalidArgument);
  CHECK_THROWS_AS(ga::mon_star(4, 8, 2), ga::InvalidArgument);
  CHECK_THROWS_AS(ga::e_set(4), ga::InvalidArgument);
  CHECK_THROWS_AS(ga::e_set_closed(4), ga::OutOfProvenRange);
  CHECK_THROWS_AS(ga::e_set_closed(8), ga::OutOfProvenRange);
}

TEST_CASE("excluded family equals its closed description where proven") {
  for (ga::Index d : {5, 6, 7}) CHECK(ga::e_set(d) == ga::e_set_closed(d));
}

TEST_CASE("at d=8 the excluded family leaves the proven pattern") {
  // arrangements of (d-2, a, b, 1) with a+b = d+1, 1 <= a,b <= d-2
  const ga::MonomialSet e8 = ga::e_set(8);
  ga::MonomialSet pattern(8);
  std::size_t pattern_total = 0;
  for (const auto& shape :
       {ga::ExponentPartition({6, 6, 3, 1}), ga::ExponentPartition({6, 5, 4, 1})}) {
    const ga::MonomialSet orb = ga::orbit_expand(shape, 8);
    pattern_total += orb.size();
    for (const auto m : orb) CHECK(e8.contains(m));
  }
  CHECK(e8.size() > pattern_total);
  CHECK(e8.contains(ga::leading_arrangement(ga::ExponentPartition({5, 5, 5, 1}), 8)));
}

TEST_CASE("monomial set container") {
  const ga::Monomial a = ga::monomial_of({2, 0, 1});
  const ga::Monomial b = ga::monomial_of({1, 1, 1});
  const ga::MonomialSet s = ga::MonomialSet::from_monomials(3, {b, a, b});
  CHECK(s.size() == 2);  // deduplicated
  CHECK(ga::same_monomial(s[0], a));  // canonical order puts (2,0,1) first
  CHECK(s.contains(b));
  CHECK_FALSE(s.contains(ga::monomial_of({0, 0, 3})));
  CHECK_FALSE(s.contains(ga::monomial_of({1, 1})));  // wrong dimension is never a member

  const ga::MonomialSet only_a = s.difference(ga::MonomialSet::from_monomials(3, {b}));
  CHECK(only_a.size() == 1);
  CHECK(only_a.contains(a));
  CHECK(s.difference(s).empty());
  CHECK_THROWS_AS(ga::MonomialSet::from_monomials(3, {ga::monomial_of({1, 1})}),
                  ga::DimensionMismatch);
}

TEST_CASE("line serialization round trip") {
  const ga::MonomialSet s = ga::e_set(5);
  std::stringstream buf;
  s.write_lines(buf);
  const std::string text = buf.str();
  CHECK(text.substr(0, text.find('\n')) == "3,3,3,1,0");
  std::stringstream in(text);
  CHECK(ga::MonomialSet::read_lines(in) == s);

  std::stringstream ragged("1,2\n1,2,3\n");
  CHECK_THROWS_AS(ga::MonomialSet::read_lines(ragged), ga::DimensionMismatch);
}

TEST_CASE("exponent partitions") {
  const ga::ExponentPartition p({3, 2, 2});
  CHECK(p.degree() == 7);
  CHECK(p.count() == 3);
  CHECK(p.to_string() == "(3,2,2)");
  CHECK_THROWS_AS(ga::ExponentPartition({2, 3}), ga::InvalidArgument);
  CHECK_THROWS_AS(ga::ExponentPartition({2, 0}), ga::InvalidArgument);
  CHECK(ga::ExponentPartition({3, 1}) < ga::ExponentPartition({2, 2}));
  CHECK(ga::ExponentPartition({2, 2}) < ga::ExponentPartition({2, 1, 1}));
  CHECK_FALSE(p < p);
}

TEST_CASE("orbits") {
  CHECK(ga::canonical(ga::monomial_of({0, 3, 1, 2})) == ga::ExponentPartition({3, 2, 1}));
  CHECK(ga::canonical(ga::Monomial::Zero(4)).count() == 0);
  CHECK(ga::same_monomial(ga::leading_arrangement(ga::ExponentPartition({3, 2, 1}), 5),
                          ga::monomial_of({3, 2, 1, 0, 0})));
  CHECK_THROWS_AS(ga::leading_arrangement(ga::ExponentPartition({1, 1, 1}), 2),
                  ga::TooManyParts);

  const ga::ExponentPartition p({3, 3, 1});
  CHECK(ga::orbit_size(p, 4) == 12);
  const ga::MonomialSet orb = ga::orbit_expand(p, 4);
  CHECK(orb.size() == 12);
  CHECK(orb.contains(ga::monomial_of({1, 0, 3, 3})));
  for (const auto m : orb) CHECK(ga::canonical(m) == p);
  CHECK(ga::orbit_size(ga::ExponentPartition({2, 2, 2, 2, 2}), 5) == 1);

  const auto reps = ga::orbit_representatives(ga::mon_star(4, 10, 5));
  REQUIRE(reps.size() == 5);
  CHECK(reps[0] == ga::ExponentPartition({3, 3, 3, 1}));
  CHECK(reps[1] == ga::ExponentPartition({3, 3, 2, 2}));
  CHECK(reps[2] == ga::ExponentPartition({3, 3, 2, 1, 1}));
  CHECK(reps[3] == ga::ExponentPartition({3, 2, 2, 2, 1}));
  CHECK(reps[4] == ga::ExponentPartition({2, 2, 2, 2, 2}));
  std::uint64_t total = 0;
  for (const auto& r : reps) total += ga::orbit_size(r, 5);
  CHECK(total == 101);
}
