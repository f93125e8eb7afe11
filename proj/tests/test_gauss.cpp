#include <doctest.h>

#include <map>

#include "gaussalg/gauss.hpp"
#include "gaussalg/reference.hpp"

namespace ga = gaussalg;

namespace {

bool same_witness(const ga::Witness& a, const ga::Witness& b) {
  if (a.dim != b.dim || a.det != b.det) return false;
  if (!ga::same_monomial(a.target, b.target)) return false;
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    if (!ga::same_monomial(a.generators[i], b.generators[i])) return false;
  return true;
}

std::vector<ga::ExponentPartition> confirmed_partitions(const ga::EqualityReport& rep) {
  std::vector<ga::ExponentPartition> out;
  for (const auto& row : rep.targets)
    if (row.status == ga::TargetStatus::confirmed) out.push_back(row.partition);
  return out;
}

}  // namespace

TEST_CASE("the reference corpus validates") {
  const auto& refs = ga::reference_witnesses();
  REQUIRE(refs.size() == 22);
  std::map<ga::Index, int> per_dim;
  for (const ga::Witness& w : refs) {
    CHECK(ga::validate_witness(w) == ga::WitnessIssue::ok);
    ++per_dim[w.dim];
  }
  CHECK(per_dim[5] == 4);
  CHECK(per_dim[6] == 7);
  CHECK(per_dim[7] == 11);
  CHECK(refs[0].det == 3);
  CHECK(refs[1].det == -3);
  CHECK(refs[4].det == 9);  // first d=6 construction
}

TEST_CASE("validation distinguishes every failure mode") {
  const ga::Witness good = ga::reference_witnesses()[0];

  ga::Witness w = good;
  w.target(0) += 1;
  CHECK(ga::validate_witness(w) == ga::WitnessIssue::wrong_product);

  w = good;
  w.generators.pop_back();
  CHECK(ga::validate_witness(w) == ga::WitnessIssue::bad_shape);

  w = good;
  w.generators[0] = ga::monomial_of({2, 1, 0, 0, 0});
  CHECK(ga::validate_witness(w) == ga::WitnessIssue::bad_generator);

  w = good;
  w.det += 1;
  CHECK(ga::validate_witness(w) == ga::WitnessIssue::det_mismatch);

  // duplicated generator: the product stays consistent with a tweaked target
  // but the exponent matrix degenerates
  const ga::Monomial g1 = ga::monomial_of({1, 1, 1, 0});
  const ga::Monomial g2 = ga::monomial_of({1, 1, 0, 1});
  const ga::Monomial g3 = ga::monomial_of({1, 0, 1, 1});
  ga::Witness dup;
  dup.dim = 4;
  dup.generators = {g1, g1, g2, g3};
  dup.target = ga::multiply(std::span<const ga::Monomial>(dup.generators), 4) -
               ga::Monomial::Ones(4);
  dup.det = 0;
  CHECK(ga::validate_witness(dup) == ga::WitnessIssue::singular_log);
}

TEST_CASE("witness search finds the kept shapes and rejects the excluded one") {
  const auto reps = ga::orbit_representatives(ga::mon_star(4, 10, 5));
  REQUIRE(reps.size() == 5);
  for (const auto& p : reps) {
    const ga::SearchResult res = ga::witness_search(ga::leading_arrangement(p, 5), 3);
    if (p == ga::ExponentPartition({3, 3, 3, 1})) {
      CHECK(res.status == ga::SearchStatus::no_witness);
      CHECK_FALSE(res.witness.has_value());
    } else {
      REQUIRE(res.status == ga::SearchStatus::found);
      REQUIRE(res.witness.has_value());
      CHECK(ga::validate_witness(*res.witness) == ga::WitnessIssue::ok);
      CHECK(ga::canonical(res.witness->target) == p);
      CHECK(res.nodes > 0);
    }
  }
}

TEST_CASE("witness search respects its budget") {
  ga::SearchOptions tight;
  tight.budget = 1;
  const auto res = ga::witness_search(ga::monomial_of({2, 2, 2, 2, 2}), 3, tight);
  CHECK(res.status == ga::SearchStatus::budget_exhausted);
  CHECK(res.nodes <= tight.budget + 1);  // the counter trips one past the limit
  CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("witness search works at other generator degrees") {
  const auto res = ga::witness_search(ga::monomial_of({1, 1, 1}), 2);
  REQUIRE(res.status == ga::SearchStatus::found);
  CHECK(ga::validate_witness(*res.witness) == ga::WitnessIssue::ok);
  CHECK(std::abs(res.witness->det) == 2);
}

TEST_CASE("witness search input guards") {
  CHECK_THROWS_AS(ga::witness_search(ga::monomial_of({1, 1, 1, 1, 1}), 3), ga::DegreeMismatch);
  CHECK_THROWS_AS(ga::witness_search(ga::monomial_of({2, 2, 2, 2, 2}), 0), ga::InvalidDegree);
  CHECK_THROWS_AS(ga::witness_search(ga::monomial_of({2, 2, 2, 2, 2}), 6), ga::InvalidDegree);
  CHECK_THROWS_AS(ga::witness_search(ga::monomial_of({-1, 3, 4, 2, 2}), 3), ga::InvalidArgument);
}

TEST_CASE("reduction pair selection") {
  auto pair = ga::pick_reduction_indices(ga::monomial_of({3, 2, 2, 2, 1, 0, 0, 0}));
  CHECK(pair == std::pair<ga::Index, ga::Index>{0, 1});
  pair = ga::pick_reduction_indices(ga::monomial_of({1, 3, 2}));
  CHECK(pair == std::pair<ga::Index, ga::Index>{1, 2});
  pair = ga::pick_reduction_indices(ga::monomial_of({2, 2, 2, 2}));
  CHECK(pair == std::pair<ga::Index, ga::Index>{0, 1});
  CHECK_THROWS_AS(ga::pick_reduction_indices(ga::monomial_of({2, 1, 1})), ga::NoValidPair);
}

TEST_CASE("lifting preserves the determinant exactly") {
  for (const ga::Witness& w : ga::reference_witnesses()) {
    if (w.dim != 5) continue;
    const auto [r, s] = ga::pick_reduction_indices(w.target);
    const ga::Witness up = ga::lift_witness(w, r, s);
    CHECK(up.dim == 6);
    CHECK(ga::validate_witness(up) == ga::WitnessIssue::ok);
    CHECK(up.det == w.det);
    CHECK(up.target(r) == w.target(r) + 1);
    CHECK(up.target(5) == 0);
  }
}

TEST_CASE("lifting guards") {
  const ga::Witness w = ga::reference_witnesses()[0];
  CHECK_THROWS_AS(ga::lift_witness(w, 2, 2), ga::InvalidIndices);
  CHECK_THROWS_AS(ga::lift_witness(w, 0, 5), ga::InvalidIndices);

  ga::Witness quadratic;
  quadratic.dim = 3;
  quadratic.generators = {ga::monomial_of({1, 1, 0}), ga::monomial_of({0, 1, 1}),
                          ga::monomial_of({1, 0, 1})};
  quadratic.target = ga::monomial_of({1, 1, 1});
  quadratic.det = ga::determinant(ga::log_matrix(quadratic.generators));
  REQUIRE(ga::validate_witness(quadratic) == ga::WitnessIssue::ok);
  CHECK_THROWS_AS(ga::lift_witness(quadratic, 0, 1), ga::InvalidArgument);
}

TEST_CASE("relabeling variables") {
  const ga::Witness w = ga::reference_witnesses()[1];  // d=5, target (3,2,2,2,1)
  const std::vector<ga::Index> reverse{4, 3, 2, 1, 0};
  const ga::Witness r = ga::relabel_witness(w, reverse);
  CHECK(ga::validate_witness(r) == ga::WitnessIssue::ok);
  CHECK(ga::same_monomial(r.target, ga::monomial_of({1, 2, 2, 2, 3})));
  CHECK(ga::canonical(r.target) == ga::canonical(w.target));
  CHECK(r.det == w.det);  // reversing five variables is an even permutation

  const std::vector<ga::Index> identity{0, 1, 2, 3, 4};
  CHECK(same_witness(ga::relabel_witness(w, identity), w));
  CHECK_THROWS_AS(ga::relabel_witness(w, {0, 0, 1, 2, 3}), ga::InvalidArgument);
  CHECK_THROWS_AS(ga::relabel_witness(w, {0, 1, 2}), ga::InvalidArgument);
}

TEST_CASE("predicted generator sets") {
  const ga::MonomialSet base = ga::predicted_generators(4);
  REQUIRE(base.size() == 1);
  CHECK(ga::same_monomial(base[0], ga::monomial_of({2, 2, 2, 2})));
  CHECK(ga::predicted_generators(5).size() == 81);
  CHECK(ga::predicted_generators(6).size() == 1551);
  CHECK(ga::predicted_generators(7).size() == 17382);
  CHECK(ga::predicted_generators(8).size() == 151509);
  CHECK_THROWS_AS(ga::predicted_generators(3), ga::InvalidArgument);
}

TEST_CASE("enumeration over small squarefree families") {
  const ga::Enumeration e24 = ga::enumerate_gauss(ga::veronese(2, 4));
  CHECK(e24.products.size() == 12);
  CHECK(e24.products == ga::mon(3, 4, 4).difference(ga::MonomialSet::from_monomials(
                            4, {ga::monomial_of({1, 1, 1, 1})})));

  const ga::Enumeration e25 = ga::enumerate_gauss(ga::veronese(2, 5));
  CHECK(e25.products == ga::mon(3, 5, 5));

  const ga::Enumeration e36 = ga::enumerate_gauss(ga::veronese(3, 6), 2);
  CHECK(e36.products.size() == 1551);
  CHECK(e36.products == ga::predicted_generators(6));
  CHECK(e36.nonsingular == 20820);

  for (const auto& [label, w] : e36.first_witness) {
    CHECK(ga::validate_witness(w) == ga::WitnessIssue::ok);
    CHECK(ga::canonical(w.target) == label);
  }
}

TEST_CASE("enumeration is independent of the thread count") {
  const ga::Enumeration a = ga::enumerate_gauss(ga::veronese(3, 5), 1);
  const ga::Enumeration b = ga::enumerate_gauss(ga::veronese(3, 5), 3);
  CHECK(a.products == b.products);
  CHECK(a.nonsingular == b.nonsingular);
  REQUIRE(a.first_witness.size() == b.first_witness.size());
  auto it = a.first_witness.begin();
  auto jt = b.first_witness.begin();
  for (; it != a.first_witness.end(); ++it, ++jt) {
    CHECK(it->first == jt->first);
    CHECK(same_witness(it->second, jt->second));
  }
}

TEST_CASE("the top corner family collapses to a single generator") {
  for (ga::Index d = 4; d <= 8; ++d) {
    const ga::MonomialSet g = ga::gauss_generators(ga::veronese(d - 1, d));
    REQUIRE(g.size() == 1);
    ga::Monomial want = ga::Monomial::Constant(d, d - 2);
    CHECK(ga::same_monomial(g[0], want));
  }
}

TEST_CASE("enumeration input guards") {
  CHECK_THROWS_AS(ga::enumerate_gauss(ga::MonomialSet(3)), ga::EmptySet);
  CHECK_THROWS_AS(ga::enumerate_gauss(ga::MonomialSet::from_monomials(
                      3, {ga::monomial_of({1, 1, 1})})),
                  ga::RankDeficient);
  const ga::MonomialSet mixed = ga::MonomialSet::from_monomials(
      3, {ga::monomial_of({1, 1, 0}), ga::monomial_of({1, 1, 1})});
  CHECK_THROWS_AS(ga::enumerate_gauss(mixed), ga::MixedDegrees);
}

TEST_CASE("equality verification agrees across modes at d=5") {
  const ga::EqualityReport enu = ga::verify_equality(5, ga::VerifyMode::enumerate);
  CHECK(enu.confirmed());
  CHECK(enu.target_size == 81);
  CHECK(enu.extra.empty());
  REQUIRE(enu.targets.size() == 4);

  const ga::EqualityReport wit = ga::verify_equality(5, ga::VerifyMode::witness);
  CHECK(wit.confirmed());
  CHECK(confirmed_partitions(enu) == confirmed_partitions(wit));
  for (const auto& row : wit.targets) {
    REQUIRE(row.witness.has_value());
    CHECK(ga::validate_witness(*row.witness) == ga::WitnessIssue::ok);
    CHECK(ga::canonical(row.witness->target) == row.partition);
  }
  CHECK_THROWS_AS(ga::verify_equality(4, ga::VerifyMode::enumerate), ga::InvalidArgument);
}

TEST_CASE("witness tables can be cached and are revalidated") {
  std::map<ga::Index, ga::WitnessTable> store;
  int loads = 0, stores = 0;
  ga::VerifyOptions opts;
  opts.load_table = [&](ga::Index k) -> std::optional<ga::WitnessTable> {
    ++loads;
    const auto it = store.find(k);
    if (it == store.end()) return std::nullopt;
    return it->second;
  };
  opts.store_table = [&](ga::Index k, const ga::WitnessTable& t) {
    ++stores;
    store[k] = t;
  };

  const ga::EqualityReport first = ga::verify_equality(6, ga::VerifyMode::witness, opts);
  CHECK(first.confirmed());
  CHECK(stores >= 2);  // levels 4 and 5
  REQUIRE(store.count(5) == 1);

  const int loads_before = loads;
  const ga::EqualityReport second = ga::verify_equality(6, ga::VerifyMode::witness, opts);
  CHECK(second.confirmed());
  CHECK(loads > loads_before);
  CHECK(confirmed_partitions(first) == confirmed_partitions(second));

  // a corrupted cache entry must be rejected and recomputed
  store[5].begin()->second.det += 1;
  const ga::EqualityReport third = ga::verify_equality(6, ga::VerifyMode::witness, opts);
  CHECK(third.confirmed());
}

TEST_CASE("budget exhaustion surfaces in the report") {
  ga::VerifyOptions opts;
  opts.budget = 1;
  const ga::EqualityReport rep = ga::verify_equality(5, ga::VerifyMode::witness, opts);
  CHECK_FALSE(rep.confirmed());
  CHECK(rep.dim == 4);  // the base level is already starved
  CHECK(rep.exhausted_count() > 0);
}

TEST_CASE("conjecture check at d=8") {
  ga::VerifyOptions opts;
  opts.samples = 100;
  opts.seed = 7;
  const ga::EqualityReport rep = ga::conjecture_check(8, opts);
  CHECK(rep.confirmed());
  CHECK(rep.dim == 8);
  CHECK(rep.target_size == 151509);
  REQUIRE(rep.sample.has_value());
  CHECK(rep.sample->samples == 100);
  CHECK(rep.sample->escapes.empty());
  CHECK(rep.sample->nonsingular > 0);

  // deterministic for a fixed seed, regardless of threads
  ga::VerifyOptions threaded = opts;
  threaded.threads = 3;
  const ga::EqualityReport rep2 = ga::conjecture_check(8, threaded);
  CHECK(rep2.sample->nonsingular == rep.sample->nonsingular);
  CHECK(confirmed_partitions(rep2) == confirmed_partitions(rep));

  CHECK_THROWS_AS(ga::conjecture_check(7, opts), ga::InvalidArgument);
}
