#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gaussalg/sets.hpp"

namespace gaussalg {

/// Certificate that `target` is a Gauss generator of the algebra spanned by
/// squarefree monomials of one degree: d of them whose product equals
/// target * (x_1...x_d) and whose exponent matrix is nonsingular.
struct Witness {
  Index dim = 0;
  Monomial target;
  std::vector<Monomial> generators;
  Int det = 0;
  std::uint64_t nodes = 0;  // search nodes spent finding it; 0 when derived
};

enum class WitnessIssue {
  ok,
  bad_shape,      // counts or dimensions inconsistent
  bad_generator,  // a generator is not squarefree of the common degree
  wrong_product,  // generator product != target * x_1...x_d
  singular_log,   // exponent matrix is singular
  det_mismatch,   // recorded determinant differs from the recomputed one
};

/// Recomputes every invariant of a witness from scratch.
WitnessIssue validate_witness(const Witness& w);

enum class SearchStatus { found, no_witness, budget_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::no_witness;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

struct SearchOptions {
  std::uint64_t budget = 10'000'000;  // committed placements before giving up
};

/// Backtracking search for a witness made of squarefree degree-r generators.
/// Exhaustive up to the node budget: no_witness is only reported once every
/// viable subset has been pruned or visited.  Requires
/// degree(target) == d * (r - 1).
SearchResult witness_search(const Eigen::Ref<const Monomial>& target, Int r,
                            const SearchOptions& opts = {});

/// Positions of the two largest exponents of m, ties broken toward the
/// smaller index.  Both exponents must exceed 1 (throws NoValidPair).
std::pair<Index, Index> pick_reduction_indices(const Eigen::Ref<const Monomial>& m);

/// Lifts a witness from dimension d-1 to dimension d: the target gains
/// x_r x_s, the generator list gains x_r x_s x_d.  The new exponent matrix
/// is block triangular over the old one, so the determinant is unchanged.
/// Requires cubic generators and r != s within range (throws InvalidIndices
/// or InvalidArgument).
Witness lift_witness(const Witness& w, Index r, Index s);

/// Applies the variable relabeling sigma (old position k -> sigma[k]) to
/// target and generators; the determinant is recomputed.
Witness relabel_witness(const Witness& w, const std::vector<Index>& sigma);

/// The predicted Gauss generator set of the squarefree cubic family in
/// dimension d: monomials of degree 2d with support >= 4 and exponents
/// <= d - 2, minus the excluded family (d >= 5; at d = 4 the excluded
/// family is empty).
MonomialSet predicted_generators(Index d);

struct Enumeration {
  MonomialSet products;                            // the Gauss generators
  std::map<ExponentPartition, Witness> first_witness;  // earliest subset per orbit
  std::uint64_t nodes = 0;                         // committed subset prefixes
  std::uint64_t nonsingular = 0;                   // nonsingular d-subsets seen
};

/// Enumerates every nonsingular d-subset of gens in colexicographic order and
/// collects the products g_1...g_d / (x_1...x_d).  Requires gens of one
/// degree spanning full rank (throws MixedDegrees, EmptySet, RankDeficient).
Enumeration enumerate_gauss(const MonomialSet& gens, int threads = 1);

/// Products only; see enumerate_gauss.
MonomialSet gauss_generators(const MonomialSet& gens, int threads = 1);

enum class VerifyMode { enumerate, witness };

enum class TargetStatus { confirmed, missing, budget_exhausted };

struct TargetRecord {
  ExponentPartition partition;
  std::uint64_t orbit = 0;  // arrangements of the partition in dimension d
  TargetStatus status = TargetStatus::missing;
  std::optional<Witness> witness;
  std::uint64_t nodes = 0;
};

struct SampleStats {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;     // random d-subsets drawn
  std::uint64_t nonsingular = 0;
  std::vector<Monomial> escapes;  // products that left the predicted set
};

struct EqualityReport {
  Index dim = 0;
  VerifyMode mode = VerifyMode::witness;
  std::uint64_t target_size = 0;      // size of the predicted set
  std::vector<TargetRecord> targets;  // one row per orbit of the predicted set
  std::vector<std::pair<ExponentPartition, std::uint64_t>> extra;  // outside orbits
  std::uint64_t nodes = 0;
  std::optional<SampleStats> sample;

  bool confirmed() const;
  std::uint64_t missing_count() const;
  std::uint64_t exhausted_count() const;
};

/// Map from orbit label to a validated witness whose target is the leading
/// arrangement of the label.
using WitnessTable = std::map<ExponentPartition, Witness>;

struct VerifyOptions {
  int threads = 1;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  /// Optional persistence hooks for intermediate witness tables (dimensions
  /// below the requested one).  Loaded tables are revalidated before use.
  std::function<std::optional<WitnessTable>(Index)> load_table;
  std::function<void(Index, const WitnessTable&)> store_table;
};

/// Checks that the Gauss generators of the squarefree cubic family in
/// dimension d are exactly predicted_generators(d).  enumerate mode walks all
/// d-subsets; witness mode derives one witness per orbit, searching
/// full-support orbits and lifting the rest from dimension d-1 down to the
/// base case d = 4.  Requires d >= 5.
EqualityReport verify_equality(Index d, VerifyMode mode, const VerifyOptions& opts = {});

/// Witness-mode equality check beyond the proven range (d >= 8), plus a
/// seeded random sample of nonsingular subsets to test the reverse
/// containment.  If a dimension below d fails first, its report is returned.
EqualityReport conjecture_check(Index d, const VerifyOptions& opts = {});

}  // namespace gaussalg
