#include "gaussalg/gauss.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gaussalg/detail/packing.hpp"
#include "gaussalg/parallel.hpp"
#include "gaussalg/polymatroid.hpp"

namespace gaussalg {

WitnessIssue validate_witness(const Witness& w) {
  if (w.dim < 1 || w.target.size() != w.dim ||
      static_cast<Index>(w.generators.size()) != w.dim)
    return WitnessIssue::bad_shape;
  for (const Monomial& g : w.generators)
    if (g.size() != w.dim) return WitnessIssue::bad_shape;
  if ((w.target.array() < 0).any()) return WitnessIssue::bad_shape;
  const Int r = degree(w.generators.front());
  for (const Monomial& g : w.generators) {
    if (degree(g) != r) return WitnessIssue::bad_generator;
    for (Index i = 0; i < w.dim; ++i)
      if (g(i) != 0 && g(i) != 1) return WitnessIssue::bad_generator;
  }
  const Monomial prod = multiply(std::span<const Monomial>(w.generators), w.dim);
  if (!same_monomial(prod, Monomial(w.target + Monomial::Ones(w.dim))))
    return WitnessIssue::wrong_product;
  const Int det = determinant(log_matrix(w.generators));
  if (det == 0) return WitnessIssue::singular_log;
  if (det != w.det) return WitnessIssue::det_mismatch;
  return WitnessIssue::ok;
}

// -- witness search -----------------------------------------------------------

namespace {

std::vector<Monomial> to_vector(const MonomialSet& s) {
  std::vector<Monomial> v;
  v.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v.emplace_back(s[i]);
  return v;
}

struct Searcher {
  Index d = 0;
  std::vector<Monomial> cands;
  Monomial remaining;  // per-variable budget: target + (1,...,1) minus choices
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  Eliminator elim;
  std::vector<int> chosen;
  std::optional<Witness> found;

  explicit Searcher(Index dim) : d(dim), elim(dim) {}

  void emit() {
    Witness w;
    w.dim = d;
    w.target = remaining;  // placeholder, rewritten by caller
    std::vector<Monomial> gens;
    gens.reserve(chosen.size());
    std::vector<int> order = chosen;
    std::sort(order.begin(), order.end());
    for (int c : order) gens.push_back(cands[static_cast<std::size_t>(c)]);
    w.generators = std::move(gens);
    w.det = determinant(log_matrix(w.generators));
    w.nodes = nodes;
    found = std::move(w);
  }

  bool dfs(const std::vector<int>& pool, Index slots) {
    if (slots == 0) {
      emit();
      return true;
    }
    for (Index i = 0; i < d; ++i)
      if (remaining(i) > slots) return false;  // squarefree picks add at most 1 per variable
    std::vector<int> viable;
    viable.reserve(pool.size());
    for (int c : pool)
      if ((cands[static_cast<std::size_t>(c)].array() <= remaining.array()).all())
        viable.push_back(c);
    if (static_cast<Index>(viable.size()) < slots) return false;
    // try generators covering the scarcest still-needed variable first
    Index scarce = -1;
    for (Index i = 0; i < d; ++i)
      if (remaining(i) > 0 && (scarce < 0 || remaining(i) < remaining(scarce))) scarce = i;
    if (scarce >= 0)
      std::stable_partition(viable.begin(), viable.end(), [&](int c) {
        return cands[static_cast<std::size_t>(c)](scarce) > 0;
      });
    for (std::size_t k = 0; k < viable.size(); ++k) {
      const int c = viable[k];
      const Monomial& g = cands[static_cast<std::size_t>(c)];
      if (!elim.add(g)) continue;
      ++nodes;
      if (nodes > budget) {
        exhausted = true;
        elim.pop();
        return false;
      }
      remaining -= g;
      chosen.push_back(c);
      std::vector<int> child(viable.begin() + static_cast<std::ptrdiff_t>(k) + 1, viable.end());
      if (dfs(child, slots - 1)) return true;
      chosen.pop_back();
      remaining += g;
      elim.pop();
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

SearchResult witness_search(const Eigen::Ref<const Monomial>& target, Int r,
                            const SearchOptions& opts) {
  const Index d = target.size();
  if (d < 1) throw InvalidArgument("witness_search: empty target");
  if ((target.array() < 0).any()) throw InvalidArgument("witness_search: negative exponent");
  if (r < 1 || r > static_cast<Int>(d)) throw InvalidDegree("witness_search: need 1 <= r <= d");
  if (degree(target) != (r - 1) * static_cast<Int>(d))
    throw DegreeMismatch("witness_search: degree(target) must be d * (r - 1)");

  Searcher s(d);
  s.cands = to_vector(veronese(r, d));
  s.remaining = target + Monomial::Ones(d);
  s.budget = opts.budget;
  std::vector<int> pool(s.cands.size());
  std::iota(pool.begin(), pool.end(), 0);

  SearchResult res;
  const bool ok = s.dfs(pool, d);
  res.nodes = s.nodes;
  if (ok) {
    s.found->target = target;
    res.status = SearchStatus::found;
    res.witness = std::move(s.found);
  } else if (s.exhausted) {
    res.status = SearchStatus::budget_exhausted;
  } else {
    res.status = SearchStatus::no_witness;
  }
  return res;
}

// -- lifting ------------------------------------------------------------------

std::pair<Index, Index> pick_reduction_indices(const Eigen::Ref<const Monomial>& m) {
  Index r = -1, s = -1;
  for (Index i = 0; i < m.size(); ++i)
    if (r < 0 || m(i) > m(r)) r = i;
  for (Index i = 0; i < m.size(); ++i) {
    if (i == r) continue;
    if (s < 0 || m(i) > m(s)) s = i;
  }
  if (r < 0 || s < 0 || m(r) <= 1 || m(s) <= 1)
    throw NoValidPair("pick_reduction_indices: need two exponents above 1");
  return {r, s};
}

Witness lift_witness(const Witness& w, Index r, Index s) {
  if (r < 0 || s < 0 || r >= w.dim || s >= w.dim || r == s)
    throw InvalidIndices("lift_witness: indices must be distinct and below dim");
  for (const Monomial& g : w.generators)
    if (degree(g) != 3) throw InvalidArgument("lift_witness: cubic generators required");
  const Index d = w.dim + 1;
  Witness out;
  out.dim = d;
  out.target = Monomial::Zero(d);
  out.target.head(w.dim) = w.target;
  out.target(r) += 1;
  out.target(s) += 1;
  out.generators.reserve(w.generators.size() + 1);
  for (const Monomial& g : w.generators) {
    Monomial gg = Monomial::Zero(d);
    gg.head(w.dim) = g;
    out.generators.push_back(std::move(gg));
  }
  Monomial extra = Monomial::Zero(d);
  extra(r) = 1;
  extra(s) = 1;
  extra(d - 1) = 1;
  out.generators.push_back(std::move(extra));
  // the appended row is (0,...,0,1), so expanding the new exponent matrix
  // along it reproduces the old determinant with positive sign
  out.det = w.det;
  out.nodes = 0;
  return out;
}

Witness relabel_witness(const Witness& w, const std::vector<Index>& sigma) {
  if (static_cast<Index>(sigma.size()) != w.dim)
    throw InvalidArgument("relabel_witness: permutation size mismatch");
  std::vector<bool> seen(sigma.size(), false);
  for (Index p : sigma) {
    if (p < 0 || p >= w.dim || seen[static_cast<std::size_t>(p)])
      throw InvalidArgument("relabel_witness: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  Witness out;
  out.dim = w.dim;
  out.target = Monomial::Zero(w.dim);
  for (Index k = 0; k < w.dim; ++k) out.target(sigma[static_cast<std::size_t>(k)]) = w.target(k);
  out.generators.reserve(w.generators.size());
  for (const Monomial& g : w.generators) {
    Monomial gg = Monomial::Zero(w.dim);
    for (Index k = 0; k < w.dim; ++k) gg(sigma[static_cast<std::size_t>(k)]) = g(k);
    out.generators.push_back(std::move(gg));
  }
  out.det = determinant(log_matrix(out.generators));
  out.nodes = 0;
  return out;
}

MonomialSet predicted_generators(Index d) {
  if (d < 4) throw InvalidArgument("predicted_generators: need d >= 4");
  MonomialSet m = mon_star(4, 2 * static_cast<Int>(d), d);
  if (d == 4) return m;
  return m.difference(e_set(d));
}

// -- subset enumeration -------------------------------------------------------

namespace {

struct TaskOut {
  detail::KeySet keys;                                     // packed products
  std::set<Monomial, CanonicalLess> wide;                  // fallback products
  std::map<ExponentPartition, std::vector<int>> firsts;    // label -> subset
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

struct EnumCtx {
  Index d = 0;
  std::vector<Monomial> cols;
  bool packed = false;
};

void enum_task(const EnumCtx& ctx, std::size_t last, TaskOut& out) {
  const Index d = ctx.d;
  Eliminator elim(d);
  Monomial sum = Monomial::Zero(d);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(d));
  const Monomial ones = Monomial::Ones(d);

  auto leaf = [&]() {
    ++out.leaves;
    const Monomial product = sum - ones;
    bool fresh;
    if (ctx.packed)
      fresh = out.keys.insert(detail::pack(product)).second;
    else
      fresh = out.wide.insert(product).second;
    if (fresh) {
      ExponentPartition label = canonical(product);
      if (!out.firsts.count(label)) {
        std::vector<int> subset = chosen;
        std::sort(subset.begin(), subset.end());
        out.firsts.emplace(std::move(label), std::move(subset));
      }
    }
  };

  auto rec = [&](auto&& self, int limit, Index slots) -> void {
    if (slots == 0) {
      leaf();
      return;
    }
    for (int idx = static_cast<int>(slots) - 1; idx < limit; ++idx) {
      const Monomial& g = ctx.cols[static_cast<std::size_t>(idx)];
      if (!elim.add(g)) continue;
      ++out.nodes;
      sum += g;
      chosen.push_back(idx);
      self(self, idx, slots - 1);
      chosen.pop_back();
      sum -= g;
      elim.pop();
    }
  };

  const Monomial& top = ctx.cols[last];
  if (!elim.add(top)) return;
  out.nodes += 1;
  sum += top;
  chosen.push_back(static_cast<int>(last));
  rec(rec, static_cast<int>(last), d - 1);
}

}  // namespace

Enumeration enumerate_gauss(const MonomialSet& gens, int threads) {
  assert_single_degree(gens);
  const Index d = gens.dimension();
  EnumCtx ctx;
  ctx.d = d;
  ctx.cols = to_vector(gens);
  if (rank(log_matrix(ctx.cols)) < d)
    throw RankDeficient("enumerate_gauss: generators span rank below d");

  Int max_entry = 0;
  for (const Monomial& g : ctx.cols) max_entry = std::max(max_entry, g.maxCoeff());
  ctx.packed = detail::packable_dim(d) && max_entry * static_cast<Int>(d) - 1 <= 31;

  const std::size_t n = ctx.cols.size();
  const std::size_t ntasks = n - static_cast<std::size_t>(d) + 1;
  std::vector<TaskOut> outs(ntasks);
  parallel_for(ntasks, threads, [&](std::size_t t) {
    enum_task(ctx, static_cast<std::size_t>(d) - 1 + t, outs[t]);
  });

  Enumeration result;
  std::vector<Monomial> products;
  if (ctx.packed) {
    detail::KeySet all;
    for (const TaskOut& o : outs) all.insert(o.keys.begin(), o.keys.end());
    products.reserve(all.size());
    for (std::uint64_t key : all) {
      Monomial m(d);
      for (Index i = 0; i < d; ++i)
        m(i) = static_cast<Int>((key >> (detail::kPackBits * i)) & 31u);
      products.push_back(std::move(m));
    }
  } else {
    std::set<Monomial, CanonicalLess> all;
    for (const TaskOut& o : outs) all.insert(o.wide.begin(), o.wide.end());
    products.assign(all.begin(), all.end());
  }
  result.products = MonomialSet::from_monomials(d, products);

  for (TaskOut& o : outs) {
    result.nodes += o.nodes;
    result.nonsingular += o.leaves;
    for (auto& [label, subset] : o.firsts) {
      if (result.first_witness.count(label)) continue;
      Witness w;
      w.dim = d;
      w.generators.reserve(subset.size());
      for (int c : subset) w.generators.push_back(ctx.cols[static_cast<std::size_t>(c)]);
      w.target = multiply(std::span<const Monomial>(w.generators), d) - Monomial::Ones(d);
      w.det = determinant(log_matrix(w.generators));
      w.nodes = 0;
      result.first_witness.emplace(label, std::move(w));
    }
  }
  return result;
}

MonomialSet gauss_generators(const MonomialSet& gens, int threads) {
  return enumerate_gauss(gens, threads).products;
}

// -- equality verification ----------------------------------------------------

bool EqualityReport::confirmed() const {
  if (!extra.empty()) return false;
  for (const TargetRecord& row : targets)
    if (row.status != TargetStatus::confirmed) return false;
  if (sample && !sample->escapes.empty()) return false;
  return true;
}

std::uint64_t EqualityReport::missing_count() const {
  std::uint64_t n = 0;
  for (const TargetRecord& row : targets)
    if (row.status == TargetStatus::missing) ++n;
  return n;
}

std::uint64_t EqualityReport::exhausted_count() const {
  std::uint64_t n = 0;
  for (const TargetRecord& row : targets)
    if (row.status == TargetStatus::budget_exhausted) ++n;
  return n;
}

namespace {

// Permutation that carries a weakly decreasing target onto `desired`:
// sigma[k] is the slot of the k-th largest entry of `desired` (stable).
std::vector<Index> matching_sigma(const Monomial& desired) {
  const Index n = desired.size();
  std::vector<Index> pos(static_cast<std::size_t>(n));
  std::iota(pos.begin(), pos.end(), Index{0});
  std::stable_sort(pos.begin(), pos.end(),
                   [&](Index a, Index b) { return desired(a) > desired(b); });
  return pos;
}

struct LevelOutcome {
  std::vector<TargetRecord> rows;
  WitnessTable table;
  std::uint64_t nodes = 0;
  bool complete = false;
};

LevelOutcome build_level(Index k, const WitnessTable& lower, const VerifyOptions& opts) {
  const MonomialSet predicted = predicted_generators(k);
  const std::vector<ExponentPartition> reps = orbit_representatives(predicted);
  LevelOutcome out;
  out.rows.resize(reps.size());
  parallel_for(reps.size(), opts.threads, [&](std::size_t t) {
    const ExponentPartition& label = reps[t];
    TargetRecord row;
    row.partition = label;
    row.orbit = orbit_size(label, k);
    const Monomial m = leading_arrangement(label, k);
    bool done = false;
    if (static_cast<Index>(label.count()) < k) {
      const auto [ri, si] = pick_reduction_indices(m);
      Monomial u = m;
      u(ri) -= 1;
      u(si) -= 1;
      const Monomial uu = u.head(k - 1);
      const auto it = lower.find(canonical(uu));
      if (it != lower.end()) {
        const Witness rotated = relabel_witness(it->second, matching_sigma(uu));
        Witness w = lift_witness(rotated, ri, si);
        if (validate_witness(w) != WitnessIssue::ok)
          throw Error("internal: lifted witness failed validation");
        row.status = TargetStatus::confirmed;
        row.witness = std::move(w);
        done = true;
      }
    }
    if (!done) {
      SearchResult res = witness_search(m, 3, SearchOptions{opts.budget});
      row.nodes = res.nodes;
      switch (res.status) {
        case SearchStatus::found:
          if (validate_witness(*res.witness) != WitnessIssue::ok)
            throw Error("internal: searched witness failed validation");
          row.status = TargetStatus::confirmed;
          row.witness = std::move(res.witness);
          break;
        case SearchStatus::no_witness:
          row.status = TargetStatus::missing;
          break;
        case SearchStatus::budget_exhausted:
          row.status = TargetStatus::budget_exhausted;
          break;
      }
    }
    out.rows[t] = std::move(row);
  });
  out.complete = true;
  for (TargetRecord& row : out.rows) {
    out.nodes += row.nodes;
    if (row.status == TargetStatus::confirmed)
      out.table.emplace(row.partition, *row.witness);
    else
      out.complete = false;
  }
  return out;
}

bool table_valid(const WitnessTable& table, Index k) {
  const std::vector<ExponentPartition> reps = orbit_representatives(predicted_generators(k));
  if (table.size() != reps.size()) return false;
  auto it = table.begin();
  for (const ExponentPartition& label : reps) {
    if (it == table.end() || !(it->first == label)) return false;
    const Witness& w = it->second;
    if (w.dim != k || validate_witness(w) != WitnessIssue::ok) return false;
    if (!same_monomial(w.target, leading_arrangement(label, k))) return false;
    ++it;
  }
  return true;
}

EqualityReport report_for_level(Index k, VerifyMode mode, LevelOutcome&& outcome,
                                std::uint64_t chain_nodes) {
  EqualityReport rep;
  rep.dim = k;
  rep.mode = mode;
  rep.target_size = predicted_generators(k).size();
  rep.targets = std::move(outcome.rows);
  rep.nodes = chain_nodes;
  return rep;
}

EqualityReport verify_by_witnesses(Index d, const VerifyOptions& opts) {
  WitnessTable table;
  std::uint64_t chain_nodes = 0;
  for (Index k = 4; k <= d; ++k) {
    if (k < d && opts.load_table) {
      if (std::optional<WitnessTable> cached = opts.load_table(k);
          cached && table_valid(*cached, k)) {
        table = std::move(*cached);
        continue;
      }
    }
    LevelOutcome outcome = build_level(k, table, opts);
    chain_nodes += outcome.nodes;
    if (k == d || !outcome.complete)
      return report_for_level(k, VerifyMode::witness, std::move(outcome), chain_nodes);
    table = std::move(outcome.table);
    if (opts.store_table) opts.store_table(k, table);
  }
  throw Error("internal: unreachable");
}

SampleStats run_sample(Index d, const MonomialSet& predicted, const VerifyOptions& opts) {
  SampleStats st;
  st.seed = opts.seed;
  st.samples = opts.samples;
  const std::vector<Monomial> cands = to_vector(veronese(3, d));
  const std::size_t n = cands.size();
  std::mt19937_64 rng(opts.seed);
  auto bounded = [&](std::uint64_t m) {
    const std::uint64_t lim = (~std::uint64_t{0} / m) * m;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= lim);
    return x % m;
  };
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<Monomial> subset;
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    for (Index k = 0; k < d; ++k) {
      const std::size_t j = static_cast<std::size_t>(k) +
                            static_cast<std::size_t>(bounded(n - static_cast<std::size_t>(k)));
      std::swap(idx[static_cast<std::size_t>(k)], idx[j]);
    }
    subset.clear();
    for (Index k = 0; k < d; ++k) subset.push_back(cands[idx[static_cast<std::size_t>(k)]]);
    if (determinant(log_matrix(subset)) == 0) continue;
    ++st.nonsingular;
    const Monomial product = multiply(std::span<const Monomial>(subset), d) - Monomial::Ones(d);
    if (!predicted.contains(product) && st.escapes.size() < 100)
      st.escapes.push_back(product);
  }
  return st;
}

}  // namespace

EqualityReport verify_equality(Index d, VerifyMode mode, const VerifyOptions& opts) {
  if (d < 5) throw InvalidArgument("verify_equality: need d >= 5");
  if (mode == VerifyMode::witness) return verify_by_witnesses(d, opts);

  EqualityReport rep;
  rep.dim = d;
  rep.mode = VerifyMode::enumerate;
  const Enumeration en = enumerate_gauss(veronese(3, d), opts.threads);
  const MonomialSet predicted = predicted_generators(d);
  rep.target_size = predicted.size();
  rep.nodes = en.nodes;

  const MonomialSet missing = predicted.difference(en.products);
  const MonomialSet outside = en.products.difference(predicted);
  std::set<ExponentPartition> missing_labels;
  for (std::size_t i = 0; i < missing.size(); ++i) missing_labels.insert(canonical(missing[i]));

  for (const ExponentPartition& label : orbit_representatives(predicted)) {
    TargetRecord row;
    row.partition = label;
    row.orbit = orbit_size(label, d);
    row.status = missing_labels.count(label) ? TargetStatus::missing : TargetStatus::confirmed;
    if (auto it = en.first_witness.find(label); it != en.first_witness.end())
      row.witness = it->second;
    rep.targets.push_back(std::move(row));
  }
  std::map<ExponentPartition, std::uint64_t> extra_counts;
  for (std::size_t i = 0; i < outside.size(); ++i) ++extra_counts[canonical(outside[i])];
  rep.extra.assign(extra_counts.begin(), extra_counts.end());
  return rep;
}

EqualityReport conjecture_check(Index d, const VerifyOptions& opts) {
  if (d < 8)
    throw InvalidArgument("conjecture_check: need d >= 8 (use verify_equality below)");
  EqualityReport rep = verify_by_witnesses(d, opts);
  if (rep.dim == d && opts.samples > 0)
    rep.sample = run_sample(d, predicted_generators(d), opts);
  return rep;
}

}  // namespace gaussalg
