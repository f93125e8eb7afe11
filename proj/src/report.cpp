#include "gaussalg/report.hpp"

#include <sstream>

namespace gaussalg {

namespace {

const char* status_name(TargetStatus s) {
  switch (s) {
    case TargetStatus::confirmed:
      return "confirmed";
    case TargetStatus::missing:
      return "missing";
    case TargetStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

std::string join_exponents(const Monomial& m) {
  std::string s;
  for (Index i = 0; i < m.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(m(i));
  }
  return s;
}

}  // namespace

Json to_json(const Monomial& m) {
  Json a = Json::array();
  for (Index i = 0; i < m.size(); ++i) a.push_back(m(i));
  return a;
}

Json to_json(const ExponentPartition& p) {
  Json a = Json::array();
  for (Int x : p.parts()) a.push_back(x);
  return a;
}

Json to_json(const Witness& w) {
  Json j;
  j["d"] = w.dim;
  j["target"] = to_json(w.target);
  Json gens = Json::array();
  for (const Monomial& g : w.generators) gens.push_back(to_json(g));
  j["generators"] = std::move(gens);
  j["det"] = w.det;
  j["nodes"] = w.nodes;
  return j;
}

Json to_json(const ExchangeViolation& v) {
  Json j;
  j["u"] = to_json(v.u);
  j["v"] = to_json(v.v);
  j["i"] = v.i + 1;
  Json tried = Json::array();
  for (const TriedCandidate& t : v.tried) {
    Json e;
    e["j"] = t.j + 1;
    e["rejected"] = to_json(t.rejected);
    tried.push_back(std::move(e));
  }
  j["tried"] = std::move(tried);
  return j;
}

Json to_json(const EqualityReport& rep) {
  Json j;
  j["d"] = rep.dim;
  j["mode"] = rep.mode == VerifyMode::enumerate ? "enumerate" : "witness";
  j["target_size"] = rep.target_size;
  Json summary;
  summary["orbits"] = rep.targets.size();
  summary["confirmed"] = rep.targets.size() - rep.missing_count() - rep.exhausted_count();
  summary["missing"] = rep.missing_count();
  summary["budget_exhausted"] = rep.exhausted_count();
  summary["extra_orbits"] = rep.extra.size();
  summary["verified"] = rep.confirmed();
  j["summary"] = std::move(summary);
  Json rows = Json::array();
  for (const TargetRecord& row : rep.targets) {
    Json r;
    r["partition"] = to_json(row.partition);
    r["orbit"] = row.orbit;
    r["status"] = status_name(row.status);
    r["nodes"] = row.nodes;
    if (row.witness) r["witness"] = to_json(*row.witness);
    rows.push_back(std::move(r));
  }
  j["targets"] = std::move(rows);
  Json extra = Json::array();
  for (const auto& [label, count] : rep.extra) {
    Json e;
    e["partition"] = to_json(label);
    e["count"] = count;
    extra.push_back(std::move(e));
  }
  j["extra"] = std::move(extra);
  if (rep.sample) {
    Json s;
    s["seed"] = rep.sample->seed;
    s["samples"] = rep.sample->samples;
    s["nonsingular"] = rep.sample->nonsingular;
    Json esc = Json::array();
    for (const Monomial& m : rep.sample->escapes) esc.push_back(to_json(m));
    s["escapes"] = std::move(esc);
    j["sample"] = std::move(s);
  }
  j["nodes"] = rep.nodes;
  return j;
}

std::optional<Witness> witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("target") || !j.contains("generators") ||
      !j.contains("det"))
    return std::nullopt;
  Witness w;
  if (!j["d"].is_number_integer()) return std::nullopt;
  w.dim = j["d"].get<Index>();
  if (w.dim < 1 || !j["target"].is_array() ||
      static_cast<Index>(j["target"].size()) != w.dim)
    return std::nullopt;
  w.target = Monomial(w.dim);
  for (Index i = 0; i < w.dim; ++i) {
    if (!j["target"][static_cast<std::size_t>(i)].is_number_integer()) return std::nullopt;
    w.target(i) = j["target"][static_cast<std::size_t>(i)].get<Int>();
  }
  if (!j["generators"].is_array()) return std::nullopt;
  for (const Json& gj : j["generators"]) {
    if (!gj.is_array() || static_cast<Index>(gj.size()) != w.dim) return std::nullopt;
    Monomial g(w.dim);
    for (Index i = 0; i < w.dim; ++i) {
      if (!gj[static_cast<std::size_t>(i)].is_number_integer()) return std::nullopt;
      g(i) = gj[static_cast<std::size_t>(i)].get<Int>();
    }
    w.generators.push_back(std::move(g));
  }
  w.det = j["det"].get<Int>();
  if (j.contains("nodes")) w.nodes = j["nodes"].get<std::uint64_t>();
  return w;
}

Json table_to_json(Index dim, const WitnessTable& table) {
  Json j;
  j["schema_version"] = 1;
  j["d"] = dim;
  Json entries = Json::array();
  for (const auto& [label, w] : table) {
    Json e;
    e["partition"] = to_json(label);
    e["witness"] = to_json(w);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::optional<WitnessTable> table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) return std::nullopt;
  WitnessTable table;
  for (const Json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("partition") || !e.contains("witness")) return std::nullopt;
    std::vector<Int> parts;
    for (const Json& x : e["partition"]) {
      if (!x.is_number_integer()) return std::nullopt;
      parts.push_back(x.get<Int>());
    }
    std::optional<Witness> w = witness_from_json(e["witness"]);
    if (!w) return std::nullopt;
    try {
      table.emplace(ExponentPartition(std::move(parts)), std::move(*w));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return table;
}

void strip_timing(Json& j) {
  if (j.is_object()) {
    j.erase("wall_ms");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (Json& v : j) strip_timing(v);
  }
}

std::string to_csv(const EqualityReport& rep) {
  std::ostringstream os;
  os << "partition,orbit,status,det,nodes\n";
  for (const TargetRecord& row : rep.targets) {
    os << row.partition.to_string() << ',' << row.orbit << ',' << status_name(row.status) << ',';
    if (row.witness) os << row.witness->det;
    os << ',' << row.nodes << '\n';
  }
  for (const auto& [label, count] : rep.extra)
    os << label.to_string() << ',' << count << ",extra,,\n";
  return os.str();
}

std::string to_text(const EqualityReport& rep) {
  std::ostringstream os;
  os << "equality check d=" << rep.dim << " mode="
     << (rep.mode == VerifyMode::enumerate ? "enumerate" : "witness")
     << " target_size=" << rep.target_size << '\n';
  for (const TargetRecord& row : rep.targets) {
    os << "  " << row.partition.to_string() << " orbit=" << row.orbit << " "
       << status_name(row.status);
    if (row.witness) os << " det=" << row.witness->det;
    if (row.nodes) os << " nodes=" << row.nodes;
    os << '\n';
  }
  for (const auto& [label, count] : rep.extra)
    os << "  extra " << label.to_string() << " count=" << count << '\n';
  if (rep.sample) {
    os << "  sample seed=" << rep.sample->seed << " draws=" << rep.sample->samples
       << " nonsingular=" << rep.sample->nonsingular << " escapes=" << rep.sample->escapes.size()
       << '\n';
  }
  os << (rep.confirmed() ? "VERIFIED" : "NOT VERIFIED") << '\n';
  return os.str();
}

std::string to_csv(const ExchangeViolation& v) {
  std::ostringstream os;
  os << "field,value\n";
  os << "u," << join_exponents(v.u) << '\n';
  os << "v," << join_exponents(v.v) << '\n';
  os << "i," << v.i + 1 << '\n';
  for (const TriedCandidate& t : v.tried)
    os << "tried j=" << t.j + 1 << ',' << join_exponents(t.rejected) << '\n';
  return os.str();
}

std::string to_text(const ExchangeViolation& v) {
  std::ostringstream os;
  os << "exchange violation\n";
  os << "  u = (" << join_exponents(v.u) << ")\n";
  os << "  v = (" << join_exponents(v.v) << ")\n";
  os << "  i = " << v.i + 1 << " (u_i > v_i, no admissible j)\n";
  for (const TriedCandidate& t : v.tried)
    os << "  tried j=" << t.j + 1 << " -> (" << join_exponents(t.rejected) << ") not in set\n";
  return os.str();
}

}  // namespace gaussalg
