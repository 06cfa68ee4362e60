#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "clutterlab/chordality.hpp"
#include "clutterlab/clutter.hpp"
#include "clutterlab/homology.hpp"
#include "clutterlab/integer.hpp"
#include "clutterlab/invariants.hpp"
#include "clutterlab/io.hpp"
#include "clutterlab/macaulay.hpp"

namespace clutterlab {

inline constexpr int report_schema_version = 1;

/// Oracle guards; CLUTTERLAB_MAX_N raises (or lowers) all of them at once.
struct Limits {
  int max_direct_n = 20;
  OracleLimits oracle;

  static Limits from_environment() {
    Limits limits;
    if (const char* raw = std::getenv("CLUTTERLAB_MAX_N")) {
      char* end = nullptr;
      const long v = std::strtol(raw, &end, 10);
      if (end != raw && *end == '\0' && v > 0 && v <= max_vertices) {
        limits.max_direct_n = static_cast<int>(v);
        limits.oracle.max_hochster_n = static_cast<int>(v);
        limits.oracle.max_face_universe = static_cast<int>(v);
      }
    }
    return limits;
  }
};

struct OracleComparison {
  FVector f_direct;
  BettiSequence betti_hochster;
  bool f_match = false;
  bool h_match = false;
  bool betti_match = false;
  bool linear = false;

  bool all_passed() const { return f_match && h_match && betti_match && linear; }
};

struct MacaulayBlock {
  std::optional<std::vector<Integer>> lsequence;
  bool valid = false;
  std::string diagnosis;
  std::vector<Integer> lambda_max;  // index i-1 holds the bound for lambda_i
};

struct Report {
  int n = 0;
  int d = 0;
  std::size_t circuits = 0;
  Clutter input;
  Chordality chordal = Chordality::not_chordal;
  std::optional<SimplicialOrder> order;
  std::optional<Multiset> multiset;
  std::optional<LambdaSequence> lambda;
  std::optional<FVector> f;
  std::optional<HVector> h;
  std::optional<BettiSequence> betti;  // absent for the complete clutter (zero ideal)
  std::optional<Integer> multiplicity;
  std::optional<long> projective_dimension;
  std::optional<OracleComparison> oracle;
  std::optional<MacaulayBlock> macaulay;
  std::optional<bool> co_chordal;
};

struct AnalysisOptions {
  bool invariants = false;
  bool verify = false;
  bool co_chordal = false;
  SearchOptions search;
  Limits limits;
};

inline Report analyze(const Clutter& c, const AnalysisOptions& options = {}) {
  Report r;
  r.n = c.n();
  r.d = c.d();
  r.circuits = c.size();
  r.input = c;
  const SearchResult search = find_simplicial_order(c, options.search);
  r.chordal = search.status;
  if (options.co_chordal && c.n() >= c.d()) r.co_chordal = is_co_chordal(c).co_chordal;
  if (search.status != Chordality::chordal) return r;

  r.order = *search.order;
  r.multiset = simplicial_multiset(*r.order);
  r.lambda = lambda_sequence(*r.multiset, c.n(), c.d());
  if (!options.invariants) return r;

  const int n = c.n();
  const int d = c.d();
  r.f = to_f_vector(f_polynomial_from_multiset(n, d, *r.multiset));
  r.h = h_vector_from_multiset(n, d, *r.multiset);
  r.multiplicity = multiplicity(c);
  const bool zero_ideal = n < d || c.size() == complete_clutter(n, d).size();
  if (!zero_ideal) {
    r.betti = betti_from_multiset(n, d, *r.multiset);
    r.projective_dimension = r.betti->projective_dimension();
  }

  if (n > d && !zero_ideal) {
    MacaulayBlock block;
    const auto validity = is_valid_lambda(n, d, *r.lambda);
    block.lsequence = validity.lsequence;
    block.valid = validity.valid;
    block.diagnosis = validity.diagnosis;
    for (int i = 1; i <= n - d; ++i) block.lambda_max.push_back(lambda_max(n, d, i));
    r.macaulay = block;
  }

  if (options.verify) {
    OracleComparison cmp;
    cmp.f_direct = f_vector_direct(c, options.limits.max_direct_n);
    cmp.f_match = cmp.f_direct == *r.f;
    cmp.h_match = h_from_f(cmp.f_direct) == *r.h;
    if (n >= d) {
      const auto table = hochster_betti(c, options.limits.oracle);
      cmp.betti_hochster = table.totals();
      cmp.linear = std::all_of(table.entries.begin(), table.entries.end(),
                               [&](const auto& e) { return e.first.second == e.first.first + d; });
      cmp.betti_match = cmp.betti_hochster == r.betti.value_or(BettiSequence{});
    } else {
      cmp.linear = true;
      cmp.betti_match = !r.betti;
    }
    r.oracle = cmp;
  }
  return r;
}

namespace detail {

/// Machine integers when they fit, decimal strings otherwise.
inline nlohmann::json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline nlohmann::json integers_json(const std::vector<Integer>& values) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(integer_json(v));
  return out;
}

inline std::string join(const std::vector<Integer>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
  return out + ")";
}

}  // namespace detail

inline nlohmann::json to_json(const GradedBettiTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, value] : table.entries) out.push_back({{"i", key.first}, {"j", key.second}, {"value", detail::integer_json(value)}});
  return out;
}

inline nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json out;
  out["schema_version"] = report_schema_version;
  out["input"] = to_json(r.input);
  out["summary"] = {{"n", r.n}, {"d", r.d}, {"circuits", r.circuits}};
  out["chordal"] = to_string(r.chordal);
  if (r.co_chordal) out["co_chordal"] = *r.co_chordal;
  if (r.order) {
    json steps = json::array();
    for (const auto& s : r.order->steps) steps.push_back({{"element", s.element.vertices()}, {"neighbors", s.neighbors}});
    out["order"] = steps;
  }
  if (r.multiset) out["multiset"] = r.multiset->values();
  if (r.lambda) out["lambda"] = detail::integers_json(r.lambda->values());
  if (r.f) out["f_vector"] = detail::integers_json(r.f->f);
  if (r.h) out["h_vector"] = detail::integers_json(r.h->h);
  if (r.betti) out["betti"] = detail::integers_json(r.betti->beta);
  if (r.multiplicity) out["multiplicity"] = detail::integer_json(*r.multiplicity);
  if (r.projective_dimension) out["projective_dimension"] = *r.projective_dimension;
  if (r.macaulay) {
    json m;
    if (r.macaulay->lsequence) m["l_sequence"] = detail::integers_json(*r.macaulay->lsequence);
    m["valid"] = r.macaulay->valid;
    m["diagnosis"] = r.macaulay->diagnosis;
    m["lambda_max"] = detail::integers_json(r.macaulay->lambda_max);
    out["macaulay"] = m;
  }
  if (r.oracle) {
    out["oracle"] = {{"f_vector_direct", detail::integers_json(r.oracle->f_direct.f)},
                     {"betti_hochster", detail::integers_json(r.oracle->betti_hochster.beta)},
                     {"f_match", r.oracle->f_match},
                     {"h_match", r.oracle->h_match},
                     {"betti_match", r.oracle->betti_match},
                     {"linear_resolution", r.oracle->linear},
                     {"all_passed", r.oracle->all_passed()}};
  }
  return out;
}

struct ReportSections {
  bool f = true;
  bool h = true;
  bool betti = true;
};

inline std::string to_table(const Report& r, const ReportSections& sections = {}) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 22 ? 22 - key.size() : 1, ' ') << value << '\n';
  };
  row("vertices", std::to_string(r.n));
  row("uniformity", std::to_string(r.d));
  row("circuits", std::to_string(r.circuits));
  row("chordal", to_string(r.chordal));
  if (r.co_chordal) row("co-chordal", *r.co_chordal ? "yes" : "no");
  if (r.order) row("simplicial order", r.order->empty() ? "(empty)" : r.order->to_string());
  if (r.multiset) {
    std::string m = "{";
    const auto values = r.multiset->values();
    for (std::size_t i = 0; i < values.size(); ++i) m += (i ? "," : "") + std::to_string(values[i]);
    row("multiset", m + "}");
  }
  if (r.lambda) row("lambda", r.lambda->to_string());
  if (r.f && sections.f) row("f-vector", detail::join(r.f->f));
  if (r.h && sections.h) row("h-vector", detail::join(r.h->h));
  if (sections.betti) {
    if (r.betti) row("betti", detail::join(r.betti->beta));
    if (r.f && !r.betti) row("betti", "(zero ideal)");
    if (r.projective_dimension) row("projdim", std::to_string(*r.projective_dimension));
  }
  if (r.multiplicity) row("multiplicity", r.multiplicity->str());
  if (r.macaulay) {
    if (r.macaulay->lsequence) row("l-sequence", detail::join(*r.macaulay->lsequence));
    row("lambda valid", r.macaulay->diagnosis);
    row("lambda max", detail::join(r.macaulay->lambda_max));
  }
  if (r.oracle) {
    auto flag = [](bool ok) { return std::string(ok ? "match" : "MISMATCH"); };
    row("oracle f-vector", detail::join(r.oracle->f_direct.f) + " " + flag(r.oracle->f_match));
    row("oracle h-vector", flag(r.oracle->h_match));
    row("oracle betti", detail::join(r.oracle->betti_hochster.beta) + " " + flag(r.oracle->betti_match));
    row("linear resolution", r.oracle->linear ? "yes" : "NO");
    out << (r.oracle->all_passed() ? "all checks passed\n" : "verification FAILED\n");
  }
  return out.str();
}

}  // namespace clutterlab
