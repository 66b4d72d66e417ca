#include "locan/cli/report.hpp"

#include "locan/criterion.hpp"
#include "locan/errors.hpp"
#include "locan/padic.hpp"
#include "locan/parahoric.hpp"
#include "locan/partition.hpp"
#include "locan/verma.hpp"

#include <algorithm>

#ifndef LOCAN_VERSION_STRING
#define LOCAN_VERSION_STRING "unknown"
#endif

namespace locan::cli {

using json = nlohmann::ordered_json;
using verma::Variant;

const char* command_name(Command c) {
  switch (c) {
    case Command::Check: return "check";
    case Command::Cosets: return "cosets";
    case Command::Partition: return "partition";
    case Command::Weights: return "weights";
    case Command::Mahler: return "mahler";
    case Command::Norm: return "norm";
  }
  return "?";
}

std::optional<Command> parse_command(std::string_view text) {
  for (Command c : {Command::Check, Command::Cosets, Command::Partition, Command::Weights, Command::Mahler,
                    Command::Norm}) {
    if (text == command_name(c)) return c;
  }
  return std::nullopt;
}

const char* verdict_name(Verdict v) { return v == Verdict::Irreducible ? "irreducible" : "inconclusive"; }

const char* library_version() { return "locan " LOCAN_VERSION_STRING; }

namespace {

constexpr const char* kTheorem =
    "main theorem: if the generalized Verma module m(rho) is simple over U(g), "
    "the induced locally analytic representation is topologically irreducible";
constexpr const char* kOrdering =
    "positive roots in PBW order (height, then descending simple-root coordinates); "
    "oracle depths by height, then descending coordinates; PBW terms in ascending exponent order";

[[noreturn]] void missing(const std::string& what, Command c) {
  throw ConfigError({{0, std::string(command_name(c)) + " needs " + what}});
}

const GroupSpec& need_group(const ProblemConfig& cfg, Command c) {
  if (!cfg.group) missing("a group", c);
  return *cfg.group;
}

roots::RootSystem root_system_of(const GroupSpec& g) { return roots::build_root_system(g.type, g.rank); }

json strings(const std::vector<Scalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

json strings(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::string coords_label(const std::vector<int>& n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

json index_set(const parahoric::ParabolicType& s) {
  json out = json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

json criterion_block(const verma::CriterionReport& r) {
  json out;
  out["verdict"] = r.simple() ? "simple" : "not simple";
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json e;
    e["root"] = x.root.label();
    e["n"] = x.n.get_str();
    w.push_back(e);
  }
  out["witnesses"] = w;
  return out;
}

struct Case {
  std::string embedding;
  std::vector<Scalar> exponents;
  roots::Weight lambda;
  verma::CriterionReport delta_only, all_positive;
};

Report run_check(const ProblemConfig& cfg, const RunOptions& opt) {
  const GroupSpec& g = need_group(cfg, Command::Check);
  if (cfg.exponents.empty()) missing(g.kind == GroupKind::RootSystem ? "lambda" : "c", Command::Check);
  const auto rs = root_system_of(g);
  const VariantChoice choice = opt.variant.value_or(cfg.variant);
  const Variant in_force = choice == VariantChoice::DeltaOnly ? Variant::DeltaOnly : Variant::AllPositive;
  const bool gl2 = g.kind != GroupKind::RootSystem;

  std::vector<Case> cases;
  for (std::size_t s = 0; s < cfg.exponents.size(); ++s) {
    Case c;
    c.embedding = cfg.embeddings.at(s);
    c.exponents = cfg.exponents[s];
    c.lambda = gl2 ? verma::gl2_weight(c.exponents[0], c.exponents[1]) : roots::Weight(c.exponents);
    c.delta_only = verma::bgg_criterion(rs, c.lambda, Variant::DeltaOnly);
    c.all_positive = verma::bgg_criterion(rs, c.lambda, Variant::AllPositive);
    if (gl2) {
      // Cross-check against the closed-form GL2 condition.
      verma::gl2_character_criterion(c.exponents[0], c.exponents[1]);
    }
    cases.push_back(std::move(c));
  }

  Report report;
  report.command = Command::Check;
  json& head = report.body["report"];
  head["command"] = "check";
  head["group"] = g.label;
  head["root_system"] = rs.name();
  head["variant_requested"] = variant_choice_name(choice);

  bool all_simple = true, agree = true;
  const verma::Witness* first = nullptr;
  json embeddings = json::array();
  for (const auto& c : cases) {
    const auto& used = in_force == Variant::DeltaOnly ? c.delta_only : c.all_positive;
    all_simple = all_simple && used.simple();
    if (!used.simple() && !first) first = &used.witnesses.front();
    const bool same = c.delta_only.simple() == c.all_positive.simple();
    agree = agree && same;
    json e;
    e["embedding"] = c.embedding;
    e[gl2 ? "c" : "lambda"] = strings(c.exponents);
    e["pairings"] = strings(c.lambda.pairings);
    e["delta-only"] = criterion_block(c.delta_only);
    e["all-positive"] = criterion_block(c.all_positive);
    e["variants_agree"] = same;
    embeddings.push_back(e);
  }
  report.verdict = all_simple ? Verdict::Irreducible : Verdict::Inconclusive;

  json& verdict = report.body["verdict"];
  verdict["variant"] = verma::variant_name(in_force);
  verdict["theorem"] = kTheorem;
  if (all_simple) {
    verdict["overall"] = "irreducible";
  } else {
    verdict["overall"] = "inconclusive (criterion fails at witness n=" + first->n.get_str() + ")";
    verdict["note"] = "no conclusion from the main theorem; reducibility of the representation is not claimed";
  }
  verdict["variants_agree"] = agree;
  if (!agree) {
    json flagged = json::array();
    for (const auto& c : cases) {
      if (c.delta_only.simple() != c.all_positive.simple()) flagged.push_back(c.embedding);
    }
    verdict["disagreement"] = "delta-only and all-positive differ; the oracle adjudicates";
    verdict["disagreeing_embeddings"] = flagged;
  }
  verdict["embeddings"] = embeddings;

  if (cfg.oracle || opt.oracle_bound) {
    json& oracle = report.body["oracle"];
    int bound = 0;
    std::string source;
    if (opt.oracle_bound) {
      bound = *opt.oracle_bound;
      source = "flag";
    } else if (cfg.oracle_bound) {
      bound = *cfg.oracle_bound;
      source = "config";
    } else {
      mpz_class predicted = 0;
      for (const auto& c : cases) predicted = std::max(predicted, verma::predicted_singular_height(c.all_positive));
      if (predicted == 0) {
        bound = kFallbackOracleBound;
        source = "fallback (no predicted singular weight)";
      } else {
        if (predicted > verma::kDefaultOracleCap) {
          throw ResourceError("predicted oracle bound " + predicted.get_str() + " exceeds the safety cap " +
                              std::to_string(verma::kDefaultOracleCap));
        }
        bound = static_cast<int>(predicted.get_si());
        source = "predicted (max n*height over all-positive witnesses)";
      }
    }
    oracle["bound"] = bound;
    oracle["bound_source"] = source;
    oracle["cap"] = verma::kDefaultOracleCap;
    const auto data = verma::make_lowering_data(rs);
    json results = json::array();
    bool consistent = true;
    for (const auto& c : cases) {
      json e;
      e["embedding"] = c.embedding;
      if (c.lambda.has_generic()) {
        e["result"] = "skipped (generic weight)";
        results.push_back(e);
        continue;
      }
      const verma::VermaModule m(data, c.lambda);
      const auto found = verma::simplicity_oracle(m, bound);
      e["result"] = found.reducible() ? "reducible" : "no obstruction up to degree " + std::to_string(bound);
      json singular = json::array();
      for (const auto& s : found.found) {
        json v;
        v["depth"] = roots::Root(s.depth).label();
        v["weight"] = strings(m.weight_at_depth(s.depth));
        v["dimension"] = s.basis.size();
        json vecs = json::array();
        for (const auto& b : s.basis) vecs.push_back(m.format(b));
        v["vectors"] = vecs;
        singular.push_back(v);
      }
      e["singular"] = singular;
      bool predicted_visible = false;
      for (const auto& w : c.all_positive.witnesses) {
        predicted_visible = predicted_visible || w.n * w.root.height() <= bound;
      }
      const bool ok = found.reducible() == predicted_visible;
      consistent = consistent && ok;
      e["matches_all-positive"] = ok;
      if (c.delta_only.simple() != c.all_positive.simple()) {
        e["adjudication"] = found.reducible() ? "singular vector found; all-positive holds"
                                              : "no singular vector up to degree " + std::to_string(bound);
      }
      results.push_back(e);
    }
    oracle["embeddings"] = results;
    oracle["consistent"] = consistent;
  }
  return report;
}

Report run_cosets(const ProblemConfig& cfg) {
  const auto rs = root_system_of(need_group(cfg, Command::Cosets));
  const auto w = parahoric::build_weyl_group(rs);
  const auto d = parahoric::double_cosets(w, cfg.cosets_i, cfg.cosets_j);
  Report report;
  report.command = Command::Cosets;
  json& head = report.body["report"];
  head["command"] = "cosets";
  head["group"] = cfg.group->label;
  head["root_system"] = rs.name();
  json& body = report.body["cosets"];
  body["I"] = index_set(cfg.cosets_i);
  body["J"] = index_set(cfg.cosets_j);
  body["weyl_order"] = w.order();
  body["count"] = d.representatives.size();
  json rows = json::array();
  for (std::size_t k = 0; k < d.representatives.size(); ++k) {
    const auto& e = w.element(d.representatives[k]);
    json r;
    r["representative"] = e.label();
    r["length"] = e.length();
    r["size"] = d.members[k].size();
    rows.push_back(r);
  }
  body["double_cosets"] = rows;
  return report;
}

Report run_partition(const ProblemConfig& cfg) {
  const auto rs = root_system_of(need_group(cfg, Command::Partition));
  const auto w = parahoric::element_from_word(rs, cfg.partition_w);
  const auto p = parahoric::iwahori_root_partition(rs, cfg.partition_i, w);
  Report report;
  report.command = Command::Partition;
  json& head = report.body["report"];
  head["command"] = "partition";
  head["group"] = cfg.group->label;
  head["root_system"] = rs.name();
  json& body = report.body["partition"];
  body["I"] = index_set(cfg.partition_i);
  body["w"] = w.label();
  auto labels = [](const std::vector<roots::Root>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(r.label());
    return out;
  };
  body["roots_plus"] = labels(p.roots_plus);
  body["roots_minus"] = labels(p.roots_minus);
  return report;
}

Report run_weights(const ProblemConfig& cfg) {
  const auto rs = root_system_of(need_group(cfg, Command::Weights));
  const int h = cfg.weights_height.value_or(4);
  const verma::PartitionTable table(rs, verma::height_box(rs.rank(), h), kernels::best_backend());
  Report report;
  report.command = Command::Weights;
  json& head = report.body["report"];
  head["command"] = "weights";
  head["group"] = cfg.group->label;
  head["root_system"] = rs.name();
  json& body = report.body["weights"];
  body["max_height"] = h;
  json rows = json::array();
  for (int ht = 0; ht <= h; ++ht) {
    for (const auto& nu : verma::depths_of_height(rs.rank(), ht)) {
      json r;
      r["nu"] = coords_label(nu);
      r["height"] = ht;
      r["dimension"] = table.at(nu);
      rows.push_back(r);
    }
  }
  body["dimensions"] = rows;
  return report;
}

Report run_mahler(const ProblemConfig& cfg) {
  if (!cfg.p) missing("p", Command::Mahler);
  if (!cfg.mahler_values && !cfg.mahler_monomial) missing("mahler.values or mahler.monomial", Command::Mahler);
  const int d = cfg.mahler_d.value_or(1);
  padic::FunctionTable table;
  table.d = d;
  std::string source;
  if (cfg.mahler_monomial) {
    const auto& k = *cfg.mahler_monomial;
    int degree = 0;
    for (int e : k) degree += e;
    table.grid = cfg.mahler_grid.value_or(std::max(degree, 1));
    source = "x^" + coords_label(k);
    std::vector<int> x(d, 0);
    while (true) {
      mpz_class v = 1;
      for (int i = 0; i < d; ++i) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x[i]), static_cast<unsigned long>(k[i]));
        v *= t;
      }
      table.values.emplace_back(v);
      int i = d - 1;
      while (i >= 0 && x[i] == table.grid) x[i--] = 0;
      if (i < 0) break;
      ++x[i];
    }
  } else {
    table.grid = *cfg.mahler_grid;
    table.values = *cfg.mahler_values;
    source = "table";
  }
  const auto series = padic::mahler_coefficients(*cfg.p, table);

  bool exact = true;
  {
    std::vector<int> x(d, 0);
    std::size_t flat = 0;
    while (true) {
      exact = exact && padic::evaluate(series, x) == table.values[flat++];
      int i = d - 1;
      while (i >= 0 && x[i] == table.grid) x[i--] = 0;
      if (i < 0) break;
      ++x[i];
    }
  }

  Report report;
  report.command = Command::Mahler;
  json& head = report.body["report"];
  head["command"] = "mahler";
  json& body = report.body["mahler"];
  body["p"] = *cfg.p;
  body["d"] = d;
  body["grid"] = table.grid;
  body["function"] = source;
  body["degree_bound"] = series.degree_bound;
  json rows = json::array();
  for (const auto& [n, c] : series.coefficients) {
    json r;
    r["n"] = coords_label(n);
    r["c"] = to_string(c);
    r["v_p"] = to_string(padic::valuation(c, *cfg.p));
    rows.push_back(r);
  }
  body["coefficients"] = rows;
  body["round_trip"] = exact ? "exact" : "mismatch";
  return report;
}

padic::DistSeries series_of(long p, const std::vector<SeriesTerm>& terms, int d) {
  int bound = 0;
  for (const auto& t : terms) {
    int deg = 0;
    for (int e : t.n) deg += e;
    bound = std::max(bound, deg);
  }
  padic::DistSeries s(p, d, 2 * bound);
  for (const auto& t : terms) s.add_term(t.n, t.c);
  return s;
}

json series_json(const padic::DistSeries& s) {
  json out = json::array();
  for (const auto& [n, c] : s.coefficients()) {
    json r;
    r["n"] = coords_label(n);
    r["c"] = to_string(c);
    out.push_back(r);
  }
  return out;
}

Report run_norm(const ProblemConfig& cfg) {
  if (!cfg.p) missing("p", Command::Norm);
  const bool any = cfg.norm_terms || cfg.pval_omega || cfg.canonical_h;
  if (!any) missing("norm.terms, pval.omega or canonical.h", Command::Norm);
  const long p = *cfg.p;
  Report report;
  report.command = Command::Norm;
  json& head = report.body["report"];
  head["command"] = "norm";
  head["p"] = p;

  if (cfg.norm_terms) {
    if (!cfg.norm_t) missing("norm.t", Command::Norm);
    const int d = static_cast<int>(cfg.norm_terms->front().n.size());
    const std::vector<Rational> tau = cfg.norm_tau.value_or(std::vector<Rational>(d, Rational(1)));
    const padic::RNormParam param(*cfg.norm_t, tau);
    json& body = report.body["norm"];
    body["t"] = to_string(*cfg.norm_t);
    body["tau"] = strings(tau);
    body["convention"] = "exponent e with |s|_r = p^-e, e = min over n of v_p(d_n) + t*tau(n)";
    const auto s = series_of(p, *cfg.norm_terms, d);
    body["series"] = series_json(s);
    body["exponent"] = to_string(padic::r_norm(s, param));
    if (cfg.norm_times) {
      const auto u = series_of(p, *cfg.norm_times, d);
      const auto prod = padic::dist_multiply(s, u);
      const auto es = padic::r_norm(s, param), eu = padic::r_norm(u, param), ep = padic::r_norm(prod, param);
      body["times"] = series_json(u);
      body["times_exponent"] = to_string(eu);
      body["product"] = series_json(prod);
      body["product_exponent"] = to_string(ep);
      body["multiplicative"] = ep == es + eu;
    }
  }
  if (cfg.pval_omega) {
    const padic::PValuationSpec spec(p, *cfg.pval_omega);
    json& body = report.body["p_valuation"];
    body["omega"] = strings(*cfg.pval_omega);
    if (cfg.pval_a) {
      body["a"] = strings(*cfg.pval_a);
      body["value"] = to_string(padic::p_valuation_of_word(spec, *cfg.pval_a));
    }
  }
  if (cfg.canonical_h) {
    json& body = report.body["canonical"];
    body["model"] = "H = p^(1+eps) Z_p^d, eps = " + std::to_string(padic::epsilon(p));
    body["h"] = strings(*cfg.canonical_h);
    body["value"] = to_string(padic::canonical_valuation(p, static_cast<int>(cfg.canonical_h->size()), *cfg.canonical_h));
  }
  return report;
}

json provenance(const ProblemConfig& cfg) {
  json out;
  json lines = json::array();
  std::size_t start = 0;
  const std::string& s = cfg.source;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string::npos) end = s.size();
    std::string line = s.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().get<std::string>().empty()) lines.erase(lines.end() - 1);
  out["config"] = lines;
  out["library"] = library_version();
  out["ordering"] = kOrdering;
  return out;
}

}  // namespace

Report run(const ProblemConfig& cfg, const RunOptions& opt) {
  Report report;
  switch (opt.command) {
    case Command::Check: report = run_check(cfg, opt); break;
    case Command::Cosets: report = run_cosets(cfg); break;
    case Command::Partition: report = run_partition(cfg); break;
    case Command::Weights: report = run_weights(cfg); break;
    case Command::Mahler: report = run_mahler(cfg); break;
    case Command::Norm: report = run_norm(cfg); break;
  }
  report.body["provenance"] = provenance(cfg);
  return report;
}

}  // namespace locan::cli
