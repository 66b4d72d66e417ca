#include "locan/cli/config.hpp"

#include "locan/errors.hpp"
#include "locan/padic.hpp"
#include "locan/roots.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

namespace locan::cli {

const char* variant_choice_name(VariantChoice v) {
  switch (v) {
    case VariantChoice::DeltaOnly: return "delta-only";
    case VariantChoice::AllPositive: return "all-positive";
    case VariantChoice::Both: return "both";
  }
  return "?";
}

std::optional<VariantChoice> parse_variant_choice(std::string_view text) {
  if (text == "delta-only") return VariantChoice::DeltaOnly;
  if (text == "all-positive") return VariantChoice::AllPositive;
  if (text == "both") return VariantChoice::Both;
  return std::nullopt;
}

namespace {

// Thrown by the value converters; turned into a ConfigIssue at the key's line.
struct BadValue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Node parse_node(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  Node node;
  if (pos < s.size() && s[pos] == '[') {
    node.is_list = true;
    ++pos;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return node;
    }
    while (true) {
      node.items.push_back(parse_node(s, pos));
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos >= s.size()) throw BadValue("unterminated list");
      if (s[pos] == ']') {
        ++pos;
        return node;
      }
      if (s[pos] != ',') throw BadValue("expected ',' or ']' in list");
      ++pos;
    }
  }
  const std::size_t start = pos;
  int parens = 0;
  while (pos < s.size()) {
    const char c = s[pos];
    if (parens == 0 && (c == ',' || c == ']' || c == '[')) break;
    if (c == '(') ++parens;
    if (c == ')' && --parens < 0) throw BadValue("unbalanced ')'");
    ++pos;
  }
  if (parens != 0) throw BadValue("unbalanced '('");
  node.atom = trim(s.substr(start, pos - start));
  if (node.atom.empty()) throw BadValue("empty list element");
  return node;
}

Node parse_value(std::string_view s) {
  std::size_t pos = 0;
  Node node = parse_node(s, pos);
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) throw BadValue("trailing characters after value");
  return node;
}

const std::string& atom(const Node& n, const char* what) {
  if (n.is_list) throw BadValue(std::string("expected ") + what + ", got a list");
  return n.atom;
}

const std::vector<Node>& list(const Node& n, const char* what) {
  if (!n.is_list) throw BadValue(std::string("expected a bracketed list of ") + what);
  return n.items;
}

Rational to_rational(const Node& n) {
  try {
    return parse_rational(atom(n, "a rational"));
  } catch (const std::invalid_argument& e) {
    throw BadValue(e.what());
  }
}

Scalar to_scalar(const Node& n) {
  if (!n.is_list && n.atom == "generic") return Scalar::make_generic();
  return Scalar(to_rational(n));
}

long to_integer(const Node& n) {
  const Rational q = to_rational(n);
  if (!is_integer(q) || !q.get_num().fits_slong_p()) throw BadValue("expected an integer, got '" + n.atom + "'");
  return q.get_num().get_si();
}

bool to_bool(const Node& n) {
  const auto& a = atom(n, "true or false");
  if (a == "true") return true;
  if (a == "false") return false;
  throw BadValue("expected true or false, got '" + a + "'");
}

std::vector<Rational> to_rationals(const Node& n) {
  std::vector<Rational> out;
  for (const auto& item : list(n, "rationals")) out.push_back(to_rational(item));
  return out;
}

std::vector<int> to_integers(const Node& n) {
  std::vector<int> out;
  for (const auto& item : list(n, "integers")) out.push_back(static_cast<int>(to_integer(item)));
  return out;
}

std::vector<Scalar> to_scalars(const Node& n) {
  std::vector<Scalar> out;
  for (const auto& item : list(n, "rationals or 'generic'")) out.push_back(to_scalar(item));
  return out;
}

std::vector<SeriesTerm> to_terms(const Node& n, std::optional<std::size_t> d) {
  std::vector<SeriesTerm> out;
  for (const auto& item : list(n, "[n_1, ..., n_d, coefficient] terms")) {
    const auto& parts = list(item, "[n_1, ..., n_d, coefficient]");
    if (parts.size() < 2) throw BadValue("a term needs at least one exponent and a coefficient");
    const std::size_t arity = parts.size() - 1;
    if (!d) d = arity;
    if (arity != *d) {
      throw BadValue("arity mismatch: term has " + std::to_string(arity) + " exponents, expected " +
                     std::to_string(*d));
    }
    SeriesTerm t;
    for (std::size_t i = 0; i < arity; ++i) {
      const long e = to_integer(parts[i]);
      if (e < 0) throw BadValue("term exponents must be nonnegative");
      t.n.push_back(static_cast<int>(e));
    }
    t.c = to_rational(parts.back());
    out.push_back(std::move(t));
  }
  return out;
}

GroupSpec to_group(const Node& n) {
  const std::string text = atom(n, "a group name");
  GroupSpec g;
  if (text == "GL2") {
    g.label = "GL2";
    return g;
  }
  static const std::regex res(R"(ResScalars\(\s*GL2\s*,\s*([0-9]+)\s*\))");
  std::smatch m;
  if (std::regex_match(text, m, res)) {
    g.kind = GroupKind::ResScalarsGL2;
    g.copies = std::stoi(m[1]);
    if (g.copies < 1 || g.copies > 64) throw BadValue("ResScalars needs 1 <= |Gamma| <= 64");
    g.label = "ResScalars(GL2," + std::to_string(g.copies) + ")";
    return g;
  }
  try {
    const auto rs = roots::build_root_system(text);
    g.kind = GroupKind::RootSystem;
    g.type = rs.type_label();
    g.rank = rs.rank();
    g.label = rs.name();
    return g;
  } catch (const std::exception&) {
    throw BadValue("unknown group '" + text + "' (expected GL2, ResScalars(GL2, m) or a Dynkin label such as A2)");
  }
}

parahoric::ParabolicType to_index_set(const Node& n, const std::optional<GroupSpec>& g) {
  if (!g) throw BadValue("needs a group");
  parahoric::ParabolicType out;
  for (int i : to_integers(n)) {
    if (i < 1 || i > g->rank) {
      throw BadValue("simple root index " + std::to_string(i) + " outside 1.." + std::to_string(g->rank));
    }
    out.insert(i - 1);
  }
  return out;
}

const std::vector<std::string> kKnownKeys = {
    "group",   "c",           "lambda",      "embeddings",   "variant",       "oracle",
    "oracle_bound", "cosets.I", "cosets.J",  "partition.I",  "partition.w",   "weights.height",
    "p",       "mahler.d",    "mahler.grid", "mahler.values", "mahler.monomial", "norm.t",
    "norm.tau", "norm.terms", "norm.times",  "pval.omega",   "pval.a",        "canonical.h",
};

struct Entry {
  int line;
  Node value;
};

class Parser {
 public:
  explicit Parser(std::string_view text) { cfg_.source = std::string(text); }

  ProblemConfig run() {
    lex();
    interpret();
    if (!issues_.empty()) {
      std::stable_sort(issues_.begin(), issues_.end(),
                       [](const ConfigIssue& a, const ConfigIssue& b) { return a.line < b.line; });
      throw ConfigError(std::move(issues_));
    }
    return std::move(cfg_);
  }

 private:
  void issue(int line, std::string msg) { issues_.push_back({line, std::move(msg)}); }

  void lex() {
    int line_no = 0;
    std::size_t start = 0;
    const std::string& text = cfg_.source;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      ++line_no;
      std::string line = text.substr(start, end - start);
      start = end + 1;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        issue(line_no, "expected 'key = value'");
        continue;
      }
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
        issue(line_no, "unknown key '" + key + "'");
        continue;
      }
      if (entries_.count(key)) {
        issue(line_no, "duplicate key '" + key + "' (first set on line " + std::to_string(entries_[key].line) + ")");
        continue;
      }
      if (value.empty()) {
        issue(line_no, "missing value for '" + key + "'");
        continue;
      }
      try {
        entries_[key] = {line_no, parse_value(value)};
      } catch (const BadValue& e) {
        issue(line_no, key + ": " + e.what());
      }
    }
  }

  // Runs fn on the entry for key, if present, converting BadValue to an issue.
  template <class Fn>
  void with(const std::string& key, Fn fn) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return;
    try {
      fn(it->second.value, it->second.line);
    } catch (const BadValue& e) {
      issue(it->second.line, key + ": " + e.what());
    }
  }

  int line_of(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second.line;
  }

  void interpret() {
    with("group", [&](const Node& n, int) { cfg_.group = to_group(n); });
    interpret_character();
    with("variant", [&](const Node& n, int) {
      const auto v = parse_variant_choice(atom(n, "a variant"));
      if (!v) throw BadValue("expected delta-only, all-positive or both, got '" + n.atom + "'");
      cfg_.variant = *v;
    });
    with("oracle", [&](const Node& n, int) { cfg_.oracle = to_bool(n); });
    with("oracle_bound", [&](const Node& n, int) {
      const long b = to_integer(n);
      if (b < 1) throw BadValue("oracle bound must be at least 1");
      cfg_.oracle_bound = static_cast<int>(std::min<long>(b, 1 << 20));
    });
    with("cosets.I", [&](const Node& n, int) { cfg_.cosets_i = to_index_set(n, cfg_.group); });
    with("cosets.J", [&](const Node& n, int) { cfg_.cosets_j = to_index_set(n, cfg_.group); });
    with("partition.I", [&](const Node& n, int) { cfg_.partition_i = to_index_set(n, cfg_.group); });
    with("partition.w", [&](const Node& n, int) {
      if (!cfg_.group) throw BadValue("needs a group");
      if (!n.is_list && n.atom == "e") return;
      for (int i : to_integers(n)) {
        if (i < 1 || i > cfg_.group->rank) throw BadValue("reflection index " + std::to_string(i) + " out of range");
        cfg_.partition_w.push_back(i - 1);
      }
    });
    with("weights.height", [&](const Node& n, int) {
      const long h = to_integer(n);
      if (h < 0 || h > 40) throw BadValue("height must lie in 0..40");
      cfg_.weights_height = static_cast<int>(h);
    });
    interpret_padic();
  }

  void interpret_character() {
    const bool has_c = entries_.count("c"), has_lambda = entries_.count("lambda");
    if (!cfg_.group) {
      if (has_c) issue(line_of("c"), "c: needs a group");
      if (has_lambda) issue(line_of("lambda"), "lambda: needs a group");
      with("embeddings", [&](const Node&, int) { throw BadValue("needs a group"); });
      return;
    }
    const GroupSpec& g = *cfg_.group;
    const bool gl2 = g.kind != GroupKind::RootSystem;
    if (gl2 && has_lambda) issue(line_of("lambda"), "lambda: does not apply to " + g.label + "; use c");
    if (!gl2 && has_c) issue(line_of("c"), "c: does not apply to " + g.label + "; use lambda");

    with(gl2 ? "c" : "lambda", [&](const Node& n, int) {
      const std::string arity_note = g.label + " expects ";
      if (g.kind == GroupKind::ResScalarsGL2) {
        const auto& tuples = list(n, "exponent pairs, one per embedding");
        if (tuples.size() != static_cast<std::size_t>(g.copies)) {
          throw BadValue("arity mismatch: " + arity_note + std::to_string(g.copies) + " exponent pairs, got " +
                         std::to_string(tuples.size()));
        }
        for (const auto& t : tuples) {
          auto pair = to_scalars(t);
          if (pair.size() != 2) {
            throw BadValue("arity mismatch: each embedding needs (c1, c2), got " + std::to_string(pair.size()) +
                           " values");
          }
          cfg_.exponents.push_back(std::move(pair));
        }
      } else {
        auto tuple = to_scalars(n);
        const std::size_t want = gl2 ? 2 : static_cast<std::size_t>(g.rank);
        if (tuple.size() != want) {
          throw BadValue("arity mismatch: " + arity_note + std::to_string(want) + " values, got " +
                         std::to_string(tuple.size()));
        }
        cfg_.exponents.push_back(std::move(tuple));
      }
    });
    with("embeddings", [&](const Node& n, int) {
      std::vector<std::string> names;
      for (const auto& item : list(n, "embedding names")) names.push_back(atom(item, "an embedding name"));
      if (names.size() != static_cast<std::size_t>(g.copies)) {
        throw BadValue("arity mismatch: " + g.label + " expects " + std::to_string(g.copies) + " embeddings, got " +
                       std::to_string(names.size()));
      }
      if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
        throw BadValue("embedding names must be distinct");
      }
      cfg_.embeddings = std::move(names);
    });
    if (cfg_.embeddings.empty()) {
      if (g.kind == GroupKind::ResScalarsGL2) {
        for (int s = 1; s <= g.copies; ++s) cfg_.embeddings.push_back("sigma" + std::to_string(s));
      } else {
        cfg_.embeddings.push_back("id");
      }
    }
  }

  void interpret_padic() {
    with("p", [&](const Node& n, int) {
      const long p = to_integer(n);
      if (!padic::is_prime(p)) throw BadValue(std::to_string(p) + " is not prime");
      if (p > 1000003) throw BadValue("p too large");
      cfg_.p = p;
    });
    static const char* const needs_p[] = {"mahler.values", "mahler.monomial", "norm.terms", "pval.omega",
                                          "canonical.h"};
    if (!entries_.count("p")) {
      for (const char* key : needs_p) {
        if (entries_.count(key)) issue(line_of(key), std::string(key) + ": needs p");
      }
    }

    with("mahler.d", [&](const Node& n, int) {
      const long d = to_integer(n);
      if (d < 1 || d > 3) throw BadValue("d must lie in 1..3");
      cfg_.mahler_d = static_cast<int>(d);
    });
    with("mahler.grid", [&](const Node& n, int) {
      const long g = to_integer(n);
      if (g < 0 || g > 24) throw BadValue("grid must lie in 0..24");
      cfg_.mahler_grid = static_cast<int>(g);
    });
    if (entries_.count("mahler.values") && entries_.count("mahler.monomial")) {
      issue(line_of("mahler.monomial"), "mahler.monomial: give either mahler.values or mahler.monomial, not both");
    }
    const int d = cfg_.mahler_d.value_or(1);
    with("mahler.values", [&](const Node& n, int) {
      if (!cfg_.mahler_grid) throw BadValue("needs mahler.grid");
      auto values = to_rationals(n);
      std::size_t want = 1;
      for (int i = 0; i < d; ++i) want *= static_cast<std::size_t>(*cfg_.mahler_grid + 1);
      if (values.size() != want) {
        throw BadValue("arity mismatch: (grid+1)^d = " + std::to_string(want) + " values expected, got " +
                       std::to_string(values.size()));
      }
      cfg_.mahler_values = std::move(values);
    });
    with("mahler.monomial", [&](const Node& n, int) {
      auto exps = to_integers(n);
      if (exps.size() != static_cast<std::size_t>(d)) {
        throw BadValue("arity mismatch: " + std::to_string(d) + " exponents expected, got " +
                       std::to_string(exps.size()));
      }
      for (int e : exps) {
        if (e < 0 || e > 24) throw BadValue("exponents must lie in 0..24");
      }
      cfg_.mahler_monomial = std::move(exps);
    });

    with("norm.t", [&](const Node& n, int) {
      const Rational t = to_rational(n);
      if (t <= 0 || t >= 1) throw BadValue("out-of-range r parameter: need 0 < t < 1 (r = p^-t), got " + to_string(t));
      cfg_.norm_t = t;
    });
    with("norm.tau", [&](const Node& n, int) {
      auto tau = to_rationals(n);
      if (tau.empty()) throw BadValue("tau must not be empty");
      for (const auto& x : tau) {
        if (x <= 0) throw BadValue("out-of-range r parameter: tau entries must be positive");
      }
      cfg_.norm_tau = std::move(tau);
    });
    // Number of variables: from tau if given, else from the first term.
    std::size_t nd = cfg_.norm_tau ? cfg_.norm_tau->size() : 0;
    auto arity = [&]() { return nd ? std::optional<std::size_t>(nd) : std::nullopt; };
    with("norm.terms", [&](const Node& n, int) {
      cfg_.norm_terms = to_terms(n, arity());
      if (!nd && !cfg_.norm_terms->empty()) nd = cfg_.norm_terms->front().n.size();
      if (cfg_.norm_terms->empty()) throw BadValue("needs at least one term");
    });
    with("norm.times", [&](const Node& n, int) {
      if (!entries_.count("norm.terms")) throw BadValue("needs norm.terms");
      cfg_.norm_times = to_terms(n, arity());
    });

    with("pval.omega", [&](const Node& n, int) {
      auto omega = to_rationals(n);
      if (omega.empty()) throw BadValue("omega must not be empty");
      if (cfg_.p) {
        const Rational floor = make_rational(1, *cfg_.p - 1);
        for (const auto& w : omega) {
          if (w <= floor) throw BadValue("omega values must exceed 1/(p-1) = " + to_string(floor));
        }
      }
      cfg_.pval_omega = std::move(omega);
    });
    with("pval.a", [&](const Node& n, int) {
      if (!entries_.count("pval.omega")) throw BadValue("needs pval.omega");
      auto a = to_rationals(n);
      if (cfg_.pval_omega && a.size() != cfg_.pval_omega->size()) {
        throw BadValue("arity mismatch: " + std::to_string(cfg_.pval_omega->size()) + " coordinates expected, got " +
                       std::to_string(a.size()));
      }
      cfg_.pval_a = std::move(a);
    });
    with("canonical.h", [&](const Node& n, int) {
      auto h = to_rationals(n);
      if (h.empty()) throw BadValue("h must not be empty");
      cfg_.canonical_h = std::move(h);
    });
  }

  ProblemConfig cfg_;
  std::map<std::string, Entry> entries_;
  std::vector<ConfigIssue> issues_;
};

}  // namespace

ProblemConfig parse_config(std::string_view text) { return Parser(text).run(); }

}  // namespace locan::cli
