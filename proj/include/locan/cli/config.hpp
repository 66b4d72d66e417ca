#pragma once

#include "locan/parahoric.hpp"
#include "locan/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locan::cli {

enum class GroupKind { GL2, RootSystem, ResScalarsGL2 };

struct GroupSpec {
  GroupKind kind = GroupKind::GL2;
  std::string label;  // "GL2", "A2", "ResScalars(GL2,3)"
  char type = 'A';    // root-system letter; 'A' for the GL2 kinds
  int rank = 1;
  int copies = 1;     // |Γ| for restriction of scalars
};

enum class VariantChoice { DeltaOnly, AllPositive, Both };

const char* variant_choice_name(VariantChoice v);
/// "delta-only", "all-positive" or "both"; nullopt otherwise.
std::optional<VariantChoice> parse_variant_choice(std::string_view text);

/// b^n with coefficient c.
struct SeriesTerm {
  std::vector<int> n;
  Rational c;
};

struct ProblemConfig {
  std::string source;  // verbatim text, echoed in reports

  std::optional<GroupSpec> group;
  std::vector<std::string> embeddings;
  std::vector<std::vector<Scalar>> exponents;  // one tuple per embedding
  VariantChoice variant = VariantChoice::AllPositive;
  bool oracle = false;
  std::optional<int> oracle_bound;

  parahoric::ParabolicType cosets_i, cosets_j;   // 0-based
  parahoric::ParabolicType partition_i;
  std::vector<int> partition_w;                  // 0-based word
  std::optional<int> weights_height;

  std::optional<long> p;
  std::optional<int> mahler_d, mahler_grid;
  std::optional<std::vector<Rational>> mahler_values;
  std::optional<std::vector<int>> mahler_monomial;
  std::optional<Rational> norm_t;
  std::optional<std::vector<Rational>> norm_tau;
  std::optional<std::vector<SeriesTerm>> norm_terms, norm_times;
  std::optional<std::vector<Rational>> pval_omega, pval_a;
  std::optional<std::vector<Rational>> canonical_h;
};

/// Parses the key = value schema. Lists are bracketed, rationals are
/// written a/b, '#' starts a comment. Throws ConfigError listing every
/// violation with its line number.
ProblemConfig parse_config(std::string_view text);

}  // namespace locan::cli
