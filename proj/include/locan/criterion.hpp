#pragma once

#include "locan/rational.hpp"
#include "locan/roots.hpp"

#include <string>
#include <vector>

namespace locan::verma {

/// Which roots the simplicity test quantifies over.
enum class Variant {
  DeltaOnly,    // simple roots only
  AllPositive,  // every positive root (the standard Verma-module criterion)
};

const char* variant_name(Variant v);

enum class Simplicity { Simple, NotSimple };

struct Witness {
  roots::Root root;
  mpz_class n;  // (λ+δ)(H_β) = n > 0
};

struct CriterionReport {
  Variant variant = Variant::AllPositive;
  Simplicity verdict = Simplicity::Simple;
  std::vector<Witness> witnesses;  // PBW order of the roots

  bool simple() const { return verdict == Simplicity::Simple; }
};

/// M(λ) is simple iff (λ+δ)(H_β) ∉ Z_{>0} for every β in the quantified
/// set. Generic pairings are never integers.
CriterionReport bgg_criterion(const roots::RootSystem& rs, const roots::Weight& lambda, Variant variant);

/// Smallest oracle degree bound that reaches every predicted singular
/// weight λ − nβ, i.e. max n·height(β) over the witnesses; 0 if none.
mpz_class predicted_singular_height(const CriterionReport& report);

/// λ(H) = −(c1 − c2) for diag(t1, t2) ↦ t1^{c1} t2^{c2} on GL2.
roots::Weight gl2_weight(const Scalar& c1, const Scalar& c2);
/// −(c1 − c2) ∉ Z_{>=0}, evaluated directly.
bool gl2_condition(const Scalar& c1, const Scalar& c2);

struct Gl2Result {
  bool irreducible = false;
  CriterionReport report;  // criterion on the A1 weight gl2_weight(c1, c2)
};

/// Evaluates the GL2 condition both directly and through bgg_criterion on
/// A1, and throws std::logic_error if the two disagree.
Gl2Result gl2_character_criterion(const Scalar& c1, const Scalar& c2);

/// How an exponent tuple is turned into a weight.
enum class TorusConvention {
  GL2Diagonal,     // (c1, c2) on the diagonal torus of GL2; rank-1 root system
  CorootPairings,  // the tuple already lists λ(H_{α_i})
};

struct CharacterSpec {
  std::vector<std::string> embeddings;            // Γ
  std::vector<std::vector<Scalar>> exponents;     // one tuple per σ
};

struct EmbeddingReport {
  std::string embedding;
  roots::Weight lambda;
  CriterionReport report;
};

struct RestrictionReport {
  std::vector<EmbeddingReport> per_embedding;
  bool irreducible = false;  // every component simple
};

/// Throws DomainError on an empty Γ or an arity mismatch.
RestrictionReport restriction_of_scalars_check(const roots::RootSystem& rs, const CharacterSpec& spec,
                                               TorusConvention convention, Variant variant);

}  // namespace locan::verma
