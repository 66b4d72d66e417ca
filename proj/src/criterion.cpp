#include "locan/criterion.hpp"

#include "locan/errors.hpp"

#include <stdexcept>

namespace locan::verma {

using roots::RootSystem;
using roots::Weight;

const char* variant_name(Variant v) { return v == Variant::DeltaOnly ? "delta-only" : "all-positive"; }

CriterionReport bgg_criterion(const RootSystem& rs, const Weight& lambda, Variant variant) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw DomainError("weight rank does not match root system");
  const Weight shifted = lambda + roots::half_sum_positive_roots(rs);
  CriterionReport report;
  report.variant = variant;
  for (const auto& beta : rs.positive_roots()) {
    if (variant == Variant::DeltaOnly && beta.height() != 1) continue;
    const Scalar value = roots::pair_with_coroot(rs, shifted, beta);
    if (value.is_positive_integer()) report.witnesses.push_back({beta, value.value.get_num()});
  }
  report.verdict = report.witnesses.empty() ? Simplicity::Simple : Simplicity::NotSimple;
  return report;
}

mpz_class predicted_singular_height(const CriterionReport& report) {
  mpz_class best = 0;
  for (const auto& w : report.witnesses) {
    const mpz_class h = w.n * w.root.height();
    if (h > best) best = h;
  }
  return best;
}

Weight gl2_weight(const Scalar& c1, const Scalar& c2) { return Weight({-(c1 - c2)}); }

bool gl2_condition(const Scalar& c1, const Scalar& c2) { return !(-(c1 - c2)).is_nonnegative_integer(); }

Gl2Result gl2_character_criterion(const Scalar& c1, const Scalar& c2) {
  static const RootSystem a1 = roots::build_root_system('A', 1);
  Gl2Result out;
  out.report = bgg_criterion(a1, gl2_weight(c1, c2), Variant::AllPositive);
  out.irreducible = out.report.simple();
  if (out.irreducible != gl2_condition(c1, c2)) {
    throw std::logic_error("GL2 criterion paths disagree for c = (" + to_string(c1) + ", " + to_string(c2) + ")");
  }
  return out;
}

RestrictionReport restriction_of_scalars_check(const RootSystem& rs, const CharacterSpec& spec,
                                               TorusConvention convention, Variant variant) {
  if (spec.exponents.empty()) throw DomainError("restriction of scalars needs at least one embedding");
  if (spec.embeddings.size() != spec.exponents.size()) throw DomainError("one exponent tuple per embedding expected");
  std::size_t arity = 0;
  switch (convention) {
    case TorusConvention::GL2Diagonal:
      if (rs.rank() != 1 || rs.type() != roots::DynkinType::A) {
        throw DomainError("GL2 torus convention needs a rank-1 root system of type A");
      }
      arity = 2;
      break;
    case TorusConvention::CorootPairings:
      arity = static_cast<std::size_t>(rs.rank());
      break;
  }
  RestrictionReport out;
  out.irreducible = true;
  for (std::size_t s = 0; s < spec.exponents.size(); ++s) {
    const auto& tuple = spec.exponents[s];
    if (tuple.size() != arity) {
      throw DomainError("arity mismatch for embedding " + spec.embeddings[s] + ": expected " + std::to_string(arity) +
                        " exponents, got " + std::to_string(tuple.size()));
    }
    Weight lambda = convention == TorusConvention::GL2Diagonal ? gl2_weight(tuple[0], tuple[1]) : Weight(tuple);
    CriterionReport rep = bgg_criterion(rs, lambda, variant);
    out.irreducible = out.irreducible && rep.simple();
    out.per_embedding.push_back({spec.embeddings[s], std::move(lambda), std::move(rep)});
  }
  return out;
}

}  // namespace locan::verma
