#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "codeal/binomial.hpp"

namespace codeal {

/// Generating set for the code ideal of a linear code: the RREF rows of the
/// generator matrix as pivot splits, plus x_i^p - 1 for every variable.
struct IdealPresentation {
  LinearCode code;
  std::vector<Binomial> generators;
};

IdealPresentation code_ideal_presentation(const LinearCode& code);

struct GroebnerBasis {
  std::vector<Binomial> elements;  // oriented under `order`, sorted by
                                   // descending leading monomial
  MonomialOrder order;
  bool reduced = false;
};

/// Normal form of b modulo the given set. Basis elements must be oriented
/// under `order`; divisors are tried in the order they appear, the current
/// leading term is always reduced first. Returns nullopt when b reduces to
/// zero; otherwise the (purified, oriented) normal form.
std::optional<Binomial> reduce(const Binomial& b,
                               std::span<const Binomial> basis,
                               const MonomialOrder& order);

/// Buchberger's algorithm specialized to binomials: S-pairs of binomials are
/// binomials, coprime leading terms are skipped, pairs are processed by
/// smallest lcm. The result is fully inter-reduced.
GroebnerBasis buchberger(const IdealPresentation& pres,
                         const MonomialOrder& order);

/// The reduced Groebner basis read off a generator matrix in RREF with
/// respect to the ordered information set J, under the permuted
/// lexicographic order that ranks the J-variables (in the given order) above
/// the remaining variables (ascending). Throws NotInformationSet.
GroebnerBasis closed_form_gb(const LinearCode& code,
                             std::span<const std::size_t> info_set);

/// Repeated-membership helper: holds the closed-form basis for the first
/// information set of the code and memoizes query results. Not safe for
/// concurrent use from multiple threads; create one oracle per thread.
class MembershipOracle {
 public:
  explicit MembershipOracle(const LinearCode& code);

  bool contains(const Binomial& b) const;
  const GroebnerBasis& basis() const { return gb_; }

 private:
  GroebnerBasis gb_;
  mutable std::map<std::pair<std::vector<std::int64_t>,
                             std::vector<std::int64_t>>,
                   bool>
      memo_;
};

/// Ideal membership: b reduces to zero modulo the closed-form basis for the
/// lexicographically first information set.
bool is_member(const Binomial& b, const LinearCode& code);

}  // namespace codeal
