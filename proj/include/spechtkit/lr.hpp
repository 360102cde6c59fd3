#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spechtkit/abacus.hpp"
#include "spechtkit/partition.hpp"

namespace spechtkit {

/// Multiset of Specht labels of a common degree: the shadow of a Specht
/// filtration. Multiplicities are always >= 1.
class FiltrationMultiset {
 public:
  explicit FiltrationMultiset(int degree = 0) : degree_(degree) {}

  /// Throws SizeMismatch if |lambda| != degree, ConfigError if mult < 1.
  void add(const Partition& lambda, std::uint64_t mult = 1);

  int degree() const { return degree_; }
  bool empty() const { return entries_.empty(); }
  std::size_t distinct() const { return entries_.size(); }
  std::uint64_t multiplicity(const Partition& lambda) const;
  /// Entries sorted by partition, largest first.
  const std::map<Partition, std::uint64_t, std::greater<>>& entries() const { return entries_; }

  bool operator==(const FiltrationMultiset&) const = default;

 private:
  int degree_;
  std::map<Partition, std::uint64_t, std::greater<>> entries_;
};

/// c(epsilon; rho, nu) counted as Littlewood-Richardson tableaux of shape
/// epsilon/rho and content nu. Throws SizeMismatch if |epsilon| != |rho|+|nu|.
std::uint64_t lr_coefficient(const Partition& epsilon, const Partition& rho, const Partition& nu);

/// Every epsilon ⊇ rho with epsilon/rho a vertical strip of m nodes.
std::vector<Partition> column_pieri(const Partition& rho, int m);

/// Keeps the entries whose p-core is the block's core.
FiltrationMultiset block_truncate(const FiltrationMultiset& f, const BlockId& block);

/// Induce S^rho (x) sgn_{pc} and truncate to `block`, whose weight must be
/// weight(rho) + c and which must be Rouquier.
FiltrationMultiset vertical_hook_inductions(const Partition& rho, int c, const BlockId& block);

/// Special case rho = core + p*mu: the result is rho with pc nodes added to the
/// first column. Cross-checks against vertical_hook_inductions.
Partition first_column_induction(const Partition& rho, int c, const BlockId& block);

/// Iterated induce-and-truncate starting at sigma, one stage per part of tau.
/// Asserts the lambda entry has multiplicity one and every other entry lies
/// strictly above lambda in the ladder order of regularizations and strictly
/// below it in dominance.
FiltrationMultiset pipeline_filtration(const RouquierDecomposition& dec);

}  // namespace spechtkit
