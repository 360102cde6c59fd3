#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spechtkit/abacus.hpp"
#include "spechtkit/lr.hpp"
#include "spechtkit/partition.hpp"

namespace spechtkit {

enum class IrredMethod { GramRegular, GramRestrictedConjugate, RouquierCriterion, MeatAxe };

std::string to_string(IrredMethod method);

struct IrredVerdict {
  Partition partition;
  int p = 3;
  bool irreducible = false;
  IrredMethod method = IrredMethod::MeatAxe;
  std::optional<std::uint64_t> seed;  // set for MeatAxe verdicts
};

struct ClassifyOptions {
  /// Largest module dimension any computation may build.
  std::uint64_t max_dim = 1500;
  std::uint64_t seed = 0;
};

/// Non-singularity of the Gram matrix of a p-regular lambda.
bool gram_irreducible(const Partition& lambda, int p);

/// Decides whether S^lambda is irreducible over GF(p), p >= 3. Rouquier blocks
/// are settled combinatorially, p-regular and p-restricted shapes by a Gram
/// determinant, everything else by the MeatAxe. Throws Inconclusive when the
/// only applicable route exceeds the dimension budget.
IrredVerdict irreducible_specht(const Partition& lambda, int p, const ClassifyOptions& options = {});

/// Members of a Rouquier block with irreducible Specht module, sorted descending.
/// Throws DomainError if the block is not Rouquier.
std::vector<Partition> classify_rouquier_block(const BlockId& block);

/// Label (lambda_part | p * mu_part) of the signed Young module isomorphic to S^lambda.
struct SignedYoungLabel {
  Partition lambda_part;
  Partition mu_part;
  bool known = false;
};

/// Throws DomainError if S^lambda is reducible.
SignedYoungLabel signed_young_label(const Partition& lambda, int p, const ClassifyOptions& options = {});
SignedYoungLabel signed_young_label(const IrredVerdict& verdict);

enum class VerificationStatus { Verified, Inconclusive, Refuted };

std::string to_string(VerificationStatus status);

struct SummandCheck {
  Partition alpha;
  Partition p_beta;  // already scaled by p
  std::uint64_t dimension = 0;
  enum class Outcome { Summand, NotSummand, OverBudget } outcome = Outcome::OverBudget;
};

struct Certificate {
  Partition alpha;
  Partition p_beta;
  bool operator==(const Certificate&) const = default;
};

struct VerificationReport {
  Partition partition;
  int p = 3;
  IrredVerdict verdict;
  SignedYoungLabel label;
  std::optional<FiltrationMultiset> filtration;
  std::optional<Certificate> certificate;
  std::vector<SummandCheck> summand_checks;
  VerificationStatus status = VerificationStatus::Inconclusive;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;
};

/// Searches for a signed permutation module M(alpha|p beta) having S^lambda as a
/// summand, trying the known label first and then every shape by increasing
/// dimension. Throws DomainError if S^lambda is reducible.
VerificationReport verify_main_theorem(const Partition& lambda, int p, const ClassifyOptions& options = {});

/// All shapes (alpha, beta) with |alpha| + p|beta| = d, ordered by the dimension
/// of M(alpha|p beta), then alpha and beta descending.
std::vector<Certificate> signed_shapes(int d, int p);

}  // namespace spechtkit
