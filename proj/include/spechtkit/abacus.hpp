#pragma once

#include <string>
#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

/// Beta-numbers of a partition arranged on p runners. Position x lies on
/// runner x mod p at level x / p.
struct AbacusDisplay {
  int p = 2;
  int beads = 0;
  std::vector<int> positions;  // strictly decreasing

  int runner_count(int runner) const;
  /// Bead levels on each runner, highest level first.
  std::vector<std::vector<int>> runner_levels() const;
  bool operator==(const AbacusDisplay&) const = default;
};

/// Throws ConfigError unless b >= length(lambda) and b is a positive multiple of p.
AbacusDisplay from_partition(const Partition& lambda, int p, int b);
Partition to_partition(const AbacusDisplay& display);

/// Smallest positive multiple of p that is >= length(lambda).
int normalized_beads(const Partition& lambda, int p);

/// Text rendering: one column per runner, one row per level.
std::string render_abacus(const AbacusDisplay& display);

Partition p_core(const Partition& lambda, int p);
int p_weight(const Partition& lambda, int p);
/// Runner partitions (lambda(0), ..., lambda(p-1)) read with normalized beads.
std::vector<Partition> p_quotient(const Partition& lambda, int p);
/// Inverse of (p_core, p_quotient).
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int p);

/// Entry r counts the nodes of residue r.
std::vector<int> residue_content(const Partition& lambda, int p);
/// Nakayama: equal p-cores. Throws SizeMismatch on unequal sizes.
bool same_block(const Partition& lambda, const Partition& mu, int p);

/// A block of k Sigma_d, d = |core| + p * weight, identified by its p-core.
struct BlockId {
  int p = 3;
  Partition core;
  int weight = 0;

  /// Throws ConfigError if `core` is not a p-core or weight < 0.
  static BlockId make(Partition core, int weight, int p);
  int degree() const { return core.size() + p * weight; }
  bool operator==(const BlockId&) const = default;
};

BlockId block_of(const Partition& lambda, int p);

/// Runner bead counts of the core's b-bead display grow by at least weight-1.
/// Weight-0 blocks always qualify.
bool is_rouquier(const BlockId& block, int b);
bool is_rouquier(const BlockId& block);

/// Every partition with the block's core and weight, sorted descending.
std::vector<Partition> block_members(const BlockId& block);

/// lambda = lambda_tilde + p*mu,  lambda_tilde' = core' + p*tau,  sigma = core + p*mu.
struct RouquierDecomposition {
  int p = 3;
  Partition lambda;
  Partition core;
  int weight = 0;
  Partition lambda_tilde;
  Partition mu;
  Partition tau;
  Partition sigma;
};

/// Requires p >= 3, a Rouquier block, and empty quotient runners 1..p-2.
RouquierDecomposition rouquier_decompose(const Partition& lambda, int p);

}  // namespace spechtkit
