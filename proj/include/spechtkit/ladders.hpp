#pragma once

#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

/// Ladder r = {(i,j) : i + (p-1)j = p-1+r}, r >= 1.
int ladder_index(const Node& node, int p);

/// counts[r-1] = l_r(lambda); trailing zeros stripped.
struct LadderProfile {
  std::vector<int> counts;
  int at(int r) const { return r >= 1 && r <= static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(r - 1)] : 0; }
  bool operator==(const LadderProfile&) const = default;
};

LadderProfile ladder_numbers(const Partition& lambda, int p);

/// James' p-regularization: every node slid to the top of its ladder.
Partition regularize(const Partition& lambda, int p);

/// mu ≻ lambda in the ladder order. Equal profiles compare false both ways.
/// Throws SizeMismatch on unequal sizes.
bool ladder_gt(const Partition& mu, const Partition& lambda, int p);

}  // namespace spechtkit
