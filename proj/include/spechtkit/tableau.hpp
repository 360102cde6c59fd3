#pragma once

#include <string>
#include <vector>

#include "spechtkit/partition.hpp"

namespace spechtkit {

/// A tableau of shape lambda filled with 0..d-1. Stored as the row and column
/// of each entry; entries[r][c] is the inverse map.
struct Tableau {
  Partition shape;
  std::vector<int> row_of;
  std::vector<int> col_of;
  std::vector<std::vector<int>> entries;

  static Tableau from_rows(const Partition& shape, std::vector<std::vector<int>> rows);
  /// The tableau with entries a and b exchanged.
  Tableau swapped(int a, int b) const;
  bool is_standard() const;
  /// Entries of each column, top to bottom.
  std::vector<std::vector<int>> columns() const;
};

/// Standard tableaux of shape lambda in a fixed deterministic order.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// A tabloid is recorded as the row of each entry.
using Tabloid = std::vector<int>;

/// Coefficient (0 or ±1) of the tabloid `target` in the polytabloid e_t.
int polytabloid_coefficient(const Tabloid& target, const std::vector<std::vector<int>>& columns_of_t);

/// Full expansion of e_t: (tabloid, sign) pairs.
std::vector<std::pair<Tabloid, int>> polytabloid_expansion(const Tableau& t);

}  // namespace spechtkit
