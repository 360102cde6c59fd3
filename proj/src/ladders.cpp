#include "spechtkit/ladders.hpp"

#include <algorithm>

#include "spechtkit/errors.hpp"

namespace spechtkit {

int ladder_index(const Node& node, int p) {
  if (p < 2) throw ConfigError("modulus must be at least 2");
  return node.row + (p - 1) * node.col - (p - 1);
}

LadderProfile ladder_numbers(const Partition& lambda, int p) {
  LadderProfile profile;
  for (const auto& n : nodes(lambda)) {
    const auto r = static_cast<std::size_t>(ladder_index(n, p));
    if (profile.counts.size() < r) profile.counts.resize(r, 0);
    ++profile.counts[r - 1];
  }
  return profile;
}

Partition regularize(const Partition& lambda, int p) {
  const auto profile = ladder_numbers(lambda, p);
  std::vector<int> rows;
  std::vector<std::vector<bool>> filled;
  auto mark = [&](int i, int j) {
    if (static_cast<int>(filled.size()) < i) filled.resize(static_cast<std::size_t>(i));
    auto& row = filled[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) < j) row.resize(static_cast<std::size_t>(j), false);
    row[static_cast<std::size_t>(j - 1)] = true;
  };
  for (int r = 1; r <= static_cast<int>(profile.counts.size()); ++r) {
    // Ladder r meets row i = r - (p-1)(j-1); topmost node has the largest column.
    int j = (r - 1) / (p - 1) + 1;
    for (int k = 0; k < profile.at(r); ++k, --j) {
      if (j < 1) throw InternalError("ladder overflow while regularizing " + lambda.str());
      mark(r - (p - 1) * (j - 1), j);
    }
  }
  std::vector<int> parts;
  for (const auto& row : filled) {
    const auto len = static_cast<int>(std::count(row.begin(), row.end(), true));
    if (!std::all_of(row.begin(), row.begin() + len, [](bool b) { return b; }))
      throw InternalError("regularization of " + lambda.str() + " is not a Young diagram");
    parts.push_back(len);
  }
  try {
    return Partition(std::move(parts));
  } catch (const ShapeError&) {
    throw InternalError("regularization of " + lambda.str() + " is not a partition");
  }
}

bool ladder_gt(const Partition& mu, const Partition& lambda, int p) {
  if (mu.size() != lambda.size()) throw SizeMismatch("ladder order compares partitions of equal size");
  const auto a = ladder_numbers(mu, p);
  const auto b = ladder_numbers(lambda, p);
  for (int r = static_cast<int>(std::max(a.counts.size(), b.counts.size())); r >= 1; --r)
    if (a.at(r) != b.at(r)) return a.at(r) > b.at(r);
  return false;
}

}  // namespace spechtkit
