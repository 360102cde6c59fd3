#include "spechtkit/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "spechtkit/errors.hpp"

namespace spechtkit {

Tableau Tableau::from_rows(const Partition& shape, std::vector<std::vector<int>> rows) {
  Tableau t;
  t.shape = shape;
  const auto d = static_cast<std::size_t>(shape.size());
  t.row_of.assign(d, -1);
  t.col_of.assign(d, -1);
  if (static_cast<int>(rows.size()) != shape.length()) throw ShapeError("tableau rows do not match its shape");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape[r]) throw ShapeError("tableau row length does not match its shape");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const int k = rows[r][c];
      if (k < 0 || static_cast<std::size_t>(k) >= d || t.row_of[static_cast<std::size_t>(k)] >= 0)
        throw ShapeError("tableau entries must be a permutation of 0..d-1");
      t.row_of[static_cast<std::size_t>(k)] = static_cast<int>(r);
      t.col_of[static_cast<std::size_t>(k)] = static_cast<int>(c);
    }
  }
  t.entries = std::move(rows);
  return t;
}

Tableau Tableau::swapped(int a, int b) const {
  Tableau t(*this);
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  std::swap(t.row_of[ua], t.row_of[ub]);
  std::swap(t.col_of[ua], t.col_of[ub]);
  t.entries[static_cast<std::size_t>(t.row_of[ua])][static_cast<std::size_t>(t.col_of[ua])] = a;
  t.entries[static_cast<std::size_t>(t.row_of[ub])][static_cast<std::size_t>(t.col_of[ub])] = b;
  return t;
}

bool Tableau::is_standard() const {
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (std::size_t c = 0; c < entries[r].size(); ++c) {
      if (c > 0 && entries[r][c - 1] > entries[r][c]) return false;
      if (r > 0 && entries[r - 1][c] > entries[r][c]) return false;
    }
  return true;
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(shape[0]));
  for (const auto& row : entries)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return cols;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<Tableau> out;
  const int d = lambda.size();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  // Entry k goes at the end of some row whose length stays within the shape
  // and below the row above.
  auto rec = [&](auto&& self, int k) -> void {
    if (k == d) {
      out.push_back(Tableau::from_rows(lambda, rows));
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto len = static_cast<int>(rows[r].size());
      if (len >= lambda[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(k);
      self(self, k + 1);
      rows[r].pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int polytabloid_coefficient(const Tabloid& target, const std::vector<std::vector<int>>& columns_of_t) {
  int sign = 1;
  std::vector<int> image;
  for (const auto& col : columns_of_t) {
    const auto len = col.size();
    image.resize(len);
    std::uint64_t seen = 0;
    for (std::size_t s = 0; s < len; ++s) {
      const int r = target[static_cast<std::size_t>(col[s])];
      if (r < 0 || static_cast<std::size_t>(r) >= len || (seen >> r) & 1u) return 0;
      seen |= std::uint64_t{1} << r;
      image[s] = r;
    }
    for (std::size_t a = 0; a < len; ++a)
      for (std::size_t b = a + 1; b < len; ++b)
        if (image[a] > image[b]) sign = -sign;
  }
  return sign;
}

std::vector<std::pair<Tabloid, int>> polytabloid_expansion(const Tableau& t) {
  const auto cols = t.columns();
  std::vector<std::vector<int>> perms(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    perms[c].resize(cols[c].size());
    std::iota(perms[c].begin(), perms[c].end(), 0);
  }
  std::vector<std::pair<Tabloid, int>> out;
  Tabloid tabloid(t.row_of);
  // Odometer over the product of column symmetric groups.
  auto parity = [](const std::vector<int>& perm) {
    int s = 1;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) s = -s;
    return s;
  };
  while (true) {
    int sign = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      sign *= parity(perms[c]);
      for (std::size_t s = 0; s < cols[c].size(); ++s) tabloid[static_cast<std::size_t>(cols[c][s])] = perms[c][s];
    }
    out.emplace_back(tabloid, sign);
    std::size_t c = 0;
    while (c < cols.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
    if (c == cols.size()) break;
  }
  return out;
}

}  // namespace spechtkit
