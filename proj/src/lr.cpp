#include "spechtkit/lr.hpp"

#include <algorithm>

#include "spechtkit/errors.hpp"
#include "spechtkit/ladders.hpp"

namespace spechtkit {

void FiltrationMultiset::add(const Partition& lambda, std::uint64_t mult) {
  if (lambda.size() != degree_)
    throw SizeMismatch("filtration entry " + lambda.str() + " does not have degree " + std::to_string(degree_));
  if (mult < 1) throw ConfigError("filtration multiplicities must be positive");
  entries_[lambda] += mult;
}

std::uint64_t FiltrationMultiset::multiplicity(const Partition& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? 0 : it->second;
}

namespace {

struct Cell {
  int row;
  int col;
};

// Backtracking over the skew cells in reverse reading order (rows top to
// bottom, each row right to left) so the lattice condition can be checked on
// every prefix.
class LrCounter {
 public:
  LrCounter(const Partition& outer, const Partition& inner, const Partition& content)
      : outer_(outer), inner_(inner), content_(content.vec()), used_(content_.size(), 0) {
    for (int i = 0; i < outer.length(); ++i)
      for (int j = outer[static_cast<std::size_t>(i)]; j > inner[static_cast<std::size_t>(i)]; --j) cells_.push_back({i, j - 1});
    fill_.assign(static_cast<std::size_t>(outer.length()), std::vector<int>(static_cast<std::size_t>(outer[0]), 0));
  }

  std::uint64_t count() { return recurse(0); }

 private:
  std::uint64_t recurse(std::size_t k) {
    if (k == cells_.size()) return 1;
    const auto [i, j] = cells_[k];
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    int hi = static_cast<int>(content_.size());
    // Row weakly increases to the right: the cell to the right was filled already.
    if (j + 1 < outer_[ui]) hi = std::min(hi, fill_[ui][uj + 1]);
    int lo = 1;
    // Column strictly increases downward.
    if (i > 0 && j < outer_[ui - 1] && j >= inner_[ui - 1]) lo = fill_[ui - 1][uj] + 1;
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v - 1);
      if (used_[uv] >= content_[uv]) continue;
      if (v > 1 && used_[uv] + 1 > used_[uv - 1]) continue;
      ++used_[uv];
      fill_[ui][uj] = v;
      total += recurse(k + 1);
      --used_[uv];
    }
    fill_[ui][uj] = 0;
    return total;
  }

  const Partition& outer_;
  const Partition& inner_;
  std::vector<int> content_;
  std::vector<int> used_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> fill_;
};

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
  return true;
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& epsilon, const Partition& rho, const Partition& nu) {
  if (epsilon.size() != rho.size() + nu.size())
    throw SizeMismatch("LR coefficient needs |epsilon| = |rho| + |nu|");
  if (!contains(epsilon, rho)) return 0;
  if (nu.empty()) return 1;
  return LrCounter(epsilon, rho, nu).count();
}

std::vector<Partition> column_pieri(const Partition& rho, int m) {
  if (m < 0) throw ConfigError("column Pieri needs m >= 0");
  std::vector<Partition> out;
  const int rows = rho.length() + m;
  std::vector<int> parts(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < rho.length(); ++i) parts[static_cast<std::size_t>(i)] = rho[static_cast<std::size_t>(i)];
  // Choose rows top to bottom; a node may go in row i only if row i-1 stays at
  // least as long after the additions above it.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (i == rows || rows - i < remaining) return;
    const auto ui = static_cast<std::size_t>(i);
    const int above = i == 0 ? INT32_MAX : parts[ui - 1];
    if (parts[ui] + 1 <= above) {
      ++parts[ui];
      self(self, i + 1, remaining - 1);
      --parts[ui];
    }
    self(self, i + 1, remaining);
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

FiltrationMultiset block_truncate(const FiltrationMultiset& f, const BlockId& block) {
  FiltrationMultiset out(f.degree());
  for (const auto& [lambda, mult] : f.entries())
    if (p_core(lambda, block.p) == block.core) out.add(lambda, mult);
  return out;
}

FiltrationMultiset vertical_hook_inductions(const Partition& rho, int c, const BlockId& block) {
  if (c < 0) throw ConfigError("number of vertical hooks must be non-negative");
  const int p = block.p;
  if (p_core(rho, p) != block.core)
    throw DomainError(rho.str() + " does not have p-core " + block.core.str());
  if (block.weight != p_weight(rho, p) + c)
    throw DomainError("target block weight must be weight(rho) + c");
  if (!is_rouquier(block)) throw DomainError("target block is not a Rouquier block");
  FiltrationMultiset induced(rho.size() + p * c);
  for (const auto& eps : column_pieri(rho, p * c)) induced.add(eps);
  return block_truncate(induced, block);
}

Partition first_column_induction(const Partition& rho, int c, const BlockId& block) {
  const int p = block.p;
  const auto quotient = p_quotient(rho, p);
  for (int r = 0; r < p - 1; ++r)
    if (!quotient[static_cast<std::size_t>(r)].empty())
      throw DomainError(rho.str() + " is not of the form core + p*mu");
  std::vector<int> parts(rho.parts().begin(), rho.parts().end());
  parts.insert(parts.end(), static_cast<std::size_t>(p * c), 1);
  const Partition eps(std::move(parts));
  const auto induced = vertical_hook_inductions(rho, c, block);
  if (induced.distinct() != 1 || induced.multiplicity(eps) != 1)
    throw InternalError("first-column induction of " + rho.str() + " is not the single module " + eps.str());
  return eps;
}

FiltrationMultiset pipeline_filtration(const RouquierDecomposition& dec) {
  const int p = dec.p;
  if (add_scaled(dec.core, dec.mu, p) != dec.sigma || add_scaled(dec.lambda_tilde, dec.mu, p) != dec.lambda ||
      conjugate(dec.lambda_tilde) != add_scaled(conjugate(dec.core), dec.tau, p))
    throw ConfigError("inconsistent Rouquier decomposition for " + dec.lambda.str());

  FiltrationMultiset stage(dec.sigma.size());
  stage.add(dec.sigma);
  int weight = dec.mu.size();
  for (int part : dec.tau.parts()) {
    weight += part;
    const auto block = BlockId::make(dec.core, weight, p);
    FiltrationMultiset next(stage.degree() + p * part);
    for (const auto& [rho, mult] : stage.entries()) {
      const auto induced = vertical_hook_inductions(rho, part, block);
      for (const auto& [eps, m] : induced.entries()) next.add(eps, mult * m);
    }
    stage = std::move(next);
  }

  if (stage.multiplicity(dec.lambda) != 1)
    throw InternalError("pipeline for " + dec.lambda.str() + " does not contain it exactly once");
  const auto lambda_reg = regularize(dec.lambda, p);
  for (const auto& [eps, mult] : stage.entries()) {
    if (eps == dec.lambda) continue;
    if (!ladder_gt(regularize(eps, p), lambda_reg, p) || !dominates(dec.lambda, eps))
      throw InternalError("pipeline entry " + eps.str() + " violates the ordering against " + dec.lambda.str());
  }
  return stage;
}

}  // namespace spechtkit
