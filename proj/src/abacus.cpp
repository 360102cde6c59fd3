#include "spechtkit/abacus.hpp"

#include <algorithm>
#include <functional>

#include "spechtkit/errors.hpp"

namespace spechtkit {

int AbacusDisplay::runner_count(int runner) const {
  return static_cast<int>(std::count_if(positions.begin(), positions.end(), [&](int x) { return x % p == runner; }));
}

std::vector<std::vector<int>> AbacusDisplay::runner_levels() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(p));
  for (int x : positions) out[static_cast<std::size_t>(x % p)].push_back(x / p);
  return out;
}

AbacusDisplay from_partition(const Partition& lambda, int p, int b) {
  if (p < 2) throw ConfigError("abacus needs at least 2 runners");
  if (b < 1 || b % p != 0) throw ConfigError("bead count must be a positive multiple of p");
  if (b < lambda.length()) throw ConfigError("bead count " + std::to_string(b) + " is smaller than the number of parts of " + lambda.str());
  AbacusDisplay out{p, b, {}};
  out.positions.reserve(static_cast<std::size_t>(b));
  for (int i = 1; i <= b; ++i) out.positions.push_back(lambda[static_cast<std::size_t>(i - 1)] + b - i);
  return out;
}

Partition to_partition(const AbacusDisplay& display) {
  std::vector<int> beta(display.positions);
  std::sort(beta.begin(), beta.end(), std::greater<>());
  if (std::adjacent_find(beta.begin(), beta.end()) != beta.end()) throw ConfigError("abacus positions must be distinct");
  const int b = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= b; ++i) parts.push_back(beta[static_cast<std::size_t>(i - 1)] - (b - i));
  return Partition(std::move(parts));
}

int normalized_beads(const Partition& lambda, int p) {
  if (p < 2) throw ConfigError("abacus needs at least 2 runners");
  const int len = std::max(lambda.length(), 1);
  return ((len + p - 1) / p) * p;
}

std::string render_abacus(const AbacusDisplay& display) {
  const auto levels = display.runner_levels();
  int top = -1;
  for (int x : display.positions) top = std::max(top, x / display.p);
  std::string out;
  for (int level = 0; level <= top; ++level) {
    for (int r = 0; r < display.p; ++r) {
      const auto& lv = levels[static_cast<std::size_t>(r)];
      if (r) out += ' ';
      out += std::find(lv.begin(), lv.end(), level) != lv.end() ? "●" : "·";
    }
    out += '\n';
  }
  return out;
}

Partition p_core(const Partition& lambda, int p) {
  const auto display = from_partition(lambda, p, normalized_beads(lambda, p));
  AbacusDisplay slid{p, display.beads, {}};
  const auto levels = display.runner_levels();
  for (int r = 0; r < p; ++r) {
    const auto count = static_cast<int>(levels[static_cast<std::size_t>(r)].size());
    for (int level = 0; level < count; ++level) slid.positions.push_back(level * p + r);
  }
  return to_partition(slid);
}

int p_weight(const Partition& lambda, int p) { return (lambda.size() - p_core(lambda, p).size()) / p; }

std::vector<Partition> p_quotient(const Partition& lambda, int p) {
  const auto display = from_partition(lambda, p, normalized_beads(lambda, p));
  std::vector<Partition> out;
  for (auto levels : display.runner_levels()) {
    std::sort(levels.begin(), levels.end(), std::greater<>());
    const int c = static_cast<int>(levels.size());
    std::vector<int> parts;
    for (int j = 1; j <= c; ++j) parts.push_back(levels[static_cast<std::size_t>(j - 1)] - (c - j));
    out.emplace_back(std::move(parts));
  }
  return out;
}

Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int p) {
  if (static_cast<int>(quotient.size()) != p) throw ConfigError("quotient must have exactly p components");
  int longest = 0;
  for (const auto& q : quotient) longest = std::max(longest, q.length());
  // Enough beads that every runner carries at least `longest` of them.
  const int b = normalized_beads(core, p) + p * longest;
  const auto levels = from_partition(core, p, b).runner_levels();
  AbacusDisplay out{p, b, {}};
  for (int r = 0; r < p; ++r) {
    const auto c = static_cast<int>(levels[static_cast<std::size_t>(r)].size());
    const auto& q = quotient[static_cast<std::size_t>(r)];
    for (int j = 1; j <= c; ++j) out.positions.push_back((q[static_cast<std::size_t>(j - 1)] + c - j) * p + r);
  }
  return to_partition(out);
}

std::vector<int> residue_content(const Partition& lambda, int p) {
  std::vector<int> out(static_cast<std::size_t>(p), 0);
  for (const auto& n : nodes(lambda)) ++out[static_cast<std::size_t>(residue(n, p))];
  return out;
}

bool same_block(const Partition& lambda, const Partition& mu, int p) {
  if (lambda.size() != mu.size()) throw SizeMismatch("block membership compares partitions of equal size");
  return p_core(lambda, p) == p_core(mu, p);
}

BlockId BlockId::make(Partition core, int weight, int p) {
  if (p < 2) throw ConfigError("modulus must be at least 2");
  if (weight < 0) throw ConfigError("block weight must be non-negative");
  if (p_core(core, p) != core) throw ConfigError(core.str() + " is not a " + std::to_string(p) + "-core");
  return BlockId{p, std::move(core), weight};
}

BlockId block_of(const Partition& lambda, int p) { return BlockId{p, p_core(lambda, p), p_weight(lambda, p)}; }

bool is_rouquier(const BlockId& block, int b) {
  const auto display = from_partition(block.core, block.p, b);
  if (block.weight == 0) return true;
  for (int r = 1; r < block.p; ++r)
    if (display.runner_count(r) < display.runner_count(r - 1) + (block.weight - 1)) return false;
  return true;
}

bool is_rouquier(const BlockId& block) { return is_rouquier(block, normalized_beads(block.core, block.p)); }

namespace {

void multipartitions(int remaining, int slot, int slots, std::vector<Partition>& current,
                     std::vector<std::vector<Partition>>& out) {
  if (slot == slots - 1) {
    for (const auto& last : partitions_of(remaining)) {
      current[static_cast<std::size_t>(slot)] = last;
      out.push_back(current);
    }
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    for (const auto& part : partitions_of(k)) {
      current[static_cast<std::size_t>(slot)] = part;
      multipartitions(remaining - k, slot + 1, slots, current, out);
    }
  }
}

}  // namespace

std::vector<Partition> block_members(const BlockId& block) {
  std::vector<std::vector<Partition>> quotients;
  std::vector<Partition> current(static_cast<std::size_t>(block.p));
  multipartitions(block.weight, 0, block.p, current, quotients);
  std::vector<Partition> out;
  out.reserve(quotients.size());
  for (const auto& q : quotients) out.push_back(from_core_and_quotient(block.core, q, block.p));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

RouquierDecomposition rouquier_decompose(const Partition& lambda, int p) {
  if (p < 3) throw ConfigError("Rouquier decomposition needs p >= 3");
  const auto block = block_of(lambda, p);
  if (!is_rouquier(block))
    throw DomainError(lambda.str() + " does not lie in a Rouquier block (core " + block.core.str() + ", weight " +
                      std::to_string(block.weight) + ")");
  const auto quotient = p_quotient(lambda, p);
  for (int r = 1; r < p - 1; ++r)
    if (!quotient[static_cast<std::size_t>(r)].empty())
      throw DomainError(lambda.str() + " has a non-empty quotient on runner " + std::to_string(r));

  RouquierDecomposition dec;
  dec.p = p;
  dec.lambda = lambda;
  dec.core = block.core;
  dec.weight = block.weight;
  dec.mu = quotient.back();
  dec.tau = conjugate(quotient.front());
  dec.lambda_tilde = conjugate(add_scaled(conjugate(block.core), dec.tau, p));
  dec.sigma = add_scaled(block.core, dec.mu, p);
  if (add_scaled(dec.lambda_tilde, dec.mu, p) != lambda)
    throw InternalError("abacus convention mismatch: lambda_tilde + p*mu != lambda for " + lambda.str());
  return dec;
}

}  // namespace spechtkit
