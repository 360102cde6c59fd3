#pragma once

// Reference implementations used only by the tests. Each one is written
// independently of the library routine it checks.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "spechtkit/partition.hpp"

namespace oracle {

using spechtkit::Partition;

inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline std::vector<int> padded(const Partition& p, std::size_t len) {
  std::vector<int> v(p.vec());
  v.resize(std::max(len, v.size()), 0);
  return v;
}

inline Partition conjugate(const Partition& lambda) {
  std::vector<int> cols;
  for (int j = 1; j <= lambda[0]; ++j) {
    int c = 0;
    for (int part : lambda.parts()) c += part >= j;
    cols.push_back(c);
  }
  return Partition(cols);
}

inline int hook(const Partition& lambda, const Partition& conj, int i, int j) {
  return lambda[static_cast<std::size_t>(i - 1)] - j + conj[static_cast<std::size_t>(j - 1)] - i + 1;
}

/// Removes rim p-hooks one at a time until none is left.
inline Partition rim_hook_core(Partition lambda, int p) {
  while (true) {
    const auto conj = oracle::conjugate(lambda);
    bool removed = false;
    for (int i = 1; i <= lambda.length() && !removed; ++i)
      for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)] && !removed; ++j) {
        if (oracle::hook(lambda, conj, i, j) != p) continue;
        const int r = conj[static_cast<std::size_t>(j - 1)];
        auto parts = lambda.vec();
        for (int k = i; k < r; ++k) parts[static_cast<std::size_t>(k - 1)] = lambda[static_cast<std::size_t>(k)] - 1;
        parts[static_cast<std::size_t>(r - 1)] = j - 1;
        lambda = Partition(parts);
        removed = true;
      }
    if (!removed) return lambda;
  }
}

inline bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa < sb) return false;
  }
  return true;
}

/// Number of semistandard tableaux of shape lambda and content beta (a weak
/// composition), via chains of horizontal strips.
inline std::uint64_t kostka(const Partition& lambda, const std::vector<int>& beta) {
  std::map<std::pair<std::vector<int>, std::size_t>, std::uint64_t> memo;
  std::function<std::uint64_t(const std::vector<int>&, std::size_t)> rec = [&](const std::vector<int>& shape, std::size_t k) -> std::uint64_t {
    int size = std::accumulate(shape.begin(), shape.end(), 0);
    if (k == 0) return size == 0 ? 1 : 0;
    const auto key = std::make_pair(shape, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = beta[k - 1];
    std::uint64_t total = 0;
    // inner shape mu with lambda/mu a horizontal strip: shape[i+1] <= mu[i] <= shape[i]
    std::vector<int> mu(shape.size());
    std::function<void(std::size_t, int)> choose = [&](std::size_t i, int left) {
      if (i == shape.size()) {
        if (left == 0) total += rec(mu, k - 1);
        return;
      }
      const int next = i + 1 < shape.size() ? shape[i + 1] : 0;
      for (int m = shape[i]; m >= next; --m) {
        const int take = shape[i] - m;
        if (take > left) break;
        mu[i] = m;
        choose(i + 1, left - take);
      }
    };
    choose(0, strip);
    memo[key] = total;
    return total;
  };
  return rec(lambda.vec(), beta.size());
}

inline void compositions(int n, std::size_t parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (cur.size() + 1 == parts) {
    cur.push_back(n);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, parts, cur, f);
    cur.pop_back();
  }
}

/// Schur expansion of s_rho * s_nu, read off from dominant monomial
/// coefficients and unwound by unitriangularity of the Kostka matrix.
inline std::map<Partition, long long> schur_product(const Partition& rho, const Partition& nu) {
  const int n = rho.size() + nu.size();
  auto targets = partitions(n);  // lexicographically decreasing
  std::map<Partition, long long> coeff;
  for (const auto& alpha : targets) {
    const auto a = alpha.vec();
    const std::size_t vars = a.size();
    long long monomial = 0;
    // alpha = beta + gamma, beta a weak composition of |rho|.
    std::vector<int> beta(vars, 0);
    std::function<void(std::size_t, int)> split = [&](std::size_t i, int left) {
      if (i == vars) {
        if (left != 0) return;
        std::vector<int> gamma(vars);
        for (std::size_t k = 0; k < vars; ++k) gamma[k] = a[k] - beta[k];
        monomial += static_cast<long long>(kostka(rho, beta) * kostka(nu, gamma));
        return;
      }
      for (int b = 0; b <= std::min(a[i], left); ++b) {
        beta[i] = b;
        split(i + 1, left - b);
      }
    };
    split(0, rho.size());
    for (const auto& [eps, c] : coeff) monomial -= c * static_cast<long long>(kostka(eps, a));
    if (monomial != 0) coeff[alpha] = monomial;
  }
  return coeff;
}

/// All (tau, mu) with lambda = tau + p*mu and tau p-restricted, by exhaustion.
inline std::vector<std::pair<Partition, Partition>> p_adic_splits(const Partition& lambda, int p) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int k = 0; p * k <= lambda.size(); ++k)
    for (const auto& mu : partitions(k)) {
      const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
      std::vector<int> tau(len);
      bool ok = true;
      for (std::size_t i = 0; i < len; ++i) {
        tau[i] = lambda[i] - p * mu[i];
        if (tau[i] < 0 || (i > 0 && tau[i] > tau[i - 1])) ok = false;
      }
      if (!ok) continue;
      const Partition t(tau);
      bool restricted = true;
      for (std::size_t i = 0; i < len; ++i)
        if (t[i] - t[i + 1] >= p) restricted = false;
      if (restricted) out.emplace_back(t, mu);
    }
  return out;
}

/// Determinant of an integer matrix by cofactor-free Bareiss elimination.
inline long long integer_det(std::vector<std::vector<long long>> a) {
  const std::size_t n = a.size();
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * (n ? a[n - 1][n - 1] : 1);
}

inline int valuation(int n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Hook-valuation test for reducibility of S^lambda at an odd prime: some node
/// (a,c) with p | h_ac whose valuation differs from that of a node in its row
/// and from that of a node in its column.
inline bool hook_reducible(const Partition& lambda, int p) {
  const auto conj = oracle::conjugate(lambda);
  for (int a = 1; a <= lambda.length(); ++a)
    for (int c = 1; c <= lambda[static_cast<std::size_t>(a - 1)]; ++c) {
      const int v = valuation(oracle::hook(lambda, conj, a, c), p);
      if (v == 0) continue;
      bool row = false, col = false;
      for (int y = 1; y <= lambda[static_cast<std::size_t>(a - 1)]; ++y) row |= valuation(oracle::hook(lambda, conj, a, y), p) != v;
      for (int b = 1; b <= conj[static_cast<std::size_t>(c - 1)]; ++b) col |= valuation(oracle::hook(lambda, conj, b, c), p) != v;
      if (row && col) return true;
    }
  return false;
}

}  // namespace oracle
