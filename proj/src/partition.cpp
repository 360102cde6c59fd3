#include "spechtkit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>

#include "spechtkit/errors.hpp"

namespace spechtkit {

namespace {

void require_modulus(int p) {
  if (p < 2) throw ConfigError("modulus must be at least 2, got " + std::to_string(p));
}

// Parts of lambda as a vector padded with zeros up to `len`.
std::vector<int> padded(const Partition& lambda, std::size_t len) {
  std::vector<int> out(lambda.vec());
  if (out.size() < len) out.resize(len, 0);
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-") return Partition{};
  std::vector<int> parts;
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ShapeError("cannot parse partition part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (std::any_of(parts.begin(), parts.end(), [](int v) { return v <= 0; }))
    throw ShapeError("partition parts must be positive");
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("dominance compares partitions of equal size: " + lambda.str() + " vs " + mu.str());
  int a = 0, b = 0;
  const auto n = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < n; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

bool is_p_regular(const Partition& lambda, int p) {
  require_modulus(p);
  int run = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    run = (i > 0 && lambda[i] == lambda[i - 1]) ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

bool is_p_restricted(const Partition& lambda, int p) {
  require_modulus(p);
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] - lambda[i + 1] >= p) return false;
  return true;
}

Partition add_scaled(const Partition& tau, const Partition& mu, int p) {
  require_modulus(p);
  const auto len = static_cast<std::size_t>(std::max(tau.length(), mu.length()));
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = tau[i] + p * mu[i];
  try {
    return Partition(std::move(out));
  } catch (const ShapeError&) {
    throw ShapeError(tau.str() + " + " + std::to_string(p) + "*(" + mu.str() + ") is not a partition");
  }
}

std::pair<Partition, Partition> p_adic_split(const Partition& lambda, int p) {
  require_modulus(p);
  const int len = lambda.length();
  std::vector<int> tau(len), mu(len);
  int tail_tau = 0, tail_mu = 0;
  for (int i = len - 1; i >= 0; --i) {
    const int gap = lambda[i] - lambda[i + 1];
    tail_tau += gap % p;
    tail_mu += gap / p;
    tau[i] = tail_tau;
    mu[i] = tail_mu;
  }
  return {Partition(std::move(tau)), Partition(std::move(mu))};
}

std::vector<Node> nodes(const Partition& lambda) {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) out.push_back({i + 1, j});
  return out;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 0; i <= lambda.length(); ++i)
    if (i == 0 || lambda[i - 1] > lambda[i]) out.push_back({i + 1, lambda[i] + 1});
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] > lambda[i + 1]) out.push_back({i + 1, lambda[i]});
  return out;
}

int residue(const Node& node, int p) {
  require_modulus(p);
  return (((node.col - node.row) % p) + p) % p;
}

Partition add_node(const Partition& lambda, const Node& node) {
  auto parts = padded(lambda, static_cast<std::size_t>(node.row));
  if (parts[node.row - 1] + 1 != node.col) throw ShapeError("node is not addable");
  parts[node.row - 1] += 1;
  return Partition(std::move(parts));
}

Partition remove_node(const Partition& lambda, const Node& node) {
  auto parts = padded(lambda, static_cast<std::size_t>(node.row));
  if (parts[node.row - 1] != node.col) throw ShapeError("node is not removable");
  parts[node.row - 1] -= 1;
  return Partition(std::move(parts));
}

namespace {

// Kleshchev's i-signature: i-addable (+) and i-removable (-) nodes read top
// to bottom, with "+-" pairs cancelled. Returns (normal removable, conormal
// addable) nodes, each top to bottom.
std::pair<std::vector<Node>, std::vector<Node>> reduced_signature(const Partition& lambda, int i, int p) {
  struct Entry {
    Node node;
    bool addable;
  };
  std::vector<Entry> entries;
  for (const auto& n : addable_nodes(lambda))
    if (residue(n, p) == i) entries.push_back({n, true});
  for (const auto& n : removable_nodes(lambda))
    if (residue(n, p) == i) entries.push_back({n, false});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.node.row < b.node.row; });

  std::vector<Node> open_plus, normal;
  for (const auto& e : entries) {
    if (e.addable) {
      open_plus.push_back(e.node);
    } else if (!open_plus.empty()) {
      open_plus.pop_back();
    } else {
      normal.push_back(e.node);
    }
  }
  return {normal, open_plus};
}

std::optional<Node> good_node(const Partition& lambda, int i, int p) {
  auto normal = reduced_signature(lambda, i, p).first;
  if (normal.empty()) return std::nullopt;
  return normal.back();
}

std::optional<Node> cogood_node(const Partition& lambda, int i, int p) {
  auto conormal = reduced_signature(lambda, i, p).second;
  if (conormal.empty()) return std::nullopt;
  return conormal.front();
}

}  // namespace

// M(lambda) via the crystal of the basic module: write lambda as a sequence of
// good-node additions with residues i_1..i_d, then replay the path with
// residues -i_k.
Partition mullineux(const Partition& lambda, int p) {
  require_modulus(p);
  if (!is_p_regular(lambda, p))
    throw DomainError("Mullineux map needs a " + std::to_string(p) + "-regular partition, got " + lambda.str());
  std::vector<int> path;
  Partition current = lambda;
  while (!current.empty()) {
    bool removed = false;
    for (int i = 0; i < p && !removed; ++i) {
      if (auto node = good_node(current, i, p)) {
        current = remove_node(current, *node);
        path.push_back(i);
        removed = true;
      }
    }
    if (!removed) throw InternalError("no good node on p-regular partition " + current.str());
  }
  Partition image;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const int r = (p - *it) % p;
    auto node = cogood_node(image, r, p);
    if (!node) throw InternalError("no cogood node while replaying Mullineux path");
    image = add_node(image, *node);
  }
  return image;
}

Partition mullineux_restricted(const Partition& tau, int p) {
  return conjugate(mullineux(conjugate(tau), p));
}

std::vector<Node> p_rim(const Partition& lambda, int p) {
  require_modulus(p);
  std::vector<Node> rim;
  if (lambda.empty()) return rim;
  int i = 1, j = lambda[0];
  while (true) {
    rim.push_back({i, j});
    if (i < lambda.length() && lambda[static_cast<std::size_t>(i)] >= j) {
      ++i;
    } else if (j > 1) {
      --j;
    } else {
      break;
    }
  }
  std::vector<Node> out;
  std::size_t start = 0;
  while (start < rim.size()) {
    const std::size_t stop = std::min(rim.size(), start + static_cast<std::size_t>(p));
    out.insert(out.end(), rim.begin() + static_cast<std::ptrdiff_t>(start), rim.begin() + static_cast<std::ptrdiff_t>(stop));
    const int next_row = rim[stop - 1].row + 1;
    auto next = std::find_if(rim.begin() + static_cast<std::ptrdiff_t>(stop), rim.end(),
                             [&](const Node& n) { return n.row == next_row; });
    if (next == rim.end()) break;
    start = static_cast<std::size_t>(next - rim.begin());
  }
  return out;
}

std::vector<MullineuxColumn> mullineux_symbol(const Partition& lambda, int p) {
  std::vector<MullineuxColumn> symbol;
  Partition current = lambda;
  while (!current.empty()) {
    auto rim = p_rim(current, p);
    symbol.push_back({static_cast<int>(rim.size()), current.length()});
    std::vector<int> parts(current.vec());
    for (const auto& n : rim) parts[static_cast<std::size_t>(n.row - 1)] -= 1;
    current = Partition(std::move(parts));
  }
  return symbol;
}

std::vector<MullineuxColumn> mullineux_symbol_conjugate(std::span<const MullineuxColumn> symbol, int p) {
  std::vector<MullineuxColumn> out;
  out.reserve(symbol.size());
  for (const auto& col : symbol) {
    const int eps = col.rim_size % p == 0 ? 0 : 1;
    out.push_back({col.rim_size, col.rim_size - col.rows + eps});
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> out;
  for (const auto& n : nodes(lambda))
    out.push_back(lambda[static_cast<std::size_t>(n.row - 1)] - n.col + conj[static_cast<std::size_t>(n.col - 1)] - n.row + 1);
  return out;
}

namespace {

// Exact ratio of products of small integers, evaluated with saturation.
class PrimeTally {
 public:
  void multiply_factorial(int n, int sign) {
    for (int k = 2; k <= n; ++k) multiply(k, sign);
  }
  void multiply(int n, int sign) {
    for (int q = 2; q * q <= n; ++q) {
      while (n % q == 0) {
        exponents_[q] += sign;
        n /= q;
      }
    }
    if (n > 1) exponents_[n] += sign;
  }
  std::uint64_t value() const {
    std::uint64_t out = 1;
    for (auto [prime, e] : exponents_) {
      if (e < 0) throw InternalError("non-integral dimension ratio");
      for (int k = 0; k < e; ++k)
        if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(prime), &out)) return UINT64_MAX;
    }
    return out;
  }

 private:
  std::map<int, int> exponents_;
};

}  // namespace

std::uint64_t specht_dimension(const Partition& lambda) {
  PrimeTally tally;
  tally.multiply_factorial(lambda.size(), +1);
  for (int h : hook_lengths(lambda)) tally.multiply(h, -1);
  return tally.value();
}

std::uint64_t multinomial(std::span<const int> blocks) {
  PrimeTally tally;
  tally.multiply_factorial(std::accumulate(blocks.begin(), blocks.end(), 0), +1);
  for (int b : blocks) tally.multiply_factorial(b, -1);
  return tally.value();
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace spechtkit
