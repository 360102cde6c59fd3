#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spechtkit {

/// A partition: weakly decreasing positive parts. Trailing zeros are
/// stripped on construction so the empty partition has exactly one
/// representation and equality is structural.
class Partition {
 public:
  Partition() = default;
  /// Throws ShapeError unless `parts` is weakly decreasing and non-negative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "6,1,1"; "-" (or the empty string) is the empty partition.
  static Partition parse(std::string_view text);

  std::string str() const;

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 0-based part access; returns 0 past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A node (row, col) of a Young diagram, both 1-based.
struct Node {
  int row = 1;
  int col = 1;
  auto operator<=>(const Node&) const = default;
};

Partition conjugate(const Partition& lambda);

/// lambda ⊵ mu. Throws SizeMismatch if |lambda| != |mu|.
bool dominates(const Partition& lambda, const Partition& mu);

bool is_p_regular(const Partition& lambda, int p);
bool is_p_restricted(const Partition& lambda, int p);

/// Parts tau_i + p*mu_i. Throws ShapeError if the result is not a partition.
Partition add_scaled(const Partition& tau, const Partition& mu, int p);

/// The unique (tau, mu) with tau p-restricted and lambda = tau + p*mu.
std::pair<Partition, Partition> p_adic_split(const Partition& lambda, int p);

/// Mullineux conjugate M(lambda) of a p-regular partition, so that
/// D^lambda (x) sgn = D^{M(lambda)}. Throws DomainError on p-singular input.
Partition mullineux(const Partition& lambda, int p);

/// Restricted-side Mullineux map m(tau) = M(tau')'.
Partition mullineux_restricted(const Partition& tau, int p);

/// One column (|p-rim|, number of rows) of a Mullineux symbol.
struct MullineuxColumn {
  int rim_size = 0;
  int rows = 0;
  auto operator<=>(const MullineuxColumn&) const = default;
};

/// Nodes of the p-rim of lambda (union of its p-segments), top to bottom.
std::vector<Node> p_rim(const Partition& lambda, int p);

/// Mullineux symbol of lambda, obtained by repeatedly peeling the p-rim.
std::vector<MullineuxColumn> mullineux_symbol(const Partition& lambda, int p);

/// Symbol of M(lambda) computed from the symbol of lambda.
std::vector<MullineuxColumn> mullineux_symbol_conjugate(std::span<const MullineuxColumn> symbol, int p);

std::vector<Node> nodes(const Partition& lambda);
std::vector<Node> addable_nodes(const Partition& lambda);
std::vector<Node> removable_nodes(const Partition& lambda);
int residue(const Node& node, int p);

Partition add_node(const Partition& lambda, const Node& node);
Partition remove_node(const Partition& lambda, const Node& node);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Hook lengths in row-major node order.
std::vector<int> hook_lengths(const Partition& lambda);

/// Saturating unsigned arithmetic helpers used for dimension budgets.
/// Returned values are exact when below UINT64_MAX.
std::uint64_t specht_dimension(const Partition& lambda);
std::uint64_t multinomial(std::span<const int> blocks);

bool is_prime(int n);

}  // namespace spechtkit
