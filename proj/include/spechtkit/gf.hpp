#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace spechtkit {

/// An element of GF(p).
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  FieldElement operator+(FieldElement o) const { return {(value + o.value) % modulus, modulus}; }
  FieldElement operator-(FieldElement o) const { return {(value + modulus - o.value) % modulus, modulus}; }
  FieldElement operator*(FieldElement o) const { return {value * o.value % modulus, modulus}; }
  FieldElement inverse() const;
  bool operator==(const FieldElement&) const = default;
};

/// Arithmetic tables for a prime p < 256.
class PrimeField {
 public:
  explicit PrimeField(int p);
  int p() const { return p_; }
  std::uint8_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint8_t>((a + b) % p_); }
  std::uint8_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
  std::uint8_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint8_t>(a * b % p_); }
  std::uint8_t neg(std::uint32_t a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
  std::uint8_t inv(std::uint32_t a) const;
  /// Reduces a signed integer into [0, p).
  std::uint8_t from_int(long long v) const { return static_cast<std::uint8_t>(((v % p_) + p_) % p_); }

 private:
  int p_;
  std::vector<std::uint8_t> inverse_;
};

using Vec = std::vector<std::uint8_t>;

/// Dense matrix over GF(p), p prime and < 256, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, int p);

  static Matrix identity(int n, int p);
  /// Entries are reduced mod p.
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, int p);
  /// Builds a matrix whose rows are the given vectors.
  static Matrix from_vectors(const std::vector<Vec>& rows, int cols, int p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int modulus() const { return p_; }

  std::uint8_t operator()(int i, int j) const { return data_[index(i, j)]; }
  std::uint8_t& at(int i, int j) { return data_[index(i, j)]; }
  std::span<std::uint8_t> row(int i) { return {data_.data() + index(i, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const std::uint8_t> row(int i) const { return {data_.data() + index(i, 0), static_cast<std::size_t>(cols_)}; }
  Vec row_vec(int i) const { auto r = row(i); return {r.begin(), r.end()}; }
  Vec col_vec(int j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(std::uint32_t c) const;
  Matrix operator-() const { return scaled(static_cast<std::uint32_t>(p_ - 1)); }

  /// this * v for a column vector v.
  Vec apply(std::span<const std::uint8_t> v) const;
  /// v * this for a row vector v.
  Vec apply_left(std::span<const std::uint8_t> v) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const Matrix&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }

  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<std::uint8_t> data_;
};

struct EchelonForm {
  Matrix reduced;  // reduced row-echelon form, same shape as the input
  int rank = 0;
  std::vector<int> pivots;
};

EchelonForm echelon(const Matrix& m);
int rank(const Matrix& m);

/// Rows form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);

/// Some x with a x = b, or nullopt. Throws SizeMismatch on incompatible shapes.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Throws SizeMismatch if the matrix is not square.
FieldElement det_mod_p(const Matrix& m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// A seed-deterministic random element of the algebra generated by `gens`:
/// a linear combination of products of up to `max_word` generators.
/// Throws ConfigError on an empty or inconsistent generator set.
Matrix random_matrix_word(std::span<const Matrix> gens, std::uint64_t seed, int max_word = 4);

/// Incrementally maintained row-echelon basis of a subspace of GF(p)^n.
class EchelonBasis {
 public:
  EchelonBasis(int n, int p);
  /// Reduces v against the basis; returns the (possibly zero) remainder.
  Vec reduce(Vec v) const;
  /// Adds v to the span; returns false if it was already there.
  bool insert(Vec v);
  bool contains(Vec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  /// Coordinates of a vector already in the span, w.r.t. rows().
  Vec coordinates(Vec v) const;

 private:
  int n_;
  PrimeField field_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<int> pivot_row_;  // column -> row index or -1
};

/// Polynomials over GF(p), coefficients lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

Poly poly_trim(Poly f);
Poly poly_mul(const Poly& f, const Poly& g, int p);
/// Remainder of f modulo a non-zero g.
Poly poly_mod(const Poly& f, const Poly& g, int p);
/// Exact quotient f / g when g divides f, otherwise nullopt.
std::optional<Poly> poly_divide(const Poly& f, const Poly& g, int p);

/// det(x I - m), monic, via Hessenberg reduction.
Poly characteristic_polynomial(const Matrix& m);
/// f(m) for a square m.
Matrix evaluate(const Poly& f, const Matrix& m);

/// Monic irreducible polynomials of the given degree, in a fixed order.
std::vector<Poly> monic_irreducibles(int degree, int p);

}  // namespace spechtkit
