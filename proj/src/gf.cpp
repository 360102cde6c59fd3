#include "spechtkit/gf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <utility>

#include "spechtkit/errors.hpp"
#include "spechtkit/partition.hpp"

namespace spechtkit {

FieldElement FieldElement::inverse() const {
  if (value % modulus == 0) throw DomainError("zero has no inverse");
  std::uint32_t result = 1, base = value % modulus, e = modulus - 2;
  while (e) {
    if (e & 1u) result = result * base % modulus;
    base = base * base % modulus;
    e >>= 1u;
  }
  return {result, modulus};
}

PrimeField::PrimeField(int p) : p_(p), inverse_(static_cast<std::size_t>(p), 0) {
  if (p < 2 || p > 255 || !is_prime(p)) throw ConfigError("field modulus must be a prime below 256, got " + std::to_string(p));
  for (int a = 1; a < p; ++a) inverse_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(FieldElement{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(p)}.inverse().value);
}

std::uint8_t PrimeField::inv(std::uint32_t a) const {
  if (a % static_cast<std::uint32_t>(p_) == 0) throw DomainError("zero has no inverse");
  return inverse_[a % static_cast<std::uint32_t>(p_)];
}

namespace {

// dst += f * src (mod p), via a per-factor lookup table.
class Axpy {
 public:
  Axpy(int p, std::uint32_t f) : p_(static_cast<std::uint8_t>(p)) {
    for (int x = 0; x < p; ++x) table_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(f * static_cast<std::uint32_t>(x) % static_cast<std::uint32_t>(p));
  }
  void operator()(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src) const {
    const std::size_t n = dst.size();
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint8_t s = src[k];
      if (!s) continue;
      unsigned v = static_cast<unsigned>(dst[k]) + table_[s];
      dst[k] = static_cast<std::uint8_t>(v >= p_ ? v - p_ : v);
    }
  }

 private:
  std::uint8_t p_;
  std::array<std::uint8_t, 256> table_{};
};

void scale_row(std::span<std::uint8_t> row, std::uint32_t f, int p) {
  for (auto& x : row) x = static_cast<std::uint8_t>(x * f % static_cast<std::uint32_t>(p));
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.modulus() != b.modulus()) throw SizeMismatch("matrices over different fields");
}

// In-place reduced row-echelon form; pivots restricted to the first `pivot_cols` columns.
std::vector<int> rref_inplace(Matrix& m, int pivot_cols) {
  const PrimeField field(m.modulus());
  const int p = m.modulus();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < pivot_cols && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      auto a = m.row(pivot), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    scale_row(m.row(r), field.inv(m(r, c)), p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || !m(i, c)) continue;
      Axpy(p, field.neg(m(i, c)))(m.row(i), m.row(r));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw ConfigError("negative matrix dimension");
  if (p < 2 || p > 255 || !is_prime(p)) throw ConfigError("field modulus must be a prime below 256, got " + std::to_string(p));
}

Matrix Matrix::identity(int n, int p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, int p) {
  const PrimeField field(p);
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c, p);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw SizeMismatch("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = field.from_int(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

Matrix Matrix::from_vectors(const std::vector<Vec>& rows, int cols, int p) {
  Matrix m(static_cast<int>(rows.size()), cols, p);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != cols) throw SizeMismatch("vector length mismatch");
    std::copy(rows[static_cast<std::size_t>(i)].begin(), rows[static_cast<std::size_t>(i)].end(), m.row(i).begin());
  }
  return m;
}

Vec Matrix::col_vec(int j) const {
  Vec out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) throw SizeMismatch("matrix product dimension mismatch");
  Matrix out(rows_, o.cols_, p_);
  const auto pp = static_cast<std::uint32_t>(p_);
  // Accumulate unreduced products; flush before uint32 overflow.
  const std::uint32_t max_terms = std::max<std::uint32_t>(1, UINT32_MAX / ((pp - 1) * (pp - 1) + 1) - 1);
  std::vector<std::uint32_t> acc(static_cast<std::size_t>(o.cols_));
  for (int i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint32_t terms = 0;
    for (int k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(i, k);
      if (!a) continue;
      const auto brow = o.row(k);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += a * brow[j];
      if (++terms == max_terms) {
        for (auto& x : acc) x %= pp;
        terms = 0;
      }
    }
    auto orow = out.row(i);
    for (std::size_t j = 0; j < acc.size(); ++j) orow[j] = static_cast<std::uint8_t>(acc[j] % pp);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatch("matrix sum dimension mismatch");
  Matrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = static_cast<std::uint8_t>((data_[k] + o.data_[k]) % p_);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(std::uint32_t c) const {
  Matrix out(*this);
  c %= static_cast<std::uint32_t>(p_);
  for (auto& x : out.data_) x = static_cast<std::uint8_t>(x * c % static_cast<std::uint32_t>(p_));
  return out;
}

Vec Matrix::apply(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != cols_) throw SizeMismatch("matrix-vector dimension mismatch");
  Vec out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    const auto r = row(i);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<std::uint32_t>(r[j]) * v[j];
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc % static_cast<std::uint64_t>(p_));
  }
  return out;
}

Vec Matrix::apply_left(std::span<const std::uint8_t> v) const {
  if (static_cast<int>(v.size()) != rows_) throw SizeMismatch("vector-matrix dimension mismatch");
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(cols_), 0);
  for (int i = 0; i < rows_; ++i) {
    const std::uint32_t a = v[static_cast<std::size_t>(i)];
    if (!a) continue;
    const auto r = row(i);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += a * r[j];
  }
  Vec out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) out[j] = static_cast<std::uint8_t>(acc[j] % static_cast<std::uint64_t>(p_));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

EchelonForm echelon(const Matrix& m) {
  EchelonForm out{m, 0, {}};
  out.pivots = rref_inplace(out.reduced, m.cols());
  out.rank = static_cast<int>(out.pivots.size());
  return out;
}

int rank(const Matrix& m) { return echelon(m).rank; }

Matrix nullspace(const Matrix& m) {
  const auto form = echelon(m);
  const PrimeField field(m.modulus());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : form.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec x(static_cast<std::size_t>(m.cols()), 0);
    x[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < form.rank; ++i) x[static_cast<std::size_t>(form.pivots[static_cast<std::size_t>(i)])] = field.neg(form.reduced(i, f));
    basis.push_back(std::move(x));
  }
  return Matrix::from_vectors(basis, m.cols(), m.modulus());
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw SizeMismatch("solve needs a and b with equal row counts");
  Matrix aug(a.rows(), a.cols() + b.cols(), a.modulus());
  for (int i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), aug.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), aug.row(i).begin() + a.cols());
  }
  const auto pivots = rref_inplace(aug, a.cols());
  const int r = static_cast<int>(pivots.size());
  for (int i = r; i < aug.rows(); ++i)
    for (int j = a.cols(); j < aug.cols(); ++j)
      if (aug(i, j)) return std::nullopt;
  Matrix x(a.cols(), b.cols(), a.modulus());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[static_cast<std::size_t>(i)], j) = aug(i, a.cols() + j);
  return x;
}

FieldElement det_mod_p(const Matrix& m) {
  if (!m.is_square()) throw SizeMismatch("determinant of a non-square matrix");
  const PrimeField field(m.modulus());
  const auto p = static_cast<std::uint32_t>(m.modulus());
  Matrix work(m);
  std::uint32_t det = 1;
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (work(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) return {0, p};
    if (pivot != c) {
      auto a = work.row(pivot), b = work.row(c);
      std::swap_ranges(a.begin(), a.end(), b.begin());
      det = (p - det) % p;
    }
    det = det * work(c, c) % p;
    const std::uint8_t inv = field.inv(work(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (!work(i, c)) continue;
      Axpy(m.modulus(), field.neg(field.mul(work(i, c), inv)))(work.row(i), work.row(c));
    }
  }
  return {det, p};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw SizeMismatch("inverse of a non-square matrix");
  auto x = solve(m, Matrix::identity(m.rows(), m.modulus()));
  if (!x || *x * m != Matrix::identity(m.rows(), m.modulus())) return std::nullopt;
  return x;
}

Matrix random_matrix_word(std::span<const Matrix> gens, std::uint64_t seed, int max_word) {
  if (gens.empty()) throw ConfigError("random word needs at least one generator");
  const int n = gens[0].rows();
  const int p = gens[0].modulus();
  for (const auto& g : gens)
    if (!g.is_square() || g.rows() != n || g.modulus() != p) throw ConfigError("generators must be square of equal size");
  if (max_word < 1) throw ConfigError("word length must be positive");
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int terms = max_word == 1 && gens.size() == 1 ? 1 : pick(2, 3);
  Matrix sum(n, n, p);
  for (int t = 0; t < terms; ++t) {
    const int len = pick(1, max_word);
    Matrix word = gens[static_cast<std::size_t>(pick(0, static_cast<int>(gens.size()) - 1))];
    for (int k = 1; k < len; ++k) word = word * gens[static_cast<std::size_t>(pick(0, static_cast<int>(gens.size()) - 1))];
    const auto coeff = static_cast<std::uint32_t>(t == 0 ? 1 : pick(1, p - 1));
    sum = sum + word.scaled(coeff);
  }
  return sum;
}

EchelonBasis::EchelonBasis(int n, int p) : n_(n), field_(p), pivot_row_(static_cast<std::size_t>(n), -1) {}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint8_t c = v[static_cast<std::size_t>(pivots_[k])];
    if (c) Axpy(field_.p(), field_.neg(c))(v, rows_[k]);
  }
  return v;
}

bool EchelonBasis::insert(Vec v) {
  if (static_cast<int>(v.size()) != n_) throw SizeMismatch("vector length mismatch");
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](std::uint8_t x) { return x != 0; });
  if (it == v.end()) return false;
  const int pivot = static_cast<int>(it - v.begin());
  scale_row(v, field_.inv(*it), field_.p());
  pivot_row_[static_cast<std::size_t>(pivot)] = static_cast<int>(rows_.size());
  pivots_.push_back(pivot);
  rows_.push_back(std::move(v));
  return true;
}

bool EchelonBasis::contains(Vec v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

Vec EchelonBasis::coordinates(Vec v) const {
  Vec coords(rows_.size(), 0);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint8_t c = v[static_cast<std::size_t>(pivots_[k])];
    coords[k] = c;
    if (c) Axpy(field_.p(), field_.neg(c))(v, rows_[k]);
  }
  if (!std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; }))
    throw DomainError("vector is not in the span");
  return coords;
}

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = (out[i + j] + f[i] * g[j]) % static_cast<std::uint32_t>(p);
  return poly_trim(std::move(out));
}

namespace {

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g, int p) {
  const PrimeField field(p);
  const Poly d = poly_trim(g);
  if (d.empty()) throw DomainError("polynomial division by zero");
  Poly r = poly_trim(f);
  if (r.size() < d.size()) return {{}, r};
  Poly q(r.size() - d.size() + 1, 0);
  const std::uint32_t lead_inv = field.inv(d.back());
  while (!r.empty() && r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const std::uint32_t c = field.mul(r.back(), lead_inv);
    q[shift] = c;
    for (std::size_t k = 0; k < d.size(); ++k) r[shift + k] = field.sub(r[shift + k], field.mul(c, d[k]));
    r = poly_trim(std::move(r));
  }
  return {poly_trim(std::move(q)), r};
}

}  // namespace

Poly poly_mod(const Poly& f, const Poly& g, int p) { return poly_divmod(f, g, p).second; }

std::optional<Poly> poly_divide(const Poly& f, const Poly& g, int p) {
  auto [q, r] = poly_divmod(f, g, p);
  if (!r.empty()) return std::nullopt;
  return q;
}

Poly characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw SizeMismatch("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  const int p = m.modulus();
  const PrimeField field(p);
  std::vector<std::vector<std::uint32_t>> h(static_cast<std::size_t>(n), std::vector<std::uint32_t>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  const auto pp = static_cast<std::uint32_t>(p);

  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    const auto uc = static_cast<std::size_t>(c);
    int pivot = -1;
    for (int i = c + 1; i < n; ++i)
      if (h[static_cast<std::size_t>(i)][uc]) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    const auto up = static_cast<std::size_t>(pivot), next = uc + 1;
    if (up != next) {
      std::swap(h[up], h[next]);
      for (auto& row : h) std::swap(row[up], row[next]);
    }
    const std::uint32_t inv = field.inv(h[next][uc]);
    for (std::size_t i = next + 1; i < static_cast<std::size_t>(n); ++i) {
      const std::uint32_t f = h[i][uc] * inv % pp;
      if (!f) continue;
      const std::uint32_t nf = (pp - f) % pp;
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) h[i][j] = (h[i][j] + nf * h[next][j]) % pp;
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) h[j][next] = (h[j][next] + f * h[j][i]) % pp;
    }
  }

  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<Poly> polys(static_cast<std::size_t>(n) + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
    Poly next(k + 1, 0);
    const Poly& prev = polys[k - 1];
    const std::uint32_t diag = h[k - 1][k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = (next[d + 1] + prev[d]) % pp;
      next[d] = (next[d] + (pp - diag) * prev[d]) % pp;
    }
    std::uint32_t t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = t * h[i][i - 1] % pp;
      if (!t) break;
      const std::uint32_t coef = h[i - 1][k - 1] * t % pp;
      if (!coef) continue;
      const Poly& lower = polys[i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) next[d] = (next[d] + (pp - coef) * lower[d]) % pp;
    }
    polys[k] = std::move(next);
  }
  return polys[static_cast<std::size_t>(n)];
}

Matrix evaluate(const Poly& f, const Matrix& m) {
  if (!m.is_square()) throw SizeMismatch("polynomial of a non-square matrix");
  const int n = m.rows();
  const Poly g = poly_trim(f);
  if (g.empty()) return Matrix(n, n, m.modulus());
  auto plus_scalar = [&](Matrix a, std::uint32_t c) {
    for (int i = 0; i < n; ++i) a.at(i, i) = static_cast<std::uint8_t>((a(i, i) + c) % static_cast<std::uint32_t>(m.modulus()));
    return a;
  };
  if (g.size() == 1) return Matrix::identity(n, m.modulus()).scaled(g[0]);
  Matrix acc = plus_scalar(m.scaled(g.back()), g[g.size() - 2]);
  for (std::size_t k = g.size() - 2; k-- > 0;) acc = plus_scalar(acc * m, g[k]);
  return acc;
}

std::vector<Poly> monic_irreducibles(int degree, int p) {
  static std::map<std::pair<int, int>, std::vector<Poly>> cache;
  static std::mutex cache_mutex;
  if (degree < 1) return {};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find({degree, p}); it != cache.end()) return it->second;
  }
  std::vector<Poly> smaller;
  for (int d = 1; 2 * d <= degree; ++d) {
    auto part = monic_irreducibles(d, p);
    smaller.insert(smaller.end(), part.begin(), part.end());
  }
  std::vector<Poly> out;
  std::size_t total = 1;
  for (int k = 0; k < degree; ++k) total *= static_cast<std::size_t>(p);
  for (std::size_t code = 0; code < total; ++code) {
    Poly f(static_cast<std::size_t>(degree) + 1, 0);
    f.back() = 1;
    std::size_t c = code;
    for (int k = 0; k < degree; ++k) {
      f[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    const bool reducible = std::any_of(smaller.begin(), smaller.end(), [&](const Poly& g) { return poly_mod(f, g, p).empty(); });
    if (!reducible) out.push_back(std::move(f));
  }
  std::lock_guard lock(cache_mutex);
  cache[{degree, p}] = out;
  return out;
}

}  // namespace spechtkit
