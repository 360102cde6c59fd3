#include "spechtkit/meataxe.hpp"

#include <optional>

#include "spechtkit/errors.hpp"

namespace spechtkit {

EchelonBasis spin(std::span<const Matrix> gens, const Vec& v, int dim, int p) {
  EchelonBasis basis(dim, p);
  if (!basis.insert(v)) return basis;
  std::vector<Vec> frontier{v};
  for (std::size_t k = 0; k < frontier.size() && basis.dim() < dim; ++k)
    for (const auto& g : gens) {
      auto w = g.apply(frontier[k]);
      if (basis.insert(w)) frontier.push_back(std::move(w));
      if (basis.dim() == dim) break;
    }
  return basis;
}

namespace {

struct Candidate {
  Matrix theta;
  int nullity = 0;
};

// Spins every line of the row space of `kernel`; returns the first proper subspace.
std::optional<EchelonBasis> spin_lines(std::span<const Matrix> gens, const Matrix& kernel, int dim, int p) {
  const int k = kernel.rows();
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(k), 0);
  const PrimeField field(p);
  while (true) {
    int pos = 0;
    while (pos < k && coeffs[static_cast<std::size_t>(pos)] == static_cast<std::uint32_t>(p - 1)) coeffs[static_cast<std::size_t>(pos++)] = 0;
    if (pos == k) return std::nullopt;
    ++coeffs[static_cast<std::size_t>(pos)];
    int lead = k - 1;
    while (coeffs[static_cast<std::size_t>(lead)] == 0) --lead;
    if (coeffs[static_cast<std::size_t>(lead)] != 1) continue;
    Vec v(static_cast<std::size_t>(dim), 0);
    for (int r = 0; r < k; ++r) {
      const auto c = coeffs[static_cast<std::size_t>(r)];
      if (!c) continue;
      const auto row = kernel.row(r);
      for (int j = 0; j < dim; ++j) v[static_cast<std::size_t>(j)] = field.add(v[static_cast<std::size_t>(j)], field.mul(c, row[static_cast<std::size_t>(j)]));
    }
    auto sub = spin(gens, v, dim, p);
    if (sub.dim() < dim) return sub;
  }
}

// Some vector spanning the transposed module's submodule certifies reducibility
// but gives a submodule of the dual; translate it to an annihilator in the original.
EchelonBasis annihilator(const EchelonBasis& dual_sub, int dim, int p) {
  const auto ann = nullspace(Matrix::from_vectors(dual_sub.rows(), dim, p));
  EchelonBasis out(dim, p);
  for (int i = 0; i < ann.rows(); ++i) out.insert(ann.row_vec(i));
  return out;
}

}  // namespace

std::optional<EchelonBasis> find_submodule(const GroupRep& rep, const MeatAxeOptions& options) {
  const int n = rep.dim, p = rep.p;
  if (n == 0) throw ConfigError("the zero module has no irreducibility verdict");
  if (n == 1) return std::nullopt;
  if (rep.gens.empty()) {
    // Trivial group: every line is a submodule.
    Vec e(static_cast<std::size_t>(n), 0);
    e[0] = 1;
    EchelonBasis line(n, p);
    line.insert(e);
    return line;
  }
  std::vector<Matrix> transposed;
  for (const auto& g : rep.gens) transposed.push_back(g.transpose());

  std::optional<Candidate> fallback;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    const auto a = random_matrix_word(rep.gens, options.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(attempt), options.max_word);
    const auto cp = characteristic_polynomial(a);
    int field_size = p;
    for (int deg = 1; field_size <= options.max_factor_field && deg <= n; ++deg, field_size *= p) {
      for (const auto& f : monic_irreducibles(deg, p)) {
        if (!poly_divide(cp, f, p)) continue;
        auto theta = evaluate(f, a);
        const auto kernel = nullspace(theta);
        const int nullity = kernel.rows();
        if (nullity == deg) {
          auto sub = spin(rep.gens, kernel.row_vec(0), n, p);
          if (sub.dim() < n) return sub;
          const auto dual_kernel = nullspace(theta.transpose());
          const auto dual_sub = spin(transposed, dual_kernel.row_vec(0), n, p);
          if (dual_sub.dim() < n) return annihilator(dual_sub, n, p);
          return std::nullopt;
        }
        if (!fallback || nullity < fallback->nullity) fallback = Candidate{std::move(theta), nullity};
      }
    }
  }
  if (!fallback) throw Inconclusive("no element with a small-degree factor of its characteristic polynomial");

  // Every submodule meets ker theta or its dual meets ker theta^T, so spinning
  // every line of both kernels decides the question.
  double lines = 1;
  for (int k = 0; k < fallback->nullity; ++k) lines *= p;
  lines = (lines - 1) / (p - 1);
  if (2 * lines > static_cast<double>(options.max_fallback_lines))
    throw Inconclusive("MeatAxe fallback would spin " + std::to_string(static_cast<long long>(2 * lines)) + " lines");
  if (auto sub = spin_lines(rep.gens, nullspace(fallback->theta), n, p)) return sub;
  if (auto dual_sub = spin_lines(transposed, nullspace(fallback->theta.transpose()), n, p)) return annihilator(*dual_sub, n, p);
  return std::nullopt;
}

bool meataxe_irreducible(const GroupRep& rep, const MeatAxeOptions& options) { return !find_submodule(rep, options).has_value(); }

}  // namespace spechtkit
