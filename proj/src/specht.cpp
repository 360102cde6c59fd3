#include "spechtkit/specht.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "spechtkit/errors.hpp"
#include "spechtkit/tableau.hpp"

namespace spechtkit {

namespace {

void require_prime(int p) {
  if (p < 2 || p > 255 || !is_prime(p)) throw ConfigError("modulus must be a prime below 256, got " + std::to_string(p));
}

void require_compatible(const GroupRep& a, const GroupRep& b) {
  if (a.degree != b.degree) throw ConfigError("representations of different symmetric groups");
  if (a.p != b.p) throw ConfigError("representations over different fields");
}

std::uint8_t minus_one(int p) { return static_cast<std::uint8_t>(p - 1); }

std::string tabloid_key(const Tabloid& t) {
  std::string key(t.size(), '\0');
  for (std::size_t k = 0; k < t.size(); ++k) key[k] = static_cast<char>(t[k]);
  return key;
}

// The coset action of a word under swapping positions i and i+1.
SignedCosetAction::Move coset_move(std::vector<std::uint8_t>& word, int i, bool signed_label,
                                   const std::unordered_map<std::string, int>& index) {
  const auto a = static_cast<std::size_t>(i);
  if (word[a] == word[a + 1]) return {-1, signed_label};
  std::swap(word[a], word[a + 1]);
  const int target = index.at(std::string(word.begin(), word.end()));
  std::swap(word[a], word[a + 1]);
  return {target, false};
}

std::vector<std::uint8_t> block_labels(const Partition& alpha, const Partition& beta) {
  std::vector<std::uint8_t> labels;
  int label = 0;
  for (int part : alpha.parts()) labels.insert(labels.end(), static_cast<std::size_t>(part), static_cast<std::uint8_t>(label++));
  for (int part : beta.parts()) labels.insert(labels.end(), static_cast<std::size_t>(part), static_cast<std::uint8_t>(label++));
  return labels;
}

Matrix stack(const std::vector<Matrix>& blocks, int cols, int p) {
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix out(rows, cols, p);
  int r = 0;
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows(); ++i, ++r) std::copy(b.row(i).begin(), b.row(i).end(), out.row(r).begin());
  return out;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix combination(const std::vector<Matrix>& basis, const std::vector<std::uint32_t>& coeffs) {
  Matrix sum(basis[0].rows(), basis[0].cols(), basis[0].modulus());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k]) sum = sum + basis[k].scaled(coeffs[k]);
  return sum;
}

}  // namespace

GroupRep GroupRep::make(int degree, int dim, int p, std::vector<Matrix> gens) {
  require_prime(p);
  if (degree < 0 || dim < 0) throw ConfigError("degree and dimension must be non-negative");
  if (static_cast<int>(gens.size()) != std::max(degree - 1, 0))
    throw ConfigError("expected " + std::to_string(std::max(degree - 1, 0)) + " generators, got " + std::to_string(gens.size()));
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim || g.modulus() != p) throw ConfigError("generator shape does not match the representation");
  return GroupRep{degree, dim, p, std::move(gens)};
}

bool check_relations(const GroupRep& rep) {
  const auto id = Matrix::identity(rep.dim, rep.p);
  const auto k = rep.gens.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& g = rep.gens[i];
    if (g * g != id) return false;
    if (i + 1 < k) {
      const auto& h = rep.gens[i + 1];
      if (g * h * g != h * g * h) return false;
    }
    for (std::size_t j = i + 2; j < k; ++j)
      if (g * rep.gens[j] != rep.gens[j] * g) return false;
  }
  return true;
}

GroupRep trivial_rep(int degree, int p) { return signed_perm_rep(Partition({degree}), Partition(), p); }

GroupRep sign_rep(int degree, int p) { return signed_perm_rep(Partition(), Partition({degree}), p); }

GroupRep perm_module(const Partition& lambda, int p) { return signed_perm_rep(lambda, Partition(), p); }

GroupRep specht_rep(const Partition& lambda, int p) {
  require_prime(p);
  const int d = lambda.size();
  const auto tabs = standard_tableaux(lambda);
  const int n = static_cast<int>(tabs.size());
  std::map<std::vector<int>, int> index;
  for (int b = 0; b < n; ++b) index.emplace(tabs[static_cast<std::size_t>(b)].row_of, b);

  std::vector<Matrix> gens;
  // Columns whose swapped tableau is row-nonstandard need re-expressing in the
  // standard basis: record them and solve against U in one pass.
  struct Pending {
    int gen;
    int col;
  };
  std::vector<Pending> pending;
  for (int i = 0; i + 1 < d; ++i) {
    Matrix g(n, n, p);
    for (int b = 0; b < n; ++b) {
      const auto& t = tabs[static_cast<std::size_t>(b)];
      const auto a = static_cast<std::size_t>(i), c = a + 1;
      if (t.col_of[a] == t.col_of[c]) {
        g.at(b, b) = minus_one(p);
      } else if (t.row_of[a] == t.row_of[c]) {
        pending.push_back({i, b});
      } else {
        auto rows = t.row_of;
        std::swap(rows[a], rows[c]);
        g.at(index.at(rows), b) = 1;
      }
    }
    gens.push_back(std::move(g));
  }
  if (!pending.empty()) {
    const PrimeField field(p);
    Matrix u(n, n, p);
    for (int b = 0; b < n; ++b) {
      const auto cols = tabs[static_cast<std::size_t>(b)].columns();
      for (int a = 0; a < n; ++a) u.at(a, b) = field.from_int(polytabloid_coefficient(tabs[static_cast<std::size_t>(a)].row_of, cols));
    }
    Matrix v(n, static_cast<int>(pending.size()), p);
    for (std::size_t k = 0; k < pending.size(); ++k) {
      const auto& t = tabs[static_cast<std::size_t>(pending[k].col)];
      const auto cols = t.swapped(pending[k].gen, pending[k].gen + 1).columns();
      for (int a = 0; a < n; ++a)
        v.at(a, static_cast<int>(k)) = field.from_int(polytabloid_coefficient(tabs[static_cast<std::size_t>(a)].row_of, cols));
    }
    const auto x = solve(u, v);
    if (!x) throw InternalError("polytabloid transition matrix is singular for " + lambda.str());
    for (std::size_t k = 0; k < pending.size(); ++k) {
      auto& g = gens[static_cast<std::size_t>(pending[k].gen)];
      for (int a = 0; a < n; ++a) g.at(a, pending[k].col) = (*x)(a, static_cast<int>(k));
    }
  }
  return GroupRep::make(d, n, p, std::move(gens));
}

Matrix gram_matrix(const Partition& lambda, int p) {
  require_prime(p);
  const auto tabs = standard_tableaux(lambda);
  const auto n = tabs.size();
  std::unordered_map<std::string, std::vector<std::pair<int, int>>> buckets;
  for (std::size_t t = 0; t < n; ++t)
    for (auto& [tabloid, sign] : polytabloid_expansion(tabs[t])) buckets[tabloid_key(tabloid)].emplace_back(static_cast<int>(t), sign);
  std::vector<long long> acc(n * n, 0);
  for (const auto& [key, entries] : buckets)
    for (const auto& [s, sign_s] : entries)
      for (const auto& [t, sign_t] : entries) acc[static_cast<std::size_t>(s) * n + static_cast<std::size_t>(t)] += sign_s * sign_t;
  const PrimeField field(p);
  Matrix out(static_cast<int>(n), static_cast<int>(n), p);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) out.at(static_cast<int>(s), static_cast<int>(t)) = field.from_int(acc[s * n + t]);
  return out;
}

SignedCosetAction::SignedCosetAction(const Partition& alpha, const Partition& beta)
    : degree_(alpha.size() + beta.size()), alpha_blocks_(alpha.length()) {
  std::vector<int> blocks(alpha.parts().begin(), alpha.parts().end());
  blocks.insert(blocks.end(), beta.parts().begin(), beta.parts().end());
  const auto count = multinomial(blocks);
  if (count > kMaxCosetDim) throw ConfigError("signed permutation module of dimension " + std::to_string(count) + " is too large");
  if (alpha_blocks_ + beta.length() > 255) throw ConfigError("too many blocks");

  auto word = block_labels(alpha, beta);
  std::unordered_map<std::string, int> index;
  do {
    index.emplace(std::string(word.begin(), word.end()), static_cast<int>(words_.size()));
    words_.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));

  for (int i = 0; i + 1 < degree_; ++i) {
    std::vector<Move> row;
    row.reserve(words_.size());
    for (int b = 0; b < dim(); ++b) {
      auto& w = words_[static_cast<std::size_t>(b)];
      auto m = coset_move(w, i, is_signed_label(w[static_cast<std::size_t>(i)]), index);
      if (m.target < 0) m.target = b;
      row.push_back(m);
    }
    moves_.push_back(std::move(row));
  }
}

GroupRep signed_perm_rep(const Partition& alpha, const Partition& beta, int p) {
  require_prime(p);
  const SignedCosetAction action(alpha, beta);
  const int n = action.dim();
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < action.degree(); ++i) {
    Matrix g(n, n, p);
    for (int b = 0; b < n; ++b) {
      const auto m = action.move(i, b);
      g.at(m.target, b) = m.negate ? minus_one(p) : 1;
    }
    gens.push_back(std::move(g));
  }
  return GroupRep::make(action.degree(), n, p, std::move(gens));
}

GroupRep tensor_sign(const GroupRep& rep) {
  GroupRep out(rep);
  for (auto& g : out.gens) g = -g;
  return out;
}

GroupRep dual_rep(const GroupRep& rep) {
  GroupRep out(rep);
  for (auto& g : out.gens) g = g.transpose();
  return out;
}

GroupRep submodule_rep(const GroupRep& rep, const EchelonBasis& basis) {
  const int k = basis.dim();
  std::vector<Matrix> gens;
  for (const auto& g : rep.gens) {
    Matrix m(k, k, rep.p);
    for (int j = 0; j < k; ++j) {
      Vec coords;
      try {
        coords = basis.coordinates(g.apply(basis.rows()[static_cast<std::size_t>(j)]));
      } catch (const DomainError&) {
        throw ConfigError("subspace is not invariant under the group action");
      }
      for (int i = 0; i < k; ++i) m.at(i, j) = coords[static_cast<std::size_t>(i)];
    }
    gens.push_back(std::move(m));
  }
  return GroupRep::make(rep.degree, k, rep.p, std::move(gens));
}

GroupRep quotient_rep(const GroupRep& rep, const EchelonBasis& basis) {
  std::vector<bool> pivot(static_cast<std::size_t>(rep.dim), false);
  for (int c : basis.pivots()) pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free;
  for (int c = 0; c < rep.dim; ++c)
    if (!pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  const int k = static_cast<int>(free.size());
  std::vector<Matrix> gens;
  for (const auto& g : rep.gens) {
    Matrix m(k, k, rep.p);
    for (int j = 0; j < k; ++j) {
      const auto r = basis.reduce(g.col_vec(free[static_cast<std::size_t>(j)]));
      for (int i = 0; i < k; ++i) m.at(i, j) = r[static_cast<std::size_t>(free[static_cast<std::size_t>(i)])];
    }
    gens.push_back(std::move(m));
  }
  return GroupRep::make(rep.degree, k, rep.p, std::move(gens));
}

GroupRep simple_head_regular(const Partition& lambda, int p) {
  if (!is_p_regular(lambda, p)) throw DomainError(lambda.str() + " is not " + std::to_string(p) + "-regular");
  const auto s = specht_rep(lambda, p);
  const auto radical = nullspace(gram_matrix(lambda, p));
  EchelonBasis basis(s.dim, p);
  for (int i = 0; i < radical.rows(); ++i) basis.insert(radical.row_vec(i));
  return quotient_rep(s, basis);
}

namespace {

// Hom(a, b) with a spun from seed vectors: X is fixed by the images of the
// seeds, and every non-tree edge of the spin gives linear constraints.
HomSpace hom_basis_spin(const GroupRep& a, const GroupRep& b) {
  const int n = a.dim, m = b.dim, p = a.p;
  if (a.gens.empty()) {
    HomSpace all;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        Matrix x(m, n, p);
        x.at(i, j) = 1;
        all.basis.push_back(std::move(x));
      }
    return all;
  }

  struct Node {
    Vec v;
    int parent;
    int gen;
  };
  std::vector<Node> tree;
  std::vector<std::pair<int, int>> relations;
  std::vector<int> seeds;
  EchelonBasis span(n, p);
  for (int j = 0; j < n && span.dim() < n; ++j) {
    Vec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    if (!span.insert(e)) continue;
    seeds.push_back(static_cast<int>(tree.size()));
    tree.push_back({std::move(e), -1, -1});
    for (std::size_t k = tree.size() - 1; k < tree.size(); ++k)
      for (int i = 0; i < static_cast<int>(a.gens.size()); ++i) {
        auto w = a.gens[static_cast<std::size_t>(i)].apply(tree[k].v);
        if (span.insert(w))
          tree.push_back({std::move(w), static_cast<int>(k), i});
        else
          relations.emplace_back(static_cast<int>(k), i);
      }
  }

  const int r = static_cast<int>(seeds.size());
  const int unknowns = r * m;
  if (static_cast<double>(n) * m * unknowns > 4e8) throw Inconclusive("hom space computation exceeds the memory budget");

  std::vector<Vec> cols;
  for (const auto& node : tree) cols.push_back(node.v);
  const auto c_inv = inverse(Matrix::from_vectors(cols, n, p).transpose());
  if (!c_inv) throw InternalError("spin basis is singular");

  // y[k] is the image of tree vector k as an m x unknowns matrix.
  std::vector<Matrix> y;
  y.reserve(tree.size());
  int seed_no = 0;
  for (const auto& node : tree) {
    if (node.parent < 0) {
      Matrix s(m, unknowns, p);
      for (int q = 0; q < m; ++q) s.at(q, seed_no * m + q) = 1;
      ++seed_no;
      y.push_back(std::move(s));
    } else {
      y.push_back(b.gens[static_cast<std::size_t>(node.gen)] * y[static_cast<std::size_t>(node.parent)]);
    }
  }

  const PrimeField field(p);
  EchelonBasis constraints(unknowns, p);
  for (const auto& [k, i] : relations) {
    const auto coeffs = c_inv->apply(a.gens[static_cast<std::size_t>(i)].apply(tree[static_cast<std::size_t>(k)].v));
    Matrix lhs = b.gens[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k)];
    for (int l = 0; l < n; ++l) {
      const auto c = coeffs[static_cast<std::size_t>(l)];
      if (c) lhs = lhs - y[static_cast<std::size_t>(l)].scaled(c);
    }
    for (int q = 0; q < m; ++q) {
      constraints.insert(lhs.row_vec(q));
      if (constraints.dim() == unknowns) return {};
    }
  }

  const auto kernel = nullspace(Matrix::from_vectors(constraints.rows(), unknowns, p));
  HomSpace out;
  for (int s = 0; s < kernel.rows(); ++s) {
    const auto x = kernel.row(s);
    Matrix z(m, n, p);
    for (int k = 0; k < n; ++k) {
      const auto col = y[static_cast<std::size_t>(k)].apply(x);
      for (int q = 0; q < m; ++q) z.at(q, k) = col[static_cast<std::size_t>(q)];
    }
    out.basis.push_back(z * *c_inv);
  }
  return out;
}

}  // namespace

HomSpace hom_basis(const GroupRep& a, const GroupRep& b) {
  require_compatible(a, b);
  if (a.dim == 0 || b.dim == 0) return {};
  if (b.dim <= a.dim) return hom_basis_spin(a, b);
  // X a_i = b_i X  iff  X^T b_i^T = a_i^T X^T.
  auto dual = hom_basis_spin(dual_rep(b), dual_rep(a));
  for (auto& x : dual.basis) x = x.transpose();
  return dual;
}

bool is_summand_irred(const GroupRep& s, const GroupRep& m, std::uint64_t seed) {
  require_compatible(s, m);
  const auto into = hom_basis(s, m);
  if (into.empty()) return false;
  const auto back = hom_basis(m, s);
  if (back.empty()) return false;
  for (const auto& f : into.basis)
    for (const auto& g : back.basis)
      if (is_invertible(g * f)) return true;
  if (hom_basis(s, s).dim() <= 1) return false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, static_cast<std::uint32_t>(s.p - 1));
  for (int trial = 0; trial < 256; ++trial) {
    std::vector<std::uint32_t> cf(into.basis.size()), cg(back.basis.size());
    for (auto& c : cf) c = coeff(rng);
    for (auto& c : cg) c = coeff(rng);
    if (is_invertible(combination(back.basis, cg) * combination(into.basis, cf))) return true;
  }
  return false;
}

bool is_summand_of_signed_perm(const GroupRep& s, const Partition& alpha, const Partition& beta) {
  if (alpha.size() + beta.size() != s.degree) throw SizeMismatch("signed permutation module has the wrong degree");
  const int n = s.dim, p = s.p;
  if (n == 0) return false;
  const auto labels = block_labels(alpha, beta);
  const auto signed_from = static_cast<std::uint8_t>(alpha.length());

  // Hom(S, M) ~ H-equivariant functionals phi, Hom(M, S) ~ H-eigenvectors s0.
  std::vector<Matrix> left, right;
  const auto id = Matrix::identity(n, p);
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (labels[i] != labels[i + 1]) continue;
    const auto chi = labels[i] >= signed_from ? id.scaled(static_cast<std::uint32_t>(p - 1)) : id;
    right.push_back(s.gens[i] - chi);
    left.push_back(s.gens[i].transpose() - chi);
  }
  const auto phis = left.empty() ? id : nullspace(stack(left, n, p));
  const auto vecs = right.empty() ? id : nullspace(stack(right, n, p));
  if (phis.rows() == 0 || vecs.rows() == 0) return false;

  // Walk the cosets, carrying W_b s0 (columns) and phi W_b^{-1} (rows); the
  // composite is sum_b (W_b s0)(phi W_b^{-1}).
  const SignedCosetAction action(alpha, beta);
  const int cosets = action.dim();
  std::vector<Matrix> xs(static_cast<std::size_t>(cosets)), ys(static_cast<std::size_t>(cosets));
  xs[0] = vecs.transpose();
  ys[0] = phis;
  std::vector<bool> seen(static_cast<std::size_t>(cosets), false);
  seen[0] = true;
  std::vector<int> order{0};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int b = order[k];
    for (int i = 0; i + 1 < s.degree; ++i) {
      const int t = action.move(i, b).target;
      if (seen[static_cast<std::size_t>(t)]) continue;
      seen[static_cast<std::size_t>(t)] = true;
      xs[static_cast<std::size_t>(t)] = s.gens[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(b)];
      ys[static_cast<std::size_t>(t)] = ys[static_cast<std::size_t>(b)] * s.gens[static_cast<std::size_t>(i)];
      order.push_back(t);
    }
  }
  if (static_cast<int>(order.size()) != cosets) throw InternalError("coset action is not transitive");

  // Scalar of the composite for every (phi, s0) pair, read off entry (0, 0).
  const int nphi = phis.rows(), nvec = vecs.rows();
  std::vector<std::uint64_t> scalar(static_cast<std::size_t>(nphi * nvec), 0);
  for (int b = 0; b < cosets; ++b) {
    const auto& x = xs[static_cast<std::size_t>(b)];
    const auto& y = ys[static_cast<std::size_t>(b)];
    for (int j = 0; j < nphi; ++j)
      for (int l = 0; l < nvec; ++l) scalar[static_cast<std::size_t>(j * nvec + l)] += static_cast<std::uint64_t>(y(j, 0)) * x(0, l);
  }
  int hit_phi = 0, hit_vec = 0;
  bool found = false;
  for (int j = 0; j < nphi && !found; ++j)
    for (int l = 0; l < nvec && !found; ++l)
      if (scalar[static_cast<std::size_t>(j * nvec + l)] % static_cast<std::uint64_t>(p)) {
        hit_phi = j;
        hit_vec = l;
        found = true;
      }

  // End(S) = k forces the composite to be scalar; check it for one pair.
  if (static_cast<double>(cosets) * n * n <= 5e8) {
    std::vector<std::uint64_t> full(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int b = 0; b < cosets; ++b) {
      const auto& x = xs[static_cast<std::size_t>(b)];
      const auto& y = ys[static_cast<std::size_t>(b)];
      for (int u = 0; u < n; ++u) {
        const std::uint64_t xu = x(u, hit_vec);
        if (!xu) continue;
        for (int v = 0; v < n; ++v) full[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] += xu * y(hit_phi, v);
      }
    }
    const std::uint64_t c = full[0] % static_cast<std::uint64_t>(p);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const std::uint64_t e = full[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] % static_cast<std::uint64_t>(p);
        if (e != (u == v ? c : 0))
          throw InternalError("composite endomorphism is not scalar; the module is not absolutely irreducible");
      }
  }
  return found;
}

bool is_isomorphic_irred(const GroupRep& a, const GroupRep& b, IsoOptions options) {
  require_compatible(a, b);
  if (a.dim != b.dim) return false;
  if (a.dim == 0) return true;
  const auto hom = hom_basis(a, b);
  if (hom.empty()) return false;
  for (const auto& x : hom.basis)
    if (is_invertible(x)) return true;
  const auto h = hom.basis.size();
  if (h == 1) return false;
  if (a.dim > options.max_dim) throw Inconclusive("isomorphism search above dimension " + std::to_string(options.max_dim));

  double space = 1;
  for (std::size_t k = 0; k < h; ++k) space *= a.p;
  if (space <= 6561) {
    // Projective enumeration: first nonzero coefficient is 1.
    std::vector<std::uint32_t> coeffs(h, 0);
    while (true) {
      std::size_t k = 0;
      while (k < h && coeffs[k] == static_cast<std::uint32_t>(a.p - 1)) coeffs[k++] = 0;
      if (k == h) break;
      ++coeffs[k];
      const auto lead = std::find_if(coeffs.rbegin(), coeffs.rend(), [](std::uint32_t c) { return c != 0; });
      if (*lead != 1) continue;
      if (is_invertible(combination(hom.basis, coeffs))) return true;
    }
    return false;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, static_cast<std::uint32_t>(a.p - 1));
  for (int trial = 0; trial < 256; ++trial) {
    std::vector<std::uint32_t> coeffs(h);
    for (auto& c : coeffs) c = coeff(rng);
    if (is_invertible(combination(hom.basis, coeffs))) return true;
  }
  throw Inconclusive("no invertible homomorphism among 256 samples");
}

}  // namespace spechtkit
