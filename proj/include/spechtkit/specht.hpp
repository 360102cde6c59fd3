#pragma once

#include <cstdint>
#include <vector>

#include "spechtkit/gf.hpp"
#include "spechtkit/partition.hpp"

namespace spechtkit {

/// A representation of the symmetric group on d letters over GF(p), given by
/// the images of the adjacent transpositions s_1, ..., s_{d-1}.
struct GroupRep {
  int degree = 0;
  int dim = 0;
  int p = 2;
  std::vector<Matrix> gens;

  /// Throws ConfigError if the generator count or shapes are wrong.
  static GroupRep make(int degree, int dim, int p, std::vector<Matrix> gens);
};

/// Involution, braid and commutation relations.
bool check_relations(const GroupRep& rep);

GroupRep trivial_rep(int degree, int p);
GroupRep sign_rep(int degree, int p);

/// Permutation module on row tabloids; equals signed_perm_rep(lambda, {}, p).
GroupRep perm_module(const Partition& lambda, int p);

/// Specht module in the standard polytabloid basis, ordered as standard_tableaux().
GroupRep specht_rep(const Partition& lambda, int p);

/// Gram matrix of the polytabloid form on the standard basis.
Matrix gram_matrix(const Partition& lambda, int p);

/// The coset action behind M(alpha|beta). Basis elements are words assigning a
/// block label to each letter, in lexicographic order; labels 0..len(alpha)-1
/// are the alpha blocks, the rest the beta blocks.
class SignedCosetAction {
 public:
  SignedCosetAction(const Partition& alpha, const Partition& beta);

  struct Move {
    int target = 0;
    bool negate = false;
  };

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(words_.size()); }
  const std::vector<std::vector<std::uint8_t>>& words() const { return words_; }
  /// Image of basis element b under s_{i+1}.
  Move move(int i, int b) const { return moves_[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)]; }
  bool is_signed_label(int label) const { return label >= alpha_blocks_; }

 private:
  int degree_ = 0;
  int alpha_blocks_ = 0;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::vector<Move>> moves_;
};

/// Upper bound on the dimension of M(alpha|beta) that SignedCosetAction will build.
inline constexpr std::uint64_t kMaxCosetDim = 2'000'000;

/// M(alpha|beta): induced from trivial on Sigma_alpha and sign on Sigma_beta.
GroupRep signed_perm_rep(const Partition& alpha, const Partition& beta, int p);

GroupRep tensor_sign(const GroupRep& rep);
GroupRep dual_rep(const GroupRep& rep);

/// The action on an invariant subspace, in the basis given by `basis` rows.
GroupRep submodule_rep(const GroupRep& rep, const EchelonBasis& basis);
/// The action on rep / span(basis), in the basis of non-pivot unit vectors.
GroupRep quotient_rep(const GroupRep& rep, const EchelonBasis& basis);

/// D^lambda = S^lambda / rad, for p-regular lambda. Throws DomainError otherwise.
GroupRep simple_head_regular(const Partition& lambda, int p);

struct HomSpace {
  std::vector<Matrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  bool empty() const { return basis.empty(); }
};

/// Basis of {X : X a_i = b_i X}. Throws ConfigError on degree or modulus mismatch.
HomSpace hom_basis(const GroupRep& a, const GroupRep& b);

/// Whether the (irreducible) s is a direct summand of m, via hom spaces both ways.
bool is_summand_irred(const GroupRep& s, const GroupRep& m, std::uint64_t seed = 0);

/// Same question for m = M(alpha|beta), answered through Frobenius reciprocity
/// without building m. Requires End(s) = k; throws InternalError if the
/// composite endomorphism is ever not scalar.
bool is_summand_of_signed_perm(const GroupRep& s, const Partition& alpha, const Partition& beta);

struct IsoOptions {
  std::uint64_t seed = 0;
  /// Modules above this dimension are only compared if some hom basis element is invertible.
  int max_dim = 400;
};

/// Whether some element of Hom(a, b) is invertible. Exhaustive when the hom space
/// has at most 3^8 elements, sampled otherwise; throws Inconclusive if sampling
/// finds nothing.
bool is_isomorphic_irred(const GroupRep& a, const GroupRep& b, IsoOptions options = {});

}  // namespace spechtkit
