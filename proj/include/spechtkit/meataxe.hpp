#pragma once

#include <cstdint>
#include <span>

#include "spechtkit/gf.hpp"
#include "spechtkit/specht.hpp"

namespace spechtkit {

/// Smallest subspace containing v and closed under the generators.
EchelonBasis spin(std::span<const Matrix> gens, const Vec& v, int dim, int p);

struct MeatAxeOptions {
  std::uint64_t seed = 0;
  int max_word = 4;
  int max_attempts = 64;
  /// Largest field size p^deg for the factors of the characteristic polynomial we try.
  int max_factor_field = 1024;
  /// Cap on the lines spun by the exhaustive fallback.
  std::uint64_t max_fallback_lines = 4096;
};

/// Norton's irreducibility test. Throws Inconclusive if neither a good element
/// nor a small enough fallback nullspace turns up.
bool meataxe_irreducible(const GroupRep& rep, const MeatAxeOptions& options = {});

/// A proper non-zero invariant subspace, if the module is reducible.
std::optional<EchelonBasis> find_submodule(const GroupRep& rep, const MeatAxeOptions& options = {});

}  // namespace spechtkit
