#include "spechtkit/classify.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

#include "spechtkit/errors.hpp"
#include "spechtkit/meataxe.hpp"
#include "spechtkit/specht.hpp"

namespace spechtkit {

namespace {

void require_odd_prime(int p) {
  if (p < 3 || !is_prime(p) || p > 255) throw ConfigError("classification needs an odd prime below 256, got " + std::to_string(p));
}

void require_budget(std::uint64_t dim, const ClassifyOptions& options, const Partition& lambda) {
  if (dim > options.max_dim)
    throw Inconclusive("S^" + lambda.str() + " has dimension " + std::to_string(dim) + ", above the budget " + std::to_string(options.max_dim));
}

std::uint64_t signed_dimension(const Partition& alpha, const Partition& p_beta) {
  std::vector<int> blocks(alpha.parts().begin(), alpha.parts().end());
  blocks.insert(blocks.end(), p_beta.parts().begin(), p_beta.parts().end());
  return multinomial(blocks);
}

Partition scale(const Partition& beta, int p) { return add_scaled(Partition(), beta, p); }

}  // namespace

std::string to_string(IrredMethod method) {
  switch (method) {
    case IrredMethod::GramRegular: return "gram-regular";
    case IrredMethod::GramRestrictedConjugate: return "gram-restricted-conjugate";
    case IrredMethod::RouquierCriterion: return "rouquier-criterion";
    case IrredMethod::MeatAxe: return "meataxe";
  }
  return "unknown";
}

std::string to_string(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::Verified: return "verified";
    case VerificationStatus::Inconclusive: return "inconclusive";
    case VerificationStatus::Refuted: return "refuted";
  }
  return "unknown";
}

bool gram_irreducible(const Partition& lambda, int p) {
  if (!is_p_regular(lambda, p)) throw DomainError(lambda.str() + " is not " + std::to_string(p) + "-regular");
  return det_mod_p(gram_matrix(lambda, p)).value != 0;
}

IrredVerdict irreducible_specht(const Partition& lambda, int p, const ClassifyOptions& options) {
  require_odd_prime(p);
  IrredVerdict verdict{lambda, p, false, IrredMethod::RouquierCriterion, std::nullopt};
  const auto block = block_of(lambda, p);
  if (block.weight == 0) {
    verdict.irreducible = true;
    return verdict;
  }
  if (is_rouquier(block)) {
    const auto q = p_quotient(lambda, p);
    bool ok = true;
    for (int r = 1; r < p - 1 && ok; ++r) ok = q[static_cast<std::size_t>(r)].empty();
    const auto& first = q.front();
    const auto& last = q.back();
    ok = ok && is_p_restricted(first, p) && is_p_regular(last, p);
    ok = ok && gram_irreducible(conjugate(first), p) && gram_irreducible(last, p);
    verdict.irreducible = ok;
    return verdict;
  }
  if (is_p_regular(lambda, p)) {
    require_budget(specht_dimension(lambda), options, lambda);
    verdict.method = IrredMethod::GramRegular;
    verdict.irreducible = gram_irreducible(lambda, p);
    return verdict;
  }
  if (is_p_restricted(lambda, p)) {
    require_budget(specht_dimension(lambda), options, lambda);
    verdict.method = IrredMethod::GramRestrictedConjugate;
    verdict.irreducible = gram_irreducible(conjugate(lambda), p);
    return verdict;
  }
  require_budget(specht_dimension(lambda), options, lambda);
  verdict.method = IrredMethod::MeatAxe;
  verdict.seed = options.seed;
  MeatAxeOptions mx;
  mx.seed = options.seed;
  verdict.irreducible = meataxe_irreducible(specht_rep(lambda, p), mx);
  return verdict;
}

std::vector<Partition> classify_rouquier_block(const BlockId& block) {
  require_odd_prime(block.p);
  if (!is_rouquier(block))
    throw DomainError("block with core " + block.core.str() + " and weight " + std::to_string(block.weight) + " is not Rouquier");
  const int p = block.p;
  const auto core_conj = conjugate(block.core);
  std::vector<Partition> out;
  for (int k = 0; k <= block.weight; ++k)
    for (const auto& mu : partitions_of(k)) {
      if (!is_p_regular(mu, p) || !gram_irreducible(mu, p)) continue;
      for (const auto& tau : partitions_of(block.weight - k)) {
        if (!is_p_regular(tau, p) || !gram_irreducible(tau, p)) continue;
        const auto tilde = conjugate(add_scaled(core_conj, tau, p));
        out.push_back(add_scaled(tilde, mu, p));
      }
    }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SignedYoungLabel signed_young_label(const IrredVerdict& verdict) {
  if (!verdict.irreducible) throw DomainError("S^" + verdict.partition.str() + " is reducible");
  const auto& lambda = verdict.partition;
  const int p = verdict.p;
  if (is_p_regular(lambda, p)) return {lambda, Partition(), true};
  if (is_p_restricted(lambda, p)) {
    const auto [tau, mu] = p_adic_split(conjugate(lambda), p);
    return {mullineux_restricted(tau, p), mu, true};
  }
  return {Partition(), Partition(), false};
}

SignedYoungLabel signed_young_label(const Partition& lambda, int p, const ClassifyOptions& options) {
  return signed_young_label(irreducible_specht(lambda, p, options));
}

std::vector<Certificate> signed_shapes(int d, int p) {
  std::vector<std::tuple<std::uint64_t, Partition, Partition>> keyed;
  for (int k = 0; p * k <= d; ++k)
    for (const auto& beta : partitions_of(k))
      for (const auto& alpha : partitions_of(d - p * k)) {
        const auto p_beta = scale(beta, p);
        keyed.emplace_back(signed_dimension(alpha, p_beta), alpha, p_beta);
      }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (std::get<1>(x) != std::get<1>(y)) return std::get<1>(x) > std::get<1>(y);
    return std::get<2>(x) > std::get<2>(y);
  });
  std::vector<Certificate> out;
  out.reserve(keyed.size());
  for (auto& [dim, alpha, p_beta] : keyed) out.push_back({std::move(alpha), std::move(p_beta)});
  return out;
}

VerificationReport verify_main_theorem(const Partition& lambda, int p, const ClassifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.partition = lambda;
  report.p = p;
  report.seed = options.seed;
  report.verdict = irreducible_specht(lambda, p, options);
  if (!report.verdict.irreducible)
    throw DomainError("S^" + lambda.str() + " is reducible (" + to_string(report.verdict.method) + ")");
  report.label = signed_young_label(report.verdict);

  const auto block = block_of(lambda, p);
  if (is_rouquier(block)) report.filtration = pipeline_filtration(rouquier_decompose(lambda, p));

  auto finish = [&](VerificationStatus status) {
    report.status = status;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  if (specht_dimension(lambda) > options.max_dim) return finish(VerificationStatus::Inconclusive);
  const auto s = specht_rep(lambda, p);

  std::vector<Certificate> candidates;
  if (report.label.known) candidates.push_back({report.label.lambda_part, scale(report.label.mu_part, p)});
  for (auto& shape : signed_shapes(lambda.size(), p))
    if (candidates.empty() || shape != candidates.front()) candidates.push_back(std::move(shape));

  bool skipped = false;
  for (const auto& c : candidates) {
    SummandCheck check{c.alpha, c.p_beta, signed_dimension(c.alpha, c.p_beta), SummandCheck::Outcome::OverBudget};
    if (check.dimension > options.max_dim) {
      skipped = true;
      report.summand_checks.push_back(check);
      continue;
    }
    const bool summand = is_summand_of_signed_perm(s, c.alpha, c.p_beta);
    check.outcome = summand ? SummandCheck::Outcome::Summand : SummandCheck::Outcome::NotSummand;
    report.summand_checks.push_back(check);
    if (summand) {
      report.certificate = c;
      return finish(VerificationStatus::Verified);
    }
  }
  return finish(skipped ? VerificationStatus::Inconclusive : VerificationStatus::Refuted);
}

}  // namespace spechtkit
