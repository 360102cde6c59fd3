// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/errors.hpp"
#include "spechtkit/ladders.hpp"
#include "spechtkit/lr.hpp"
#include "spechtkit/meataxe.hpp"
#include "spechtkit/specht.hpp"

using namespace spechtkit;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Collects the first few failure messages of a criterion.
struct Check {
  int failures = 0;
  std::size_t checks = 0;
  std::ostringstream log;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (++failures <= 5) log << "    " << what << '\n';
  }
};

struct Options {
  std::uint64_t max_dim = 1500;
  std::uint64_t seed = 0;
};

bool strictly_dominates(const Partition& a, const Partition& b) { return a != b && dominates(a, b); }

void regularization_suite(Check& c, const Options&) {
  for (int p : {3, 5})
    for (int d = 0; d <= 12; ++d)
      for (const auto& lambda : partitions_of(d)) {
        const auto r = regularize(lambda, p);
        const auto tag = lambda.str() + " p=" + std::to_string(p);
        c.expect(is_p_regular(r, p), tag + ": regularization not p-regular");
        c.expect(dominates(r, lambda), tag + ": regularization does not dominate");
        c.expect(ladder_numbers(r, p) == ladder_numbers(lambda, p), tag + ": ladder profile changed");
        c.expect(regularize(r, p) == r, tag + ": not idempotent");
      }
}

void ladder_order_suite(Check& c, const Options&) {
  for (int p : {3, 5})
    for (int d = 1; d <= 10; ++d) {
      std::vector<Partition> regular;
      for (const auto& lambda : partitions_of(d))
        if (is_p_regular(lambda, p)) regular.push_back(lambda);
      for (const auto& mu : regular)
        for (const auto& lambda : regular) {
          if (mu == lambda) continue;
          const bool gt = ladder_gt(mu, lambda, p), lt = ladder_gt(lambda, mu, p);
          const auto tag = mu.str() + " vs " + lambda.str() + " p=" + std::to_string(p);
          c.expect(gt != lt, tag + ": not comparable exactly one way");
          if (gt) c.expect(!dominates(lambda, mu), tag + ": ladder-larger shape is dominated");
        }
    }
}

void lr_suite(Check& c, const Options&) {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (const auto& rho : partitions_of(k))
        for (const auto& nu : partitions_of(n - k)) {
          const auto expected = oracle::schur_product(rho, nu);
          for (const auto& eps : partitions_of(n)) {
            const auto it = expected.find(eps);
            const long long want = it == expected.end() ? 0 : it->second;
            c.expect(static_cast<long long>(lr_coefficient(eps, rho, nu)) == want,
                     "c(" + eps.str() + "; " + rho.str() + ", " + nu.str() + ")");
          }
          std::vector<int> column(static_cast<std::size_t>(n - k), 1);
          const Partition col(column);
          for (const auto& eps : partitions_of(n)) c.expect(lr_coefficient(eps, rho, col) <= 1, "column coefficient above 1 at " + eps.str());
        }
}

void hook_fixture(Check& c, const Options&) {
  const auto core = P({3, 1, 1});
  const auto b1 = BlockId::make(core, 1, 3), b2 = BlockId::make(core, 2, 3);
  const auto first = vertical_hook_inductions(core, 1, b1);
  FiltrationMultiset want1(8);
  want1.add(P({3, 1, 1, 1, 1, 1}));
  c.expect(first == want1, "inductions from (3,1,1)");
  const auto second = vertical_hook_inductions(P({3, 1, 1, 1, 1, 1}), 1, b2);
  FiltrationMultiset want2(11);
  want2.add(P({3, 2, 2, 2, 1, 1}));
  want2.add(P({3, 1, 1, 1, 1, 1, 1, 1, 1}));
  c.expect(second == want2, "inductions from (3,1,1,1,1,1)");

  const std::pair<Partition, const FiltrationMultiset*> cases[] = {{core, &first}, {P({3, 1, 1, 1, 1, 1}), &second}};
  for (const auto& [rho, result] : cases) {
    const int b = normalized_beads(rho, 3) + 6;
    const auto before = from_partition(rho, 3, b).runner_levels();
    for (const auto& [eps, mult] : result->entries()) {
      const auto after = from_partition(eps, 3, b).runner_levels();
      c.expect(before[1] == after[1] && before[2] == after[2], eps.str() + " differs from " + rho.str() + " off runner 0");
    }
    std::vector<int> residues;
    for (const auto& n : addable_nodes(rho)) residues.push_back(residue(n, 3));
    c.expect(std::adjacent_find(residues.begin(), residues.end(), std::not_equal_to<>()) == residues.end(),
             "addable nodes of " + rho.str() + " have several residues");
  }
}

void pipeline_suite(Check& c, const Options&) {
  int decompositions = 0, degenerate = 0, multi_stage = 0;
  for (int d = 1; d <= 14; ++d)
    for (const auto& lambda : partitions_of(d)) {
      RouquierDecomposition dec;
      try {
        dec = rouquier_decompose(lambda, 3);
      } catch (const DomainError&) {
        continue;
      }
      ++decompositions;
      degenerate += dec.tau.empty();
      multi_stage += dec.tau.length() >= 2;
      const auto f = pipeline_filtration(dec);
      c.expect(f.multiplicity(lambda) == 1, lambda.str() + ": multiplicity of lambda is not 1");
      const auto lr = regularize(lambda, 3);
      for (const auto& [eps, mult] : f.entries()) {
        if (eps == lambda) continue;
        c.expect(ladder_gt(regularize(eps, 3), lr, 3), lambda.str() + ": " + eps.str() + " not above in the ladder order");
        c.expect(strictly_dominates(lambda, eps), lambda.str() + ": " + eps.str() + " not strictly dominated");
      }
      if (dec.tau.empty()) {
        FiltrationMultiset want(d);
        want.add(dec.sigma);
        c.expect(f == want, lambda.str() + ": empty tau should give {sigma}");
      }
    }
  c.expect(decompositions > 0 && degenerate > 0 && multi_stage > 0,
           "enumeration missed a case: " + std::to_string(decompositions) + " decompositions");
}

void gram_vs_meataxe(Check& c, const Options& o) {
  for (int p : {3, 5})
    for (int d = 1; d <= 8; ++d)
      for (const auto& lambda : partitions_of(d)) {
        if (!is_p_regular(lambda, p)) continue;
        const bool gram = gram_irreducible(lambda, p);
        const bool mx = meataxe_irreducible(specht_rep(lambda, p), {.seed = o.seed});
        c.expect(gram == mx, lambda.str() + " p=" + std::to_string(p) + ": Gram and MeatAxe disagree");
      }
}

void block_fixture(Check& c, const Options& o) {
  const auto block = BlockId::make(P({3, 1, 1}), 1, 3);
  const auto members = block_members(block);
  c.expect(members == std::vector<Partition>{P({6, 1, 1}), P({3, 3, 2}), P({3, 1, 1, 1, 1, 1})}, "block members");
  const bool expected[] = {true, false, true};
  const int dims[] = {21, 42, 21};
  for (std::size_t i = 0; i < members.size() && i < 3; ++i) {
    const auto v = irreducible_specht(members[i], 3);
    c.expect(v.method == IrredMethod::RouquierCriterion && v.irreducible == expected[i], members[i].str() + ": criterion verdict");
    const auto rep = specht_rep(members[i], 3);
    c.expect(rep.dim == dims[i], members[i].str() + ": dimension");
    c.expect(meataxe_irreducible(rep, {.seed = o.seed}) == expected[i], members[i].str() + ": MeatAxe verdict");
  }
}

void main_theorem(Check& c, const Options& o) {
  int certified = 0;
  for (int d = 1; d <= 8; ++d)
    for (const auto& lambda : partitions_of(d)) {
      if (!meataxe_irreducible(specht_rep(lambda, 3), {.seed = o.seed})) continue;
      const auto tag = lambda.str();
      const auto r = verify_main_theorem(lambda, 3, {o.max_dim, o.seed});
      c.expect(r.status != VerificationStatus::Refuted, tag + ": refuted");
      c.expect(r.status == VerificationStatus::Verified && r.certificate.has_value(), tag + ": no certificate");
      if (!r.certificate) continue;
      ++certified;
      if (is_p_regular(lambda, 3)) c.expect(*r.certificate == Certificate{lambda, Partition()}, tag + ": regular certificate is not M(lambda|-)");
      if (is_p_restricted(lambda, 3)) {
        const auto [tau, mu] = p_adic_split(conjugate(lambda), 3);
        const Certificate label{mullineux_restricted(tau, 3), add_scaled(Partition(), mu, 3)};
        c.expect(!r.summand_checks.empty() && r.summand_checks.front().alpha == label.alpha &&
                     r.summand_checks.front().p_beta == label.p_beta &&
                     r.summand_checks.front().outcome == SummandCheck::Outcome::Summand,
                 tag + ": restricted label is not the first certificate");
      }
    }
  c.expect(certified > 0, "nothing certified");
}

void sign_twist(Check& c, const Options& o) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : partitions_of(d))
      c.expect(is_isomorphic_irred(tensor_sign(specht_rep(lambda, 3)), dual_rep(specht_rep(conjugate(lambda), 3)), {.seed = o.seed}),
               lambda.str() + ": twist is not the dual of the conjugate");
  for (int d = 1; d <= 7; ++d)
    for (const auto& lambda : partitions_of(d)) {
      const auto s = specht_rep(lambda, 3);
      const bool irreducible = meataxe_irreducible(s, {.seed = o.seed});
      const bool self_dual = is_isomorphic_irred(s, dual_rep(s), {.seed = o.seed});
      c.expect(irreducible == self_dual, lambda.str() + ": irreducibility and self-duality disagree");
    }
}

void mullineux_suite(Check& c, const Options& o) {
  for (int p : {3, 5})
    for (int d = 0; d <= 8; ++d)
      for (const auto& lambda : partitions_of(d)) {
        if (!is_p_regular(lambda, p)) continue;
        const auto m = mullineux(lambda, p);
        const auto tag = lambda.str() + " p=" + std::to_string(p);
        c.expect(m.size() == d && is_p_regular(m, p), tag + ": image has the wrong size or is singular");
        c.expect(mullineux(m, p) == lambda, tag + ": not an involution");
      }
  for (int d = 1; d <= 6; ++d)
    for (const auto& lambda : partitions_of(d)) {
      if (!is_p_regular(lambda, 3)) continue;
      const auto twisted = tensor_sign(simple_head_regular(lambda, 3));
      c.expect(is_isomorphic_irred(twisted, simple_head_regular(mullineux(lambda, 3), 3), {.seed = o.seed}),
               lambda.str() + ": D twisted by sign is not D of the Mullineux image");
    }
}

void stretch(Check& c, const Options& o) {
  const auto lambda = P({3, 2, 2, 2, 1, 1});
  const auto v = irreducible_specht(lambda, 3);
  c.expect(v.method == IrredMethod::RouquierCriterion && v.irreducible, "criterion verdict");
  const auto rep = specht_rep(lambda, 3);
  c.expect(rep.dim == 693, "dimension " + std::to_string(rep.dim));
  c.expect(meataxe_irreducible(rep, {.seed = o.seed}), "MeatAxe finds a submodule");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  Options opts;
  std::vector<int> only;
  app.add_option("--max-dim", opts.max_dim, "Dimension budget; the stretch criterion needs at least 700");
  app.add_option("--seed", opts.seed, "MeatAxe seed");
  app.add_option("--only", only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Check&, const Options&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "regularization suite", 10, regularization_suite},
      {2, "ladder order suite", 30, ladder_order_suite},
      {3, "LR oracle equivalence", 60, lr_suite},
      {4, "vertical hook fixture", 5, hook_fixture},
      {5, "pipeline suite", 60, pipeline_suite},
      {6, "Gram vs MeatAxe", 300, gram_vs_meataxe},
      {7, "block fixture classification", 120, block_fixture},
      {8, "main theorem desk verification", 900, main_theorem},
      {9, "sign twist and self-duality", 300, sign_twist},
      {10, "Mullineux consistency", 600, mullineux_suite},
      {11, "stretch: S^(3,2,2,2,1,1) over GF(3)", 1800, stretch},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    if (cr.id == 11 && opts.max_dim < 700) {
      std::printf("FAIL %2d %s: needs --max-dim >= 700 (got %llu)\n", cr.id, cr.name, static_cast<unsigned long long>(opts.max_dim));
      ++failed;
      continue;
    }
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check, opts);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs <= cr.limit_seconds, "took longer than the limit");
    const bool pass = check.failures == 0;
    failed += !pass;
    std::printf("%s %2d %s (%zu checks, %.1f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", cr.id, cr.name, check.checks, secs, cr.limit_seconds);
    if (!pass) std::printf("%s", check.log.str().c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
