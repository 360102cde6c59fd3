#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/errors.hpp"
#include "spechtkit/ladders.hpp"
#include "spechtkit/lr.hpp"
#include "spechtkit/serialize.hpp"
#include "spechtkit/specht.hpp"

namespace sk = spechtkit;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kInconclusive = 2, kRefuted = 3, kUsage = 64, kInternal = 70 };

struct RunConfig {
  int p = 0;
  std::optional<int> beads;
  std::uint64_t seed = 0;
  std::uint64_t max_dim = 1500;
  std::string format = "text";
  std::string dump_rep;

  bool json() const { return format == "json"; }
  sk::ClassifyOptions classify() const { return {max_dim, seed}; }
};

void require_prime(int p, int minimum) {
  if (p < minimum || !sk::is_prime(p)) throw sk::ConfigError("--p must be a prime >= " + std::to_string(minimum));
}

void emit(const sk::Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join_quotient(const std::vector<sk::Partition>& q) {
  std::string out;
  for (const auto& part : q) out += (out.empty() ? "" : " | ") + part.str();
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "-" : out;
}

void dump_rep(const RunConfig& cfg, const sk::Partition& lambda) {
  if (cfg.dump_rep.empty()) return;
  if (sk::specht_dimension(lambda) > cfg.max_dim)
    throw sk::Inconclusive("S^" + lambda.str() + " exceeds --max-dim; not dumped");
  std::ofstream out(cfg.dump_rep);
  if (!out) throw sk::ConfigError("cannot write " + cfg.dump_rep);
  out << sk::to_json(sk::specht_rep(lambda, cfg.p)).dump() << '\n';
}

int run_info(const RunConfig& cfg, const std::string& text) {
  require_prime(cfg.p, 2);
  const auto lambda = sk::Partition::parse(text);
  const int b = cfg.beads.value_or(sk::normalized_beads(lambda, cfg.p));
  const auto display = sk::from_partition(lambda, cfg.p, b);
  const auto core = sk::p_core(lambda, cfg.p);
  const auto quotient = sk::p_quotient(lambda, cfg.p);
  const auto regular = sk::is_p_regular(lambda, cfg.p);
  std::optional<sk::Partition> mullineux;
  if (regular) mullineux = sk::mullineux(lambda, cfg.p);

  if (cfg.json()) {
    sk::Json q = sk::Json::array();
    for (const auto& part : quotient) q.push_back(part.str());
    sk::Json j = {{"partition", lambda.str()},
                  {"size", lambda.size()},
                  {"conjugate", sk::conjugate(lambda).str()},
                  {"p", cfg.p},
                  {"p_regular", regular},
                  {"p_restricted", sk::is_p_restricted(lambda, cfg.p)},
                  {"core", core.str()},
                  {"weight", sk::p_weight(lambda, cfg.p)},
                  {"quotient", q},
                  {"regularization", sk::regularize(lambda, cfg.p).str()},
                  {"ladder_numbers", sk::ladder_numbers(lambda, cfg.p).counts},
                  {"residue_content", sk::residue_content(lambda, cfg.p)},
                  {"abacus", sk::to_json(display)}};
    j["mullineux"] = mullineux ? sk::Json(mullineux->str()) : sk::Json(nullptr);
    emit(j);
  } else {
    std::cout << "partition:      " << lambda.str() << " (size " << lambda.size() << ")\n"
              << "conjugate:      " << sk::conjugate(lambda).str() << '\n'
              << "p-regular:      " << (regular ? "yes" : "no") << '\n'
              << "p-restricted:   " << (sk::is_p_restricted(lambda, cfg.p) ? "yes" : "no") << '\n'
              << "core:           " << core.str() << '\n'
              << "weight:         " << sk::p_weight(lambda, cfg.p) << '\n'
              << "quotient:       " << join_quotient(quotient) << '\n'
              << "regularization: " << sk::regularize(lambda, cfg.p).str() << '\n'
              << "ladders:        " << join(sk::ladder_numbers(lambda, cfg.p).counts) << '\n'
              << "residues:       " << join(sk::residue_content(lambda, cfg.p)) << '\n';
    if (mullineux) std::cout << "mullineux:      " << mullineux->str() << '\n';
    std::cout << "abacus (" << b << " beads):\n" << sk::render_abacus(display);
  }
  dump_rep(cfg, lambda);
  return kOk;
}

int run_regularize(const RunConfig& cfg, const std::string& text) {
  require_prime(cfg.p, 2);
  const auto lambda = sk::Partition::parse(text);
  const auto reg = sk::regularize(lambda, cfg.p);
  if (cfg.json())
    emit({{"partition", lambda.str()}, {"p", cfg.p}, {"regularization", reg.str()}, {"ladder_numbers", sk::ladder_numbers(lambda, cfg.p).counts}});
  else
    std::cout << reg.str() << '\n';
  return kOk;
}

int run_classify_block(const RunConfig& cfg, const std::string& core_text, int weight) {
  require_prime(cfg.p, 3);
  const auto block = sk::BlockId::make(sk::Partition::parse(core_text), weight, cfg.p);
  if (!sk::is_rouquier(block)) {
    std::cerr << "block with core " << block.core.str() << " and weight " << weight << " is not Rouquier: runner bead counts must grow by at least "
              << weight - 1 << " per runner\n";
    return kNegative;
  }
  const auto irreducible = sk::classify_rouquier_block(block);
  std::vector<sk::IrredVerdict> verdicts;
  for (const auto& lambda : sk::block_members(block)) {
    auto v = sk::irreducible_specht(lambda, cfg.p, cfg.classify());
    const bool listed = std::find(irreducible.begin(), irreducible.end(), lambda) != irreducible.end();
    if (listed != v.irreducible) throw sk::InternalError("block enumeration disagrees with the criterion at " + lambda.str());
    verdicts.push_back(std::move(v));
  }
  if (cfg.json()) {
    sk::Json rows = sk::Json::array();
    for (const auto& v : verdicts) rows.push_back(sk::to_json(v));
    emit(rows);
  } else {
    for (const auto& v : verdicts) std::cout << v.partition.str() << '\t' << (v.irreducible ? "irreducible" : "reducible") << '\t' << sk::to_string(v.method) << '\n';
  }
  return kOk;
}

int run_pipeline(const RunConfig& cfg, const std::string& text) {
  require_prime(cfg.p, 3);
  const auto f = sk::pipeline_filtration(sk::rouquier_decompose(sk::Partition::parse(text), cfg.p));
  if (cfg.json()) {
    emit(sk::to_json(f));
  } else {
    for (const auto& [eps, mult] : f.entries()) std::cout << eps.str() << '\t' << mult << '\n';
  }
  return kOk;
}

int run_verify(const RunConfig& cfg, const std::string& text) {
  require_prime(cfg.p, 3);
  const auto lambda = sk::Partition::parse(text);
  const auto verdict = sk::irreducible_specht(lambda, cfg.p, cfg.classify());
  if (!verdict.irreducible) {
    if (cfg.json())
      emit(sk::to_json(verdict));
    else
      std::cout << lambda.str() << ": reducible (" << sk::to_string(verdict.method) << ")\n";
    return kNegative;
  }
  const auto report = sk::verify_main_theorem(lambda, cfg.p, cfg.classify());
  if (cfg.json()) {
    emit(sk::to_json(report));
  } else {
    std::cout << "partition:   " << lambda.str() << " (p = " << cfg.p << ")\n"
              << "irreducible: yes (" << sk::to_string(report.verdict.method) << ")\n";
    if (report.label.known) std::cout << "label:       (" << report.label.lambda_part.str() << " | " << cfg.p << "*" << report.label.mu_part.str() << ")\n";
    if (report.filtration) {
      std::cout << "filtration:";
      for (const auto& [eps, mult] : report.filtration->entries()) std::cout << ' ' << eps.str() << "^" << mult;
      std::cout << '\n';
    }
    if (report.certificate) std::cout << "certificate: M(" << report.certificate->alpha.str() << " | " << report.certificate->p_beta.str() << ")\n";
    std::cout << "status:      " << sk::to_string(report.status) << " after " << report.summand_checks.size() << " checks, "
              << report.elapsed_seconds << " s\n";
  }
  dump_rep(cfg, lambda);
  switch (report.status) {
    case sk::VerificationStatus::Verified: return kOk;
    case sk::VerificationStatus::Inconclusive: return kInconclusive;
    case sk::VerificationStatus::Refuted: return kRefuted;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular representations of symmetric groups: partitions, blocks and Specht modules"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--p", cfg.p, "Characteristic (prime)")->required();
  app.add_option("--beads", cfg.beads, "Bead count for the abacus display");
  app.add_option("--seed", cfg.seed, "Seed for randomized steps");
  app.add_option("--max-dim", cfg.max_dim, "Largest module dimension to build")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dump-rep", cfg.dump_rep, "Write the Specht module generators as JSON");

  std::string partition, core;
  int weight = 0;
  auto* info = app.add_subcommand("info", "Combinatorial data of a partition");
  info->add_option("partition", partition, "Partition, e.g. 3,1,1 or - for empty")->required();
  auto* regularize = app.add_subcommand("regularize", "p-regularization of a partition");
  regularize->add_option("partition", partition)->required();
  auto* classify = app.add_subcommand("classify-block", "Irreducible Specht modules of a Rouquier block");
  classify->add_option("--core", core, "p-core of the block")->required();
  classify->add_option("--weight", weight, "p-weight of the block")->required()->check(CLI::NonNegativeNumber);
  auto* pipeline = app.add_subcommand("pipeline", "Specht filtration produced by inducing and truncating");
  pipeline->add_option("partition", partition)->required();
  auto* verify = app.add_subcommand("verify", "Find a signed permutation module having S^lambda as a summand");
  verify->add_option("partition", partition)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return run_info(cfg, partition);
    if (*regularize) return run_regularize(cfg, partition);
    if (*classify) return run_classify_block(cfg, core, weight);
    if (*pipeline) return run_pipeline(cfg, partition);
    if (*verify) return run_verify(cfg, partition);
  } catch (const sk::ShapeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sk::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sk::DomainError& e) {
    std::cerr << e.what() << '\n';
    return kNegative;
  } catch (const sk::Inconclusive& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const sk::Error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
