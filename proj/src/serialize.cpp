#include "spechtkit/serialize.hpp"

#include "spechtkit/errors.hpp"

namespace spechtkit {

namespace {

const char* outcome_name(SummandCheck::Outcome o) {
  switch (o) {
    case SummandCheck::Outcome::Summand: return "summand";
    case SummandCheck::Outcome::NotSummand: return "not-summand";
    case SummandCheck::Outcome::OverBudget: return "over-budget";
  }
  return "unknown";
}

}  // namespace

Json to_json(const FiltrationMultiset& f) {
  Json entries = Json::array();
  for (const auto& [lambda, mult] : f.entries()) entries.push_back({{"partition", lambda.str()}, {"mult", mult}});
  return {{"degree", f.degree()}, {"entries", std::move(entries)}};
}

FiltrationMultiset filtration_from_json(const Json& j) {
  try {
    FiltrationMultiset f(j.at("degree").get<int>());
    for (const auto& e : j.at("entries")) f.add(Partition::parse(e.at("partition").get<std::string>()), e.at("mult").get<std::uint64_t>());
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed filtration JSON: ") + e.what());
  }
}

Json to_json(const AbacusDisplay& display) {
  return {{"p", display.p}, {"beads", display.beads}, {"positions", display.positions}};
}

Json to_json(const IrredVerdict& verdict) {
  Json j = {{"partition", verdict.partition.str()},
            {"p", verdict.p},
            {"irreducible", verdict.irreducible},
            {"method", to_string(verdict.method)}};
  if (verdict.seed) j["seed"] = *verdict.seed;
  return j;
}

Json to_json(const SignedYoungLabel& label) {
  if (!label.known) return {{"known", false}};
  return {{"known", true}, {"lambda", label.lambda_part.str()}, {"mu", label.mu_part.str()}};
}

Json to_json(const VerificationReport& report) {
  Json j = {{"partition", report.partition.str()},
            {"p", report.p},
            {"irreducible", report.verdict.irreducible},
            {"method", to_string(report.verdict.method)}};
  j["filtration"] = report.filtration ? to_json(*report.filtration) : Json(nullptr);
  j["certificate"] = report.certificate ? Json{{"alpha", report.certificate->alpha.str()}, {"p_beta", report.certificate->p_beta.str()}}
                                        : Json(nullptr);
  j["status"] = to_string(report.status);
  j["seed"] = report.seed;
  j["label"] = to_json(report.label);
  Json checks = Json::array();
  for (const auto& c : report.summand_checks)
    checks.push_back({{"alpha", c.alpha.str()}, {"p_beta", c.p_beta.str()}, {"dimension", c.dimension}, {"outcome", outcome_name(c.outcome)}});
  j["summand_checks"] = std::move(checks);
  return j;
}

Json to_json(const GroupRep& rep) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < rep.gens.size(); ++i) {
    const auto& g = rep.gens[i];
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(g.rows()) * static_cast<std::size_t>(g.cols()));
    for (int r = 0; r < g.rows(); ++r)
      for (int c = 0; c < g.cols(); ++c) entries.push_back(g(r, c));
    gens.push_back({{"generator", i + 1}, {"rows", g.rows()}, {"cols", g.cols()}, {"entries", std::move(entries)}});
  }
  return {{"degree", rep.degree}, {"dim", rep.dim}, {"p", rep.p}, {"generators", std::move(gens)}};
}

}  // namespace spechtkit
