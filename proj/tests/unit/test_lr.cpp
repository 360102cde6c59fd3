#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "spechtkit/abacus.hpp"
#include "spechtkit/errors.hpp"
#include "spechtkit/lr.hpp"

using namespace spechtkit;

namespace {

std::set<Partition> keys(const FiltrationMultiset& f) {
  std::set<Partition> out;
  for (const auto& [k, m] : f.entries()) out.insert(k);
  return out;
}

Partition column(int m) { return Partition(std::vector<int>(static_cast<std::size_t>(m), 1)); }

}  // namespace

TEST_CASE("filtration multiset") {
  FiltrationMultiset f(3);
  f.add(Partition({2, 1}));
  f.add(Partition({2, 1}), 2);
  f.add(Partition({3}));
  CHECK(f.multiplicity(Partition({2, 1})) == 3);
  CHECK(f.multiplicity(Partition({1, 1, 1})) == 0);
  CHECK(f.distinct() == 2);
  CHECK(f.entries().begin()->first == Partition({3}));
  CHECK_THROWS_AS(f.add(Partition({2})), SizeMismatch);
  CHECK_THROWS_AS(f.add(Partition({3}), 0), ConfigError);
}

TEST_CASE("lr coefficient examples") {
  CHECK(lr_coefficient(Partition({2, 2}), Partition({2, 1}), Partition({1})) == 1);
  CHECK(lr_coefficient(Partition({3, 1}), Partition({3, 1}), Partition()) == 1);
  CHECK(lr_coefficient(Partition({3, 2, 1}), Partition({2, 1}), Partition({2, 1})) == 2);
  CHECK(lr_coefficient(Partition({2, 2}), Partition({3}), Partition({1})) == 0);
  CHECK_THROWS_AS(lr_coefficient(Partition({2, 2}), Partition({2}), Partition({1})), SizeMismatch);
}

TEST_CASE("lr coefficients match Schur function products") {
  for (int total = 0; total <= 7; ++total)
    for (int a = 0; a <= total; ++a)
      for (const auto& rho : partitions_of(a))
        for (const auto& nu : partitions_of(total - a)) {
          if (nu > rho && a == total - a) continue;
          const auto expected = oracle::schur_product(rho, nu);
          for (const auto& eps : partitions_of(total)) {
            const auto it = expected.find(eps);
            const long long want = it == expected.end() ? 0 : it->second;
            CHECK(static_cast<long long>(lr_coefficient(eps, rho, nu)) == want);
          }
        }
}

TEST_CASE("column pieri") {
  CHECK(column_pieri(Partition({2, 1}), 1) == std::vector<Partition>{Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
  CHECK(column_pieri(Partition({3, 1}), 0) == std::vector<Partition>{Partition({3, 1})});
  CHECK(column_pieri(Partition(), 3) == std::vector<Partition>{Partition({1, 1, 1})});
  for (int a = 0; a <= 6; ++a)
    for (const auto& rho : partitions_of(a))
      for (int m = 0; a + m <= 9 && m <= 4; ++m) {
        const auto strips = column_pieri(rho, m);
        const std::set<Partition> strip_set(strips.begin(), strips.end());
        for (const auto& eps : partitions_of(a + m)) {
          const auto c = lr_coefficient(eps, rho, column(m));
          CHECK(c <= 1);
          CHECK((c == 1) == strip_set.contains(eps));
        }
      }
}

TEST_CASE("block truncation") {
  FiltrationMultiset f(4);
  for (const auto& e : column_pieri(Partition({2, 1}), 1)) f.add(e);
  CHECK(keys(block_truncate(f, BlockId::make(Partition({3, 1}), 0, 3))) == std::set<Partition>{Partition({3, 1})});
  const auto keep = block_truncate(f, block_of(Partition({2, 2}), 3));
  CHECK(keys(keep) == std::set<Partition>{Partition({2, 2})});
  CHECK(block_truncate(FiltrationMultiset(4), block_of(Partition({2, 2}), 3)).empty());
}

TEST_CASE("vertical hook inductions") {
  const auto core = Partition({3, 1, 1});
  const auto b1 = BlockId::make(core, 1, 3);
  const auto b2 = BlockId::make(core, 2, 3);
  CHECK(keys(vertical_hook_inductions(core, 1, b1)) == std::set<Partition>{Partition({3, 1, 1, 1, 1, 1})});
  CHECK(keys(vertical_hook_inductions(Partition({3, 1, 1, 1, 1, 1}), 1, b2)) ==
        std::set<Partition>{Partition({3, 2, 2, 2, 1, 1}), Partition({3, 1, 1, 1, 1, 1, 1, 1, 1})});
  const auto same = vertical_hook_inductions(core, 0, BlockId::make(core, 0, 3));
  CHECK(keys(same) == std::set<Partition>{core});
  CHECK_THROWS_AS(vertical_hook_inductions(core, 1, BlockId::make(core, 2, 3)), DomainError);
  CHECK_THROWS_AS(vertical_hook_inductions(core, 3, BlockId::make(core, 3, 3)), DomainError);
  CHECK_THROWS_AS(vertical_hook_inductions(Partition({2, 1}), 1, b1), DomainError);
}

TEST_CASE("vertical hook inductions only move runner 0 and start from a single residue") {
  const auto core = Partition({3, 1, 1});
  for (int w = 0; w < 2; ++w) {
    const auto from_block = BlockId::make(core, w, 3);
    if (!is_rouquier(BlockId::make(core, w + 1, 3))) continue;
    for (const auto& rho : block_members(from_block)) {
      std::set<int> residues;
      for (const auto& n : addable_nodes(rho)) residues.insert(residue(n, 3));
      CHECK(residues.size() == 1);
      const auto result = vertical_hook_inductions(rho, 1, BlockId::make(core, w + 1, 3));
      const int b = normalized_beads(rho, 3) + 6;
      const auto before = from_partition(rho, 3, b).runner_levels();
      for (const auto& [eps, mult] : result.entries()) {
        CHECK(mult == 1);
        const auto after = from_partition(eps, 3, b).runner_levels();
        for (int r = 1; r < 3; ++r) CHECK(after[static_cast<std::size_t>(r)] == before[static_cast<std::size_t>(r)]);
      }
    }
  }
}

TEST_CASE("first column induction") {
  const auto core = Partition({3, 1, 1});
  CHECK(first_column_induction(core, 1, BlockId::make(core, 1, 3)) == Partition({3, 1, 1, 1, 1, 1}));
  CHECK(first_column_induction(Partition({6, 1, 1}), 1, BlockId::make(core, 2, 3)) == Partition({6, 1, 1, 1, 1, 1}));
  CHECK(first_column_induction(core, 0, BlockId::make(core, 0, 3)) == core);
}

TEST_CASE("pipeline examples") {
  auto f1 = pipeline_filtration(rouquier_decompose(Partition({3, 1, 1, 1, 1, 1}), 3));
  CHECK(f1.distinct() == 1);
  CHECK(f1.multiplicity(Partition({3, 1, 1, 1, 1, 1})) == 1);

  auto f2 = pipeline_filtration(rouquier_decompose(Partition({3, 2, 2, 2, 1, 1}), 3));
  CHECK(keys(f2) == std::set<Partition>{Partition({3, 2, 2, 2, 1, 1}), Partition({3, 1, 1, 1, 1, 1, 1, 1, 1})});
  CHECK(f2.multiplicity(Partition({3, 1, 1, 1, 1, 1, 1, 1, 1})) == 1);

  auto f3 = pipeline_filtration(rouquier_decompose(Partition({6, 1, 1}), 3));
  CHECK(f3.distinct() == 1);
  CHECK(f3.multiplicity(Partition({6, 1, 1})) == 1);
}
