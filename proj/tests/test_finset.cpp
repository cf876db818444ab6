#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "condensed/errors.hpp"
#include "condensed/finset.hpp"

using namespace condensed;

namespace {

// Independent oracle: enumerate all labelings of n elements with labels in
// 0..n-1, canonicalize, dedupe. Every partition arises from some labeling.
std::set<std::vector<std::size_t>> all_partitions_bruteforce(std::size_t n) {
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> lab(n, 0);
  if (n == 0) {
    out.insert(std::vector<std::size_t>{});
    return out;
  }
  while (true) {
    out.insert(Partition::canonicalize(lab));
    std::size_t i = n;
    while (i > 0 && lab[i - 1] == n - 1) lab[--i] = 0;
    if (i == 0) break;
    ++lab[i - 1];
  }
  return out;
}

std::vector<std::vector<std::size_t>> all_maps(std::size_t dom, std::size_t cod) {
  std::vector<std::vector<std::size_t>> out;
  if (dom == 0) {
    out.push_back({});
    return out;
  }
  if (cod == 0) return out;
  std::vector<std::size_t> t(dom, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = dom;
    while (i > 0 && t[i - 1] == cod - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

}  // namespace

TEST_CASE("product: sizes and degenerate cases") {
  auto [empty, noproj] = product_with_projections({});
  CHECK(empty.size == 1);
  CHECK(noproj.empty());

  auto [p, projs] = product_with_projections({FinSet(2), FinSet(3)});
  CHECK(p.size == 6);
  CHECK(projs.size() == 2);
  CHECK(projs[0].is_surjective());
  CHECK(projs[1].is_surjective());
}

TEST_CASE("product universal property, exhaustively on [2,2,2]") {
  std::vector<FinSet> factors{FinSet(2), FinSet(2), FinSet(2)};
  auto [prod, projs] = product_with_projections(factors);
  CHECK(prod.size == 8);
  FinSet test_dom(2);
  // every family of maps into the factors factors uniquely through the product
  for (const auto& t0 : all_maps(2, 2))
    for (const auto& t1 : all_maps(2, 2))
      for (const auto& t2 : all_maps(2, 2)) {
        std::vector<FinMap> family{FinMap(test_dom, factors[0], t0),
                                   FinMap(test_dom, factors[1], t1),
                                   FinMap(test_dom, factors[2], t2)};
        std::size_t mediators = 0;
        for (const auto& m : all_maps(2, 8)) {
          FinMap cand(test_dom, prod, m);
          bool ok = true;
          for (std::size_t k = 0; k < 3; ++k)
            if (!(compose(projs[k], cand) == family[k])) ok = false;
          if (ok) ++mediators;
        }
        CHECK(mediators == 1);
      }
}

TEST_CASE("coproduct: sizes and universal property on [3,2]") {
  auto [empty, noinc] = coproduct_with_inclusions({});
  CHECK(empty.size == 0);
  CHECK(noinc.empty());

  std::vector<FinSet> summands{FinSet(3), FinSet(2)};
  auto [cop, incs] = coproduct_with_inclusions(summands);
  CHECK(cop.size == 5);
  for (const auto& i : incs) CHECK(i.is_injective());

  FinSet target(2);
  for (const auto& t0 : all_maps(3, 2))
    for (const auto& t1 : all_maps(2, 2)) {
      std::vector<FinMap> family{FinMap(summands[0], target, t0), FinMap(summands[1], target, t1)};
      std::size_t mediators = 0;
      for (const auto& m : all_maps(5, 2)) {
        FinMap cand(cop, target, m);
        bool ok = true;
        for (std::size_t k = 0; k < 2; ++k)
          if (!(compose(cand, incs[k]) == family[k])) ok = false;
        if (ok) ++mediators;
      }
      CHECK(mediators == 1);
    }
}

TEST_CASE("partition enumeration matches brute-force oracle, sizes 0..6") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n <= 6; ++n) {
    auto parts = enumerate_partitions(FinSet(n));
    auto oracle = all_partitions_bruteforce(n);
    CHECK(parts.size() == bell[n]);
    CHECK(oracle.size() == bell[n]);
    std::set<std::vector<std::size_t>> got;
    for (const auto& p : parts) got.insert(p.block_of);
    CHECK(got == oracle);
    // lexicographic order
    CHECK(std::is_sorted(parts.begin(), parts.end(),
                         [](const Partition& a, const Partition& b) { return a.block_of < b.block_of; }));
  }
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_partitions(FinSet(4), 3), BoundExceeded);
}

TEST_CASE("meet examples") {
  FinSet g(3);
  Partition p(g, {0, 0, 1});  // {{0,1},{2}}
  Partition q(g, {0, 1, 1});  // {{0},{1,2}}
  CHECK(partition_meet(p, q) == Partition::discrete(g));
  CHECK(partition_meet(p, Partition::discrete(g)) == Partition::discrete(g));
  CHECK(partition_meet(p, p) == p);
}

TEST_CASE("compare examples") {
  FinSet g(4);
  Partition a(g, {0, 0, 1, 1});  // {{0,1},{2,3}}
  Partition b(g, {0, 1, 0, 1});  // {{0,2},{1,3}}
  CHECK(partition_compare(a, a) == Order::eq);
  CHECK(partition_compare(Partition::discrete(g), a) == Order::le);
  CHECK(partition_compare(a, b) == Order::incomparable);
}

TEST_CASE("induced quotient maps") {
  FinSet g(3);
  Partition fine = Partition::discrete(g);
  Partition coarse(g, {0, 0, 1});
  CHECK(induced_quotient_map(coarse, coarse) == FinMap::identity(FinSet(2)));
  FinMap m = induced_quotient_map(fine, coarse);
  CHECK(m.table == std::vector<std::size_t>{0, 0, 1});
  CHECK(m.is_surjective());
  CHECK_THROWS_AS(induced_quotient_map(coarse, fine), NotComparable);
}

TEST_CASE("induced quotient maps commute with projections, ground size <= 4") {
  for (std::size_t n = 0; n <= 4; ++n) {
    FinSet g(n);
    auto parts = enumerate_partitions(g);
    for (const auto& p : parts)
      for (const auto& q : parts) {
        auto ord = partition_compare(p, q);
        if (ord != Order::le && ord != Order::eq) continue;
        FinMap m = induced_quotient_map(p, q);
        for (std::size_t x = 0; x < n; ++x) CHECK(m(p.block_of[x]) == q.block_of[x]);
      }
  }
}

TEST_CASE("lattice laws, exhaustively on ground size <= 5") {
  for (std::size_t n = 0; n <= 5; ++n) {
    auto parts = enumerate_partitions(FinSet(n));
    for (const auto& p : parts) {
      CHECK(partition_meet(p, p) == p);
      for (const auto& q : parts) {
        auto m = partition_meet(p, q);
        CHECK(m == partition_meet(q, p));
        // p <= q iff meet(p,q) = p
        auto ord = partition_compare(p, q);
        CHECK(((ord == Order::le || ord == Order::eq) == (m == p)));
        // meet is a lower bound
        auto mo = partition_compare(m, p);
        CHECK((mo == Order::le || mo == Order::eq));
      }
    }
    // associativity on a sparser triple sample (full triple loop for n <= 4)
    if (n <= 4) {
      for (const auto& p : parts)
        for (const auto& q : parts)
          for (const auto& r : parts)
            CHECK(partition_meet(partition_meet(p, q), r) == partition_meet(p, partition_meet(q, r)));
    }
  }
}

TEST_CASE("quotient map functoriality p <= q <= r") {
  FinSet g(4);
  auto parts = enumerate_partitions(g);
  for (const auto& p : parts)
    for (const auto& q : parts) {
      auto o1 = partition_compare(p, q);
      if (o1 != Order::le && o1 != Order::eq) continue;
      for (const auto& r : parts) {
        auto o2 = partition_compare(q, r);
        if (o2 != Order::le && o2 != Order::eq) continue;
        CHECK(induced_quotient_map(p, r) ==
              compose(induced_quotient_map(q, r), induced_quotient_map(p, q)));
      }
    }
}
