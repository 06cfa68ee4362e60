#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace clutterlab {
namespace {

using testing::clutter;
using testing::worked_example;
using testing::vs;

SimplicialOrder order_of(const Clutter& c, const std::vector<std::string>& elements) {
  SimplicialOrder order;
  Clutter current = c;
  for (const auto& text : elements) {
    const VertexSet e = vs(text);
    order.steps.push_back({e, open_neighborhood(current, e).size()});
    current = deletion(current, e);
  }
  return order;
}

TEST(SimplicialElements, WorkedExample) {
  const auto simp = simplicial_elements(worked_example());
  const std::vector<VertexSet> expected{vs("12"), vs("13"), vs("15"), vs("23"), vs("24"), vs("34"), vs("45")};
  EXPECT_EQ(simp, expected);
  EXPECT_FALSE(is_simplicial(worked_example(), vs("14")));
  EXPECT_FALSE(is_simplicial(worked_example(), vs("25")));
}

TEST(SimplicialElements, TrivialCases) {
  EXPECT_TRUE(simplicial_elements(make_clutter(5, 3, std::vector<VertexSet>{})).empty());
  EXPECT_EQ(simplicial_elements(complete_clutter(4, 3)).size(), 6U);
}

TEST(FindSimplicialOrder, WorkedExampleWitness) {
  const Clutter c = worked_example();
  const SearchResult r = find_simplicial_order(c);
  ASSERT_EQ(r.status, Chordality::chordal);
  ASSERT_TRUE(r.order);
  EXPECT_EQ(verify_order(c, *r.order), std::nullopt);
  EXPECT_EQ(r.order->to_string(), "(12,2),(13,1),(14,1),(23,1)");
  EXPECT_EQ(simplicial_multiset(*r.order), (Multiset{2, 1, 1, 1}));
}

TEST(FindSimplicialOrder, PublishedOrdersReplay) {
  const Clutter c = worked_example();
  const SimplicialOrder e = order_of(c, {"12", "23", "13", "14"});
  const SimplicialOrder e2 = order_of(c, {"15", "14", "12", "23"});
  EXPECT_EQ(verify_order(c, e), std::nullopt);
  EXPECT_EQ(verify_order(c, e2), std::nullopt);
  EXPECT_EQ(e.to_string(), "(12,2),(23,1),(13,1),(14,1)");
  EXPECT_EQ(e2.to_string(), "(15,1),(14,2),(12,1),(23,1)");
  EXPECT_EQ(simplicial_multiset(e), (Multiset{2, 1, 1, 1}));
  EXPECT_EQ(simplicial_multiset(e2), (Multiset{1, 2, 1, 1}));
}

TEST(FindSimplicialOrder, VerifyOrderRejectsBadWitnesses) {
  const Clutter c = worked_example();
  SimplicialOrder bad = order_of(c, {"12", "23", "13", "14"});
  bad.steps[0].neighbors = 3;
  EXPECT_TRUE(verify_order(c, bad).has_value());
  EXPECT_TRUE(verify_order(c, order_of(c, {"12", "23", "13"})).has_value());
  SimplicialOrder not_simplicial;
  not_simplicial.steps.push_back({vs("14"), 3});
  EXPECT_TRUE(verify_order(c, not_simplicial).has_value());
}

TEST(FindSimplicialOrder, EmptyAndComplete) {
  const SearchResult empty = find_simplicial_order(make_clutter(5, 3, std::vector<VertexSet>{}));
  EXPECT_EQ(empty.status, Chordality::chordal);
  EXPECT_TRUE(empty.order->empty());

  const Clutter k53 = complete_clutter(5, 3);
  const SearchResult r = find_simplicial_order(k53);
  ASSERT_EQ(r.status, Chordality::chordal);
  EXPECT_EQ(r.order->size(), 6U);
  EXPECT_EQ(simplicial_multiset(*r.order), (Multiset{3, 2, 2, 1, 1, 1}));
  EXPECT_EQ(verify_order(k53, *r.order), std::nullopt);
}

TEST(FindSimplicialOrder, NonChordal) {
  const Clutter cycle = clutter(4, 2, "12 23 34 14");
  EXPECT_EQ(find_simplicial_order(cycle).status, Chordality::not_chordal);
  EXPECT_FALSE(greedy_simplicial_order(cycle).has_value());
  // chordless 5-cycle
  const Clutter c5 = clutter(5, 2, "12 23 34 45 15");
  EXPECT_EQ(find_simplicial_order(c5).status, Chordality::not_chordal);
}

TEST(FindSimplicialOrder, NodeLimitIsInconclusive) {
  const Clutter k63 = complete_clutter(6, 3);
  const SearchResult cut = find_simplicial_order(k63, SearchOptions{1});
  EXPECT_EQ(cut.status, Chordality::inconclusive);
  EXPECT_FALSE(cut.order.has_value());
  EXPECT_EQ(find_simplicial_order(k63, SearchOptions{1000}).status, Chordality::chordal);
}

TEST(FindSimplicialOrder, Deterministic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Clutter c = testing::random_chordal_clutter(6, 3, 8, rng);
    EXPECT_EQ(find_simplicial_order(c).order, find_simplicial_order(c).order);
  }
}

TEST(GreedySimplicialOrder, WorkedExample) {
  const auto greedy = greedy_simplicial_order(worked_example());
  ASSERT_TRUE(greedy);
  EXPECT_EQ(greedy->steps.front().element, vs("12"));
  EXPECT_EQ(verify_order(worked_example(), *greedy), std::nullopt);
  EXPECT_TRUE(greedy_simplicial_order(make_clutter(4, 3, std::vector<VertexSet>{}))->empty());
}

TEST(Multiset, Basics) {
  const Multiset m{2, 1, 1, 1};
  EXPECT_EQ(m.count(1), 3U);
  EXPECT_EQ(m.count(2), 1U);
  EXPECT_EQ(m.count(7), 0U);
  EXPECT_EQ(m.total(), 4U);
  EXPECT_EQ(m.max(), 2);
  EXPECT_EQ(m.values(), (std::vector<int>{2, 1, 1, 1}));
  EXPECT_EQ(simplicial_multiset(SimplicialOrder{}), Multiset{});
}

TEST(LambdaSequence, Examples) {
  EXPECT_EQ(lambda_sequence(Multiset{2, 1, 1, 1}, 5, 3), LambdaSequence(5, 3, {3, 1}));

  const Clutter c = clutter(4, 3, "123 124 134");
  const auto r = find_simplicial_order(c);
  ASSERT_EQ(r.status, Chordality::chordal);
  EXPECT_EQ(lambda_sequence(simplicial_multiset(*r.order), 4, 3), LambdaSequence(4, 3, {3}));

  const auto k43 = find_simplicial_order(complete_clutter(4, 3));
  EXPECT_EQ(lambda_sequence(simplicial_multiset(*k43.order), 4, 3), LambdaSequence(4, 3, {2, 1}));

  const LambdaSequence trimmed(6, 3, {1, 2, 0, 0});
  EXPECT_EQ(trimmed.length(), 2U);
  EXPECT_EQ(trimmed[2], 2);
  EXPECT_EQ(trimmed[3], 0);
  EXPECT_EQ(trimmed[0], 0);
}

// Sum of lambda_i counts deletions; sum of i * lambda_i counts circuits.
TEST(LambdaSequence, CountsOrderLengthAndCircuits) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Clutter c = testing::random_chordal_clutter(n, 3, 1 + static_cast<int>(rng() % 10), rng);
    const auto r = find_simplicial_order(c);
    ASSERT_EQ(r.status, Chordality::chordal) << c.to_string();
    const auto lambda = lambda_sequence(simplicial_multiset(*r.order), n, 3);
    EXPECT_EQ(lambda.sum(), Integer(r.order->size()));
    EXPECT_EQ(lambda.weighted_sum(), Integer(c.size()));
  }
}

TEST(EnumerateOrders, WorkedExampleMultisetInvariance) {
  const auto orders = enumerate_simplicial_orders(worked_example(), 100000);
  ASSERT_FALSE(orders.empty());
  for (const auto& o : orders) {
    EXPECT_EQ(o.size(), 4U);
    EXPECT_EQ(simplicial_multiset(o), (Multiset{1, 1, 1, 2}));
    EXPECT_EQ(verify_order(worked_example(), o), std::nullopt);
  }
  // the two orders quoted for the example are among them
  const auto contains = [&](const SimplicialOrder& o) { return std::find(orders.begin(), orders.end(), o) != orders.end(); };
  EXPECT_TRUE(contains(order_of(worked_example(), {"12", "23", "13", "14"})));
  EXPECT_TRUE(contains(order_of(worked_example(), {"15", "14", "12", "23"})));
}

TEST(EnumerateOrders, TrivialAndComplete) {
  const auto empty = enumerate_simplicial_orders(make_clutter(4, 3, std::vector<VertexSet>{}), 10);
  ASSERT_EQ(empty.size(), 1U);
  EXPECT_TRUE(empty.front().empty());
  for (const auto& o : enumerate_simplicial_orders(complete_clutter(4, 3), 100000)) {
    EXPECT_EQ(o.size(), 3U);
    EXPECT_EQ(simplicial_multiset(o), (Multiset{2, 1, 1}));
  }
  EXPECT_EQ(enumerate_simplicial_orders(complete_clutter(5, 3), 5).size(), 5U);
  EXPECT_THROW(enumerate_simplicial_orders(complete_clutter(8, 3), 1), SearchBoundError);
}

TEST(EnumerateOrders, RandomMultisetInvariance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Clutter c = testing::random_chordal_clutter(5, 3, 1 + static_cast<int>(rng() % 6), rng);
    const auto orders = enumerate_simplicial_orders(c, 2000);
    ASSERT_FALSE(orders.empty());
    const Multiset first = simplicial_multiset(orders.front());
    for (const auto& o : orders) EXPECT_EQ(simplicial_multiset(o), first) << c.to_string();
  }
}

TEST(CoChordal, Examples) {
  EXPECT_FALSE(is_co_chordal(clutter(4, 3, "123 124 134")).co_chordal);
  const auto complete = is_co_chordal(complete_clutter(5, 3));
  EXPECT_TRUE(complete.co_chordal);
  EXPECT_TRUE(complete.sequence.empty());
  const Clutter empty = make_clutter(4, 3, std::vector<VertexSet>{});
  const auto r = is_co_chordal(empty);
  ASSERT_TRUE(r.co_chordal);
  EXPECT_EQ(r.sequence.size(), 3U);
  EXPECT_THROW(is_co_chordal(complete_clutter(2, 3)), ClutterError);
}

TEST(CoChordal, WitnessReplaysFromCompleteClutter) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<VertexSet> circuits;
    for_each_subset_of_size(VertexSet::range(5), 3, [&](VertexSet f) {
      if (rng() % 3) circuits.push_back(f);
    });
    const Clutter c = make_clutter(5, 3, circuits);
    const auto r = is_co_chordal(c);
    if (!r.co_chordal) continue;
    Clutter current = complete_clutter(5, 3);
    for (VertexSet e : r.sequence) {
      ASSERT_TRUE(is_simplicial(current, e));
      current = deletion(current, e);
    }
    EXPECT_EQ(current, c);
  }
}

// chordal and co-chordal together bound lambda_i by the complete clutter's value
TEST(CoChordal, LambdaBoundWhenAlsoChordal) {
  int both = 0;
  for (std::uint64_t pick = 0; pick < (1U << 10); ++pick) {
    std::vector<VertexSet> all;
    for_each_subset_of_size(VertexSet::range(5), 3, [&](VertexSet f) { all.push_back(f); });
    std::vector<VertexSet> circuits;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (pick >> k & 1U) circuits.push_back(all[k]);
    }
    const Clutter c = make_clutter(5, 3, circuits);
    const auto search = find_simplicial_order(c);
    if (search.status != Chordality::chordal || !is_co_chordal(c).co_chordal) continue;
    ++both;
    const auto lambda = lambda_sequence(simplicial_multiset(*search.order), 5, 3);
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
      EXPECT_LE(lambda[i], binomial(5 - 1 - static_cast<long>(i), 1)) << c.to_string();
    }
  }
  EXPECT_GT(both, 1);
}

TEST(Dirac, SmallGraphsAgreeWithPerfectEliminationCheck) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<VertexSet> pairs;
    for_each_subset_of_size(VertexSet::range(n), 2, [&](VertexSet f) { pairs.push_back(f); });
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
      std::vector<VertexSet> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pick >> k & 1U) edges.push_back(pairs[k]);
      }
      const Clutter g = make_clutter(n, 2, edges);
      EXPECT_EQ(find_simplicial_order(g).status == Chordality::chordal, testing::is_chordal_graph_peo(g)) << g.to_string();
    }
  }
}

TEST(RandomChordalGenerator, ProducesChordalClutters) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const Clutter c = testing::random_chordal_clutter(d + 3, d, 6, rng);
    EXPECT_EQ(find_simplicial_order(c).status, Chordality::chordal) << c.to_string();
  }
}

}  // namespace
}  // namespace clutterlab
