#include <doctest.h>

#include <cmath>
#include <random>

#include "core/brute_force.hpp"
#include "core/error.hpp"
#include "core/grid.hpp"
#include "core/interval_tree.hpp"
#include "core/matcher.hpp"
#include "core/sort_based.hpp"
#include "core/worker_pool.hpp"
#include "oracles.hpp"

using namespace ddm;

namespace {

MatchOptions list_mode(std::size_t workers = 1) {
  MatchOptions o;
  o.mode = ReportMode::List;
  o.workers = workers;
  return o;
}

MatchOptions count_mode(std::size_t workers = 1) {
  MatchOptions o;
  o.mode = ReportMode::Count;
  o.workers = workers;
  return o;
}

GridOptions grid_over(std::size_t cells, double low, double high) {
  GridOptions g;
  g.cell_count = cells;
  g.space_low = low;
  g.space_high = high;
  return g;
}

}  // namespace

TEST_SUITE("serial") {

TEST_CASE("four-pair instance has the intended overlaps") {
  const auto in = testing::four_pair_instance();
  std::vector<Pair> sampled;
  for (ExtentId s = 0; s < 3; ++s) {
    for (ExtentId u = 0; u < 2; ++u) {
      if (testing::sampled_overlap(in.subs.extent(s), in.upds.extent(u))) {
        sampled.emplace_back(s, u);
      }
    }
  }
  CHECK(sampled == testing::four_pair_expected());
  // S0 and S1 overlap each other; that is not a match.
  CHECK(testing::sampled_overlap(in.subs.extent(0), in.subs.extent(1)));
}

TEST_CASE("brute force") {
  const auto in = testing::four_pair_instance();
  SUBCASE("four-pair instance") {
    const PairReport r = match_brute_force(in.subs, in.upds, list_mode());
    CHECK(r.pairs == testing::four_pair_expected());
    CHECK(r.count == 4);
    CHECK(match_brute_force(in.subs, in.upds, count_mode()).count == 4);
  }
  SUBCASE("empty inputs") {
    const ExtentSet none(Kind::Subscription, 2);
    CHECK(match_brute_force(none, in.upds, list_mode()).count == 0);
    CHECK(match_brute_force(in.subs, ExtentSet(Kind::Update, 2), list_mode()).pairs.empty());
  }
  SUBCASE("identical extents across kinds") {
    const auto s = ExtentSet::from_extents(Kind::Subscription, 1, {{{3, 8}}});
    const auto u = ExtentSet::from_extents(Kind::Update, 1, {{{3, 8}}});
    CHECK(match_brute_force(s, u, count_mode()).count == 1);
  }
  SUBCASE("worker split keeps row order") {
    std::mt19937_64 rng(5);
    auto r = testing::random_instance(rng, 97, 80, 2);
    const auto expected = testing::naive_pairs(r.subs, r.upds);
    for (std::size_t p : {1u, 2u, 7u, 200u}) {
      const PairReport rep = match_brute_force(r.subs, r.upds, list_mode(p));
      CHECK(rep.pairs == expected);
      CHECK(match_brute_force(r.subs, r.upds, count_mode(p)).count == expected.size());
    }
  }
}

TEST_CASE("grid index places extents in their covered cells") {
  GridIndex grid(4, 0, 20);
  CHECK(grid.cell_width() == 5);
  CHECK(grid.cell_of(-3) == 0);
  CHECK(grid.cell_of(4.999) == 0);
  CHECK(grid.cell_of(5) == 1);
  CHECK(grid.cell_of(20) == 3);
  CHECK(grid.cell_of(1e9) == 3);
  const auto s = ExtentSet::from_extents(Kind::Subscription, 1, {{{4, 11}}, {{-5, 1}}});
  const auto u = ExtentSet::from_extents(Kind::Update, 1, {{{19, 30}}});
  grid.insert(s, u);
  CHECK(grid.cell(0).subscriptions == std::vector<ExtentId>{0, 1});
  CHECK(grid.cell(1).subscriptions == std::vector<ExtentId>{0});
  CHECK(grid.cell(2).subscriptions == std::vector<ExtentId>{0});
  CHECK(grid.cell(3).subscriptions.empty());
  CHECK(grid.cell(3).updates == std::vector<ExtentId>{0});
  CHECK_THROWS_AS(GridIndex(0, 0, 1), Error);
  CHECK_THROWS_AS(GridIndex(4, 1, 1), Error);
}

TEST_CASE("grid matching") {
  const auto in = testing::four_pair_instance();
  SUBCASE("single cell equals brute force") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
      auto r = testing::random_instance(rng, 40, 40, 1);
      const auto bf = match_brute_force(r.subs, r.upds, list_mode());
      const auto g = match_grid(r.subs, r.upds, grid_over(1, 0, 60), list_mode());
      REQUIRE(same_result(bf, g));
    }
  }
  SUBCASE("spurious candidates sharing a cell are filtered") {
    const auto s = ExtentSet::from_extents(Kind::Subscription, 1, {{{1, 2}}, {{0, 20}}});
    const auto u = ExtentSet::from_extents(Kind::Update, 1, {{{3, 4}}});
    const auto r = match_grid(s, u, grid_over(4, 0, 20), list_mode());
    CHECK(r.sorted_pairs() == std::vector<Pair>{{1, 0}});
    CHECK(testing::four_pair_expected() ==
          match_grid(in.subs, in.upds, grid_over(4, 0, 20), list_mode()).sorted_pairs());
  }
  SUBCASE("pairs spanning many cells are reported once") {
    const auto s = ExtentSet::from_extents(Kind::Subscription, 1, {{{0, 100}}});
    const auto u = ExtentSet::from_extents(Kind::Update, 1, {{{10, 90}}, {{50, 50}}});
    const auto r = match_grid(s, u, grid_over(64, 0, 100), list_mode());
    CHECK(r.sorted_pairs() == std::vector<Pair>{{0, 0}, {0, 1}});
  }
  SUBCASE("cell counts agree with brute force on random instances") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
      auto r = testing::random_instance(rng, 30, 35, 1 + t % 2);
      const auto bf = match_brute_force(r.subs, r.upds, list_mode());
      for (std::size_t g : {1u, 4u, 64u}) {
        REQUIRE(same_result(bf, match_grid(r.subs, r.upds, grid_over(g, 0, 50), list_mode())));
        REQUIRE(match_grid(r.subs, r.upds, grid_over(g, 0, 50), count_mode()).count == bf.count);
      }
    }
  }
  SUBCASE("zero cells rejected") {
    CHECK_THROWS_AS(match_grid(in.subs, in.upds, grid_over(0, 0, 20), list_mode()), Error);
  }
}

namespace {

struct SubtreeFacts {
  double minlower;
  double maxupper;
  std::int32_t height;
};

SubtreeFacts recompute(const IntervalTree& tree, IntervalTree::Index x,
                       std::vector<double>& inorder) {
  if (x == IntervalTree::kNull) return {INFINITY, -INFINITY, 0};
  const auto& n = tree.node(x);
  const SubtreeFacts l = recompute(tree, n.left, inorder);
  inorder.push_back(n.in.low);
  const SubtreeFacts r = recompute(tree, n.right, inorder);
  const SubtreeFacts me{std::min({n.in.low, l.minlower, r.minlower}),
                        std::max({n.in.high, l.maxupper, r.maxupper}),
                        1 + std::max(l.height, r.height)};
  REQUIRE(n.minlower == me.minlower);
  REQUIRE(n.maxupper == me.maxupper);
  REQUIRE(n.height == me.height);
  REQUIRE(std::abs(l.height - r.height) <= 1);
  return me;
}

}  // namespace

TEST_CASE("interval tree structure") {
  SUBCASE("empty") {
    const IntervalTree tree = IntervalTree::build({});
    CHECK(tree.empty());
    CHECK(tree.height() == 0);
    int hits = 0;
    tree.query({-1e9, 1e9}, [&](ExtentId) { ++hits; });
    CHECK(hits == 0);
  }
  SUBCASE("augmentation, ordering and height on random inserts") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> pos(0, 1000);
    std::uniform_real_distribution<double> len(0, 30);
    for (std::size_t n : {1u, 2u, 10u, 1000u, 100000u}) {
      std::vector<Interval> ivs(n);
      for (auto& iv : ivs) {
        iv.low = std::floor(pos(rng));
        iv.high = iv.low + len(rng);
      }
      const IntervalTree tree = IntervalTree::build(ivs);
      std::vector<double> inorder;
      const auto facts = recompute(tree, tree.root(), inorder);
      CHECK(inorder.size() == n);
      CHECK(std::is_sorted(inorder.begin(), inorder.end()));
      CHECK(facts.height == tree.height());
      CHECK(tree.height() <= 1.44 * std::log2(double(n) + 2));
    }
  }
  SUBCASE("sorted insertion stays balanced") {
    std::vector<Interval> ivs;
    for (int i = 0; i < 4096; ++i) ivs.push_back({double(i), double(i) + 2});
    const IntervalTree tree = IntervalTree::build(ivs);
    CHECK(tree.height() <= 1.44 * std::log2(4096.0 + 2));
  }
}

TEST_CASE("interval query") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> pos(0, 500);
  std::uniform_real_distribution<double> len(0, 20);
  std::vector<Interval> ivs(800);
  for (auto& iv : ivs) {
    iv.low = std::round(pos(rng));
    iv.high = iv.low + std::round(len(rng));
  }
  const IntervalTree tree = IntervalTree::build(ivs);

  SUBCASE("disjoint query prunes at the root") {
    std::size_t visits = 0;
    int hits = 0;
    tree.query({10000, 10001}, [&](ExtentId) { ++hits; }, &visits);
    CHECK(hits == 0);
    CHECK(visits == 1);
    visits = 0;
    tree.query({-50, -1}, [&](ExtentId) { ++hits; }, &visits);
    CHECK(visits == 1);
  }
  SUBCASE("whole-space query returns everything") {
    std::vector<ExtentId> got;
    tree.query({-1, 1000}, [&](ExtentId id) { got.push_back(id); });
    std::sort(got.begin(), got.end());
    CHECK(got.size() == ivs.size());
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
  }
  SUBCASE("random queries equal a linear scan") {
    for (int t = 0; t < 500; ++t) {
      const double lo = std::round(pos(rng));
      const Interval q{lo, lo + std::round(len(rng))};
      std::vector<ExtentId> got, want;
      tree.query(q, [&](ExtentId id) { got.push_back(id); });
      for (ExtentId i = 0; i < ivs.size(); ++i) {
        if (intersect_1d(ivs[i], q)) want.push_back(i);
      }
      std::sort(got.begin(), got.end());
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("interval tree matching") {
  const auto in = testing::four_pair_instance();
  CHECK(match_interval_tree(in.subs, in.upds, list_mode()).sorted_pairs() ==
        testing::four_pair_expected());
  std::mt19937_64 rng(29);
  WorkerPool pool(3);
  for (int t = 0; t < 50; ++t) {
    auto r = testing::random_instance(rng, 60, 70, 1 + t % 3);
    const auto bf = match_brute_force(r.subs, r.upds, list_mode());
    const auto one = match_interval_tree(r.subs, r.upds, list_mode(1));
    REQUIRE(same_result(bf, one));
    for (std::size_t p : {2u, 5u, 16u}) {
      MatchOptions o = list_mode(p);
      o.pool = &pool;
      const auto many = match_interval_tree(r.subs, r.upds, o);
      REQUIRE(many.pairs == one.pairs);
    }
  }
}

TEST_CASE("sequential sort-based matching") {
  const auto in = testing::four_pair_instance();
  CHECK(match_sbm_seq(in.subs, in.upds, list_mode()).sorted_pairs() ==
        testing::four_pair_expected());

  SUBCASE("containment is reported once at the inner upper endpoint") {
    const auto s = ExtentSet::from_extents(Kind::Subscription, 1, {{{0, 10}}});
    const auto u = ExtentSet::from_extents(Kind::Update, 1, {{{2, 3}}});
    const EndpointList t = build_endpoint_list(s, u, 0);
    SweepState state;
    PairEmitter out(ReportMode::List, s, u);
    // Nothing is emitted before U0's upper endpoint (index 2).
    sweep_endpoints(std::span(t).first(2), state, out);
    CHECK(out.take().pairs.empty());
    CHECK(match_sbm_seq(s, u, list_mode()).pairs == std::vector<Pair>{{0, 0}});
  }
  SUBCASE("touching and degenerate intervals") {
    const auto s = ExtentSet::from_extents(Kind::Subscription, 1, {{{5, 5}}, {{0, 5}}});
    const auto u = ExtentSet::from_extents(Kind::Update, 1, {{{5, 9}}, {{5, 5}}});
    CHECK(match_sbm_seq(s, u, list_mode()).sorted_pairs() ==
          std::vector<Pair>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
  SUBCASE("active sets drain to empty") {
    std::mt19937_64 rng(31);
    auto r = testing::random_instance(rng, 100, 100, 1);
    const EndpointList t = build_endpoint_list(r.subs, r.upds, 0);
    SweepState state;
    PairEmitter out(ReportMode::Count, r.subs, r.upds);
    CHECK(sweep_endpoints(t, state, out) == t.size());
    CHECK(state.subscriptions.empty());
    CHECK(state.updates.empty());
  }
  SUBCASE("each pair is emitted exactly once, at the earlier upper endpoint") {
    std::mt19937_64 rng(37);
    auto r = testing::random_instance(rng, 60, 60, 1, 40, 8);
    const EndpointList t = build_endpoint_list(r.subs, r.upds, 0);
    // Position of every upper endpoint in sweep order.
    std::vector<std::size_t> sub_upper(60), upd_upper(60);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].is_lower) continue;
      (t[i].owner_kind == Kind::Subscription ? sub_upper : upd_upper)[t[i].owner_id] = i;
    }
    SweepState state;
    for (std::size_t i = 0; i < t.size(); ++i) {
      PairEmitter out(ReportMode::List, r.subs, r.upds);
      sweep_endpoints(std::span(t).subspan(i, 1), state, out);
      for (const auto& [s, u] : out.take().pairs) {
        REQUIRE(std::min(sub_upper[s], upd_upper[u]) == i);
      }
    }
    const auto rep = match_sbm_seq(r.subs, r.upds, list_mode());
    auto sorted = rep.sorted_pairs();
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
  SUBCASE("equals brute force on random instances") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
      auto r = testing::random_instance(rng, 50, 45, 1);
      const auto bf = match_brute_force(r.subs, r.upds, list_mode());
      REQUIRE(same_result(bf, match_sbm_seq(r.subs, r.upds, list_mode())));
      REQUIRE(match_sbm_seq(r.subs, r.upds, count_mode()).count == bf.count);
    }
  }
  SUBCASE("generated workloads across overlapping degrees") {
    for (double alpha : {0.01, 1.0, 100.0}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        WorkloadConfig cfg;
        cfg.total = 2000;
        cfg.alpha = alpha;
        cfg.seed = seed;
        const Workload w = generate_workload(cfg);
        const auto bf = match_brute_force(w.subscriptions, w.updates, list_mode());
        REQUIRE(same_result(bf, match_sbm_seq(w.subscriptions, w.updates, list_mode())));
      }
    }
  }
}

TEST_CASE("match_dd") {
  SUBCASE("d = 1 equals the 1-D matcher") {
    std::mt19937_64 rng(43);
    auto r = testing::random_instance(rng, 40, 40, 1);
    for (auto algo : {"bf", "grid", "itm", "sbm", "sbm-par"}) {
      GridOptions g = grid_over(8, 0, 60);
      REQUIRE(same_result(match_dd(r.subs, r.upds, algo, list_mode(), g),
                          match_sbm_seq(r.subs, r.upds, list_mode())));
    }
  }
  SUBCASE("crossing rectangles do not match") {
    const auto s = ExtentSet::from_extents(Kind::Subscription, 2, {{{0, 10}, {0, 1}}});
    const auto u = ExtentSet::from_extents(Kind::Update, 2, {{{2, 3}, {5, 9}}});
    for (auto algo : {"bf", "grid", "itm", "sbm", "sbm-par"}) {
      CHECK(match_dd(s, u, algo, count_mode(), grid_over(4, 0, 10)).count == 0);
    }
  }
  SUBCASE("random d = 2 and d = 3 instances equal the d-dimensional oracle") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
      const std::size_t dims = 2 + t % 2;
      auto r = testing::random_instance(rng, 40, 50, dims, 30, 12);
      const auto want = testing::naive_pairs(r.subs, r.upds);
      for (auto algo : {"bf", "grid", "itm", "sbm", "sbm-par"}) {
        MatchOptions o = list_mode(3);
        const auto rep = match_dd(r.subs, r.upds, algo, o, grid_over(5, 0, 45));
        REQUIRE(rep.sorted_pairs() == want);
        o.mode = ReportMode::Count;
        REQUIRE(match_dd(r.subs, r.upds, algo, o, grid_over(5, 0, 45)).count == want.size());
      }
    }
  }
  SUBCASE("unknown algorithm rejected") {
    const auto in = testing::four_pair_instance();
    CHECK_THROWS_AS(match_dd(in.subs, in.upds, "kd-tree", list_mode()), Error);
    CHECK_FALSE(parse_algorithm("BF").has_value());
    CHECK(algorithm_name(Algorithm::ParallelSortBased) == "sbm-par");
  }
}

TEST_CASE("matchers honor an expired deadline") {
  WorkloadConfig cfg;
  cfg.total = 20000;
  const Workload w = generate_workload(cfg);
  const Deadline expired(1e-9);
  while (!expired.expired()) {
  }
  MatchOptions o = count_mode();
  o.deadline = &expired;
  CHECK_THROWS_AS(match_brute_force(w.subscriptions, w.updates, o), Error);
  CHECK_THROWS_AS(match_interval_tree(w.subscriptions, w.updates, o), Error);
  CHECK_THROWS_AS(match_grid(w.subscriptions, w.updates, {}, o), Error);
}

}  // TEST_SUITE
