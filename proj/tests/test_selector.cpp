/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <doctest.h>

#include <cmath>

#include "hypercut/errors.hpp"
#include "hypercut/rng.hpp"
#include "hypercut/selector.hpp"
#include "testutil.hpp"

using namespace hypercut;

namespace {

TransitionFeatures uniform_flow_features(std::size_t frames, double flow) {
    TransitionFeatures features;
    features.half_diag = 100.0;
    for (std::size_t f = 0; f < frames; ++f) {
        features.foe_dist.push_back(0.0);
        features.histograms.push_back({{1.0, 1.0}, {1.0, 1.0}});
        if (f + 1 < frames) {
            features.flow_mag.push_back(flow);
            features.center_disp.push_back(0.0);
        }
    }
    return features;
}

} // namespace

TEST_CASE("relevance_cost") {
    CHECK(relevance_cost(0.0, 0.0, 0.01) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(relevance_cost(0.6, 0.4, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(relevance_cost(0.3, 0.2, 0.01) ==
          doctest::Approx(1.0 / 0.51).epsilon(1e-12));
    CHECK(relevance_cost(0.3, 0.2, 0.01) ==
          doctest::Approx(1.9608).epsilon(1e-4));
}

TEST_CASE("instability_cost") {
    auto features = uniform_flow_features(4, 1.0);
    SUBCASE("zero distances") {
        CHECK(instability_cost(features, 0, 1) == 0.0);
    }
    SUBCASE("mean of the two values") {
        features.foe_dist = {0.2, 0.4, 0.0, 0.0};
        CHECK(instability_cost(features, 0, 1) ==
              doctest::Approx(0.3).epsilon(1e-12));
    }
    SUBCASE("symmetric in its arguments") {
        features.foe_dist = {0.7, 0.1, 0.5, 0.0};
        CHECK(instability_cost(features, 0, 2) ==
              instability_cost(features, 2, 0));
    }
    SUBCASE("out-of-range indices raise") {
        CHECK_THROWS_AS(instability_cost(features, 0, 9), FrameOutOfRange);
    }
}

TEST_CASE("motion_cost accumulates flow against the rate baseline") {
    SUBCASE("a pair at the planned rate matches the baseline exactly") {
        const auto features = uniform_flow_features(20, 1.0);
        CHECK(motion_cost(features, 3, 5, 2) == 0.0);
    }
    SUBCASE("the spec's double-gap example") {
        const auto features = uniform_flow_features(20, 1.0);
        CHECK(motion_cost(features, 2, 6, 2) == 2.0);
    }
    SUBCASE("zero flow everywhere") {
        const auto features = uniform_flow_features(20, 0.0);
        CHECK(motion_cost(features, 1, 7, 3) == 0.0);
    }
}

TEST_CASE("appearance_cost is a per-channel 1-D earth mover's distance") {
    TransitionFeatures features;
    features.half_diag = 1.0;
    features.foe_dist = {0.0, 0.0};
    features.flow_mag = {1.0};
    features.center_disp = {0.0};

    SUBCASE("identical histograms") {
        features.histograms = {{{3.0, 1.0, 2.0}}, {{3.0, 1.0, 2.0}}};
        CHECK(appearance_cost(features, 0, 1) == 0.0);
    }
    SUBCASE("unit mass moved one bin") {
        features.histograms = {{{1.0, 0.0, 0.0}}, {{0.0, 1.0, 0.0}}};
        CHECK(appearance_cost(features, 0, 1) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("symmetry") {
        features.histograms = {{{5.0, 2.0, 1.0}, {0.0, 4.0, 4.0}},
                               {{1.0, 1.0, 6.0}, {2.0, 2.0, 2.0}}};
        CHECK(appearance_cost(features, 0, 1) == appearance_cost(features, 1, 0));
    }
    SUBCASE("bin mismatch raises") {
        features.histograms = {{{1.0, 2.0}}, {{1.0, 2.0, 3.0}}};
        CHECK_THROWS_AS(appearance_cost(features, 0, 1), HistogramMismatch);
    }
}

TEST_CASE("transition cost is the weighted sum of the four terms") {
    Rng rng(7);
    const auto features = testutil::random_features(12, rng);
    const auto profile = testutil::random_profile(12, rng);

    SUBCASE("all lambdas zero") {
        CostWeights weights{0.0, 0.0, 0.0, 0.0, 0.01};
        const TransitionCostModel model(profile, features, weights);
        CHECK(model.transition(2, 5, 2) == 0.0);
    }
    SUBCASE("lambda_s alone projects onto the relevance cost") {
        CostWeights weights{1.0, 0.0, 0.0, 0.0, 0.01};
        const TransitionCostModel model(profile, features, weights);
        CHECK(model.transition(2, 5, 2) ==
              relevance_cost(profile.scores[2], profile.scores[5], 0.01));
    }
    SUBCASE("unit lambdas sum the four hand-computed terms") {
        CostWeights weights{1.0, 1.0, 1.0, 1.0, 0.01};
        const TransitionCostModel model(profile, features, weights);
        const int g = 3;
        const int h = 7;
        const int rate = 2;
        const double expected =
            1.0 * relevance_cost(profile.scores[g], profile.scores[h], 0.01) +
            1.0 * instability_cost(features, g, h) +
            1.0 * motion_cost(features, g, h, rate) +
            1.0 * appearance_cost(features, g, h);
        CHECK(model.transition(g, h, rate) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("shortest_path_dag on the six-node unit-cost example") {
    // E = 1 everywhere, rate 2, tau 3: minimum cost 3; among the cost-3
    // paths the lexicographically smallest is [0,1,3,5]
    const auto weight = [](int g, int h) {
        const int gap = h - g;
        return static_cast<double>((gap + 1) / 2);
    };
    const auto path = shortest_path_dag(6, 3, weight);
    CHECK(path.cost == 3.0);
    REQUIRE(path.nodes.size() == 4);
    CHECK(path.nodes[0] == 0);
    CHECK(path.nodes[1] == 1);
    CHECK(path.nodes[2] == 3);
    CHECK(path.nodes[3] == 5);

    const auto oracle = testutil::enumerate_paths(6, 3, weight);
    CHECK(oracle.cost == path.cost);
    CHECK(oracle.nodes == path.nodes);
}

TEST_CASE("shortest_path_dag matches exhaustive enumeration on random costs") {
    Rng rng(17);
    for (int round = 0; round < 300; ++round) {
        const int n = 2 + static_cast<int>(rng.next_index(11));
        const int tau = 1 + static_cast<int>(rng.next_index(4));
        std::vector<double> table(static_cast<std::size_t>(n) * n, 0.0);
        for (int g = 0; g < n; ++g) {
            for (int h = g + 1; h < n && h <= g + tau; ++h) {
                table[static_cast<std::size_t>(g) * n + h] =
                    rng.uniform(0.0, 10.0);
            }
        }
        const auto weight = [&](int g, int h) {
            return table[static_cast<std::size_t>(g) * n + h];
        };
        const auto path = shortest_path_dag(n, tau, weight);
        const auto oracle = testutil::enumerate_paths(n, tau, weight);
        CHECK(path.cost == oracle.cost);
        CHECK(path.nodes == oracle.nodes);
    }
}

TEST_CASE("select_frames honors segment endpoints and the skip bound") {
    Rng rng(19);
    const std::size_t frames = 60;
    const auto features = testutil::random_features(frames, rng);
    const auto profile = testutil::random_profile(frames, rng);
    const CostWeights weights{1.0, 1.0, 1.0, 1.0, 0.01};
    const TransitionCostModel model(profile, features, weights);

    SUBCASE("length-1 and length-2 segments keep everything") {
        Segment one;
        one.start = 5;
        one.end = 5;
        CHECK(select_frames(one, model, 4) == std::vector<int>{5});
        Segment two;
        two.start = 7;
        two.end = 8;
        CHECK(select_frames(two, model, 4) == std::vector<int>{7, 8});
    }
    SUBCASE("selected frames increase with gaps at most tau") {
        for (int round = 0; round < 50; ++round) {
            Segment seg;
            seg.start = static_cast<int>(rng.next_index(frames - 20));
            seg.end = seg.start + 5 + static_cast<int>(rng.next_index(14));
            seg.speedup = 1 + static_cast<int>(rng.next_index(5));
            const int tau = 1 + static_cast<int>(rng.next_index(6));
            const auto sel = select_frames(seg, model, tau);
            REQUIRE(!sel.empty());
            CHECK(sel.front() == seg.start);
            CHECK(sel.back() == seg.end);
            for (std::size_t i = 1; i < sel.size(); ++i) {
                CHECK(sel[i] > sel[i - 1]);
                CHECK(sel[i] - sel[i - 1] <= tau);
            }
        }
    }
}

TEST_CASE("scaling every lambda by a power of two scales costs exactly") {
    Rng rng(23);
    for (int round = 0; round < 200; ++round) {
        const std::size_t frames = 8 + rng.next_index(8);
        const auto features = testutil::random_features(frames, rng);
        const auto profile = testutil::random_profile(frames, rng);
        const CostWeights base{rng.next_double(), rng.next_double(),
                               rng.next_double(), rng.next_double(), 0.01};
        const double scale = rng.next_double() < 0.5 ? 4.0 : 0.25;
        CostWeights scaled = base;
        scaled.lambda_s *= scale;
        scaled.lambda_i *= scale;
        scaled.lambda_m *= scale;
        scaled.lambda_a *= scale;

        Segment seg;
        seg.start = 0;
        seg.end = static_cast<int>(frames) - 1;
        seg.speedup = 1 + static_cast<int>(rng.next_index(3));
        const int tau = 1 + static_cast<int>(rng.next_index(4));

        const TransitionCostModel model_a(profile, features, base);
        const TransitionCostModel model_b(profile, features, scaled);
        CHECK(select_frames(seg, model_a, tau) ==
              select_frames(seg, model_b, tau));

        const auto weight_a = [&](int g, int h) {
            return model_a.transition(seg.start + g, seg.start + h, seg.speedup);
        };
        const auto weight_b = [&](int g, int h) {
            return model_b.transition(seg.start + g, seg.start + h, seg.speedup);
        };
        const auto path_a =
            shortest_path_dag(seg.length(), tau, weight_a);
        const auto path_b =
            shortest_path_dag(seg.length(), tau, weight_b);
        CHECK(path_b.cost == scale * path_a.cost);
    }
}

TEST_CASE("compose flattens per-segment selections") {
    SUBCASE("two segments selecting endpoints") {
        const auto plan = compose({{0, 4}, {5, 9}}, 10);
        CHECK(plan.selected == std::vector<int>{0, 4, 5, 9});
        CHECK(plan.achieved_rate == doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("a single segment is the identity") {
        const auto plan = compose({{2, 3, 7}}, 8);
        CHECK(plan.selected == std::vector<int>{2, 3, 7});
    }
    SUBCASE("the achieved rate is frames over selections") {
        std::vector<int> ten;
        for (int i = 0; i < 10; ++i) {
            ten.push_back(i * 10);
        }
        const auto plan = compose({ten}, 100);
        CHECK(plan.achieved_rate == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("overlapping selections raise") {
        CHECK_THROWS_AS(compose({{0, 5}, {5, 9}}, 10), PlanOverlap);
        CHECK_THROWS_AS(compose({{0, 6}, {5, 9}}, 10), PlanOverlap);
    }
}
