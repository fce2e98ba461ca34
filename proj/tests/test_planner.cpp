/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include <doctest.h>

#include <cmath>

#include "hypercut/errors.hpp"
#include "hypercut/planner.hpp"
#include "hypercut/rng.hpp"
#include "testutil.hpp"

using namespace hypercut;

namespace {

InterestProfile flat_profile(std::size_t frames, double value) {
    InterestProfile profile;
    profile.scores.assign(frames, value);
    return profile;
}

// segment means become [0.9, 0.9, 0.5, 0.5, 0.1, 0.1, 0.1, 0.1] at window 10
InterestProfile two_tier_profile() {
    InterestProfile profile;
    profile.scores.assign(80, 0.1);
    for (int f = 0; f < 20; ++f) {
        profile.scores[static_cast<std::size_t>(f)] = 0.9;
    }
    for (int f = 20; f < 40; ++f) {
        profile.scores[static_cast<std::size_t>(f)] = 0.5;
    }
    return profile;
}

} // namespace

TEST_CASE("partition tiles the video with the remainder rule") {
    SUBCASE("exact multiple") {
        const auto segs = partition(flat_profile(100, 0.0), 25);
        REQUIRE(segs.size() == 4);
        for (const auto& s : segs) {
            CHECK(s.length() == 25);
        }
    }
    SUBCASE("short remainder folds into the last segment") {
        const auto segs = partition(flat_profile(110, 0.0), 25);
        REQUIRE(segs.size() == 4);
        CHECK(segs[3].start == 75);
        CHECK(segs[3].end == 109);
        CHECK(segs[3].length() == 35);
    }
    SUBCASE("a video shorter than the window is one segment") {
        const auto segs = partition(flat_profile(10, 0.0), 25);
        REQUIRE(segs.size() == 1);
        CHECK(segs[0].length() == 10);
    }
    SUBCASE("a remainder of at least half a window stands alone") {
        const auto segs = partition(flat_profile(40, 0.0), 25);
        REQUIRE(segs.size() == 2);
        CHECK(segs[1].length() == 15);
    }
    SUBCASE("empty profile raises") {
        CHECK_THROWS_AS(partition(flat_profile(0, 0.0), 25), EmptyVideo);
    }
    SUBCASE("segments always tile 0..F-1") {
        Rng rng(55);
        for (int round = 0; round < 1000; ++round) {
            const std::size_t frames = 1 + rng.next_index(400);
            const int window = 1 + static_cast<int>(rng.next_index(60));
            const auto segs =
                partition(testutil::random_profile(frames, rng), window);
            long long covered = 0;
            int cursor = 0;
            for (const auto& s : segs) {
                CHECK(s.start == cursor);
                CHECK(s.end >= s.start);
                covered += s.length();
                cursor = s.end + 1;
            }
            CHECK(covered == static_cast<long long>(frames));
            CHECK(cursor == static_cast<int>(frames));
        }
    }
}

TEST_CASE("classify marks segments above the strategy threshold") {
    const auto make_segments = [](const std::vector<double>& means) {
        std::vector<Segment> segs;
        int start = 0;
        for (double m : means) {
            Segment s;
            s.start = start;
            s.end = start + 9;
            s.mean_score = m;
            segs.push_back(s);
            start += 10;
        }
        return segs;
    };

    SUBCASE("mean strategy") {
        auto segs = make_segments({0.9, 0.1, 0.1, 0.1});
        const double threshold = classify(segs, {});
        CHECK(threshold == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(segs[0].relevant);
        CHECK(!segs[1].relevant);
        CHECK(!segs[2].relevant);
        CHECK(!segs[3].relevant);
    }
    SUBCASE("equal scores leave nothing relevant under strict inequality") {
        auto segs = make_segments({0.4, 0.4, 0.4});
        classify(segs, {});
        for (const auto& s : segs) {
            CHECK(!s.relevant);
        }
    }
    SUBCASE("percentile(80) keeps the top two of ten") {
        std::vector<double> means;
        for (int i = 1; i <= 10; ++i) {
            means.push_back(0.1 * i);
        }
        auto segs = make_segments(means);
        ThresholdStrategy strategy;
        strategy.kind = ThresholdStrategy::Kind::Percentile;
        strategy.percentile = 80.0;
        classify(segs, strategy);
        int relevant = 0;
        for (const auto& s : segs) {
            if (s.relevant) {
                ++relevant;
                CHECK(s.mean_score > 0.8);
            }
        }
        CHECK(relevant == 2);
    }
    SUBCASE("otsu separates two obvious clusters") {
        auto segs = make_segments({0.9, 0.85, 0.88, 0.1, 0.12, 0.08});
        ThresholdStrategy strategy;
        strategy.kind = ThresholdStrategy::Kind::Otsu;
        classify(segs, strategy);
        CHECK(segs[0].relevant);
        CHECK(segs[1].relevant);
        CHECK(segs[2].relevant);
        CHECK(!segs[3].relevant);
        CHECK(!segs[4].relevant);
        CHECK(!segs[5].relevant);
    }
    SUBCASE("empty list raises") {
        std::vector<Segment> none;
        CHECK_THROWS_AS(classify(none, {}), EmptyVideo);
    }
}

TEST_CASE("solve_speedups scans the integer grid") {
    SUBCASE("no relevant content degenerates to the uniform pair") {
        const auto sol = solve_speedups(0, 100, 10, 0.0, 0.0, 100);
        CHECK(sol.relevant_rate == 10);
        CHECK(sol.nonrelevant_rate == 10);
    }
    SUBCASE("the 40/60 example reaches objective zero at (5, 30)") {
        const auto sol = solve_speedups(40, 60, 10, 0.0, 0.0, 100);
        CHECK(sol.relevant_rate == 5);
        CHECK(sol.nonrelevant_rate == 30);
        CHECK(sol.objective == 0.0);
    }
    SUBCASE("never worse than the uniform pair (S, S)") {
        Rng rng(91);
        for (int round = 0; round < 500; ++round) {
            const long long l_rel = rng.next_index(200);
            const long long l_non = 1 + rng.next_index(200);
            const int target = 1 + static_cast<int>(rng.next_index(15));
            const double l1 = rng.next_double();
            const double l2 = rng.next_double();
            const int max_rate = target + static_cast<int>(rng.next_index(40));
            const auto sol =
                solve_speedups(l_rel, l_non, target, l1, l2, max_rate);
            const double at_uniform =
                std::abs(static_cast<double>(l_rel + l_non) / target -
                         (static_cast<double>(l_rel) / target +
                          static_cast<double>(l_non) / target)) +
                l2 * target;
            CHECK(sol.objective <= at_uniform);
        }
    }
    SUBCASE("matches the independent grid scan, tie-breaks included") {
        Rng rng(92);
        for (int round = 0; round < 500; ++round) {
            const long long l_rel = rng.next_index(300);
            const long long l_non = rng.next_index(300);
            if (l_rel + l_non == 0) {
                continue;
            }
            const int target = 1 + static_cast<int>(rng.next_index(12));
            const double l1 = rng.next_double() < 0.3 ? 0.0 : rng.next_double();
            const double l2 = rng.next_double() < 0.3 ? 0.0 : rng.next_double();
            const int max_rate = target + static_cast<int>(rng.next_index(50));
            const auto sol =
                solve_speedups(l_rel, l_non, target, l1, l2, max_rate);
            const auto oracle = testutil::scan_speedups(l_rel, l_non, target,
                                                        l1, l2, max_rate);
            CHECK(sol.relevant_rate == oracle.s_rel);
            CHECK(sol.nonrelevant_rate == oracle.s_non);
            CHECK(sol.objective == oracle.objective);
        }
    }
    SUBCASE("raising lambda2 never raises the relevant rate") {
        Rng rng(93);
        for (int round = 0; round < 300; ++round) {
            const long long l_rel = 1 + rng.next_index(200);
            const long long l_non = 1 + rng.next_index(200);
            const int target = 2 + static_cast<int>(rng.next_index(10));
            const double l1 = rng.next_double();
            const int max_rate = target + 30;
            int previous = target;
            for (double l2 : {0.0, 0.1, 0.5, 1.0, 5.0}) {
                const auto sol =
                    solve_speedups(l_rel, l_non, target, l1, l2, max_rate);
                CHECK(sol.relevant_rate <= previous);
                previous = sol.relevant_rate;
            }
        }
    }
    SUBCASE("infeasible bounds raise") {
        CHECK_THROWS_AS(solve_speedups(10, 10, 10, 0.0, 0.0, 9),
                        InfeasibleBounds);
    }
    SUBCASE("an empty video raises") {
        CHECK_THROWS_AS(solve_speedups(0, 0, 10, 0.0, 0.0, 100), EmptyVideo);
    }
}

TEST_CASE("refine splits relevant segments hierarchically") {
    PlanParams params;
    params.target_speedup = 8;
    params.window = 10;
    params.lambda1 = 0.0;
    params.lambda2 = 0.0;
    params.max_rate = 100;

    SUBCASE("two-tier scores: the high tier ends strictly below S_s*") {
        const auto profile = two_tier_profile();
        auto segments = partition(profile, params.window);
        const double threshold = classify(segments, params.strategy);
        CHECK(threshold == doctest::Approx(0.4).epsilon(1e-9));

        // level 0: L_s = 40, L_ns = 40, S = 8 -> exact zero at (5, 20)
        const auto sol = solve_speedups(40, 40, 8, 0.0, 0.0, 100);
        REQUIRE(sol.relevant_rate == 5);
        REQUIRE(sol.nonrelevant_rate == 20);
        for (auto& seg : segments) {
            seg.speedup = seg.relevant ? 5 : 20;
        }

        // level 1 on the 40 relevant frames with S = 5: exact zero at (3, 15)
        // level 2 applies but demotes everything, leaving rates unchanged
        const auto refined =
            refine(segments, profile, sol.relevant_rate, threshold, params);
        std::vector<int> rate_per_frame(80, 0);
        for (const auto& seg : refined) {
            for (int f = seg.start; f <= seg.end; ++f) {
                rate_per_frame[static_cast<std::size_t>(f)] = seg.speedup;
            }
        }
        for (int f = 0; f < 20; ++f) {
            CHECK(rate_per_frame[static_cast<std::size_t>(f)] == 3);
        }
        for (int f = 20; f < 40; ++f) {
            CHECK(rate_per_frame[static_cast<std::size_t>(f)] == 15);
        }
        for (int f = 40; f < 80; ++f) {
            CHECK(rate_per_frame[static_cast<std::size_t>(f)] == 20);
        }
        // the 0.9 tier sits strictly below the level-0 relevant rate
        CHECK(3 < sol.relevant_rate);
    }

    SUBCASE("equal relevant scores keep the level-0 rate") {
        InterestProfile profile;
        profile.scores.assign(40, 0.1);
        for (int f = 0; f < 20; ++f) {
            profile.scores[static_cast<std::size_t>(f)] = 0.9;
        }
        auto segments = partition(profile, params.window);
        const double threshold = classify(segments, params.strategy);
        const auto sol = solve_speedups(20, 20, 8, 0.0, 0.0, 100);
        for (auto& seg : segments) {
            seg.speedup = seg.relevant ? sol.relevant_rate
                                       : sol.nonrelevant_rate;
        }
        const auto refined =
            refine(segments, profile, sol.relevant_rate, threshold, params);
        for (const auto& seg : refined) {
            if (seg.start < 20) {
                CHECK(seg.speedup == sol.relevant_rate);
            } else {
                CHECK(seg.speedup == sol.nonrelevant_rate);
            }
        }
    }

    SUBCASE("max_levels = 0 is the identity") {
        const auto profile = two_tier_profile();
        auto segments = partition(profile, params.window);
        const double threshold = classify(segments, params.strategy);
        for (auto& seg : segments) {
            seg.speedup = seg.relevant ? 5 : 20;
        }
        PlanParams frozen = params;
        frozen.refinement.max_levels = 0;
        const auto refined = refine(segments, profile, 5, threshold, frozen);
        REQUIRE(refined.size() == segments.size());
        for (std::size_t i = 0; i < refined.size(); ++i) {
            CHECK(refined[i].start == segments[i].start);
            CHECK(refined[i].end == segments[i].end);
            CHECK(refined[i].speedup == segments[i].speedup);
        }
    }

    SUBCASE("relevant pieces never exceed the level-0 relevant rate") {
        Rng rng(123);
        for (int round = 0; round < 100; ++round) {
            const std::size_t frames = 40 + rng.next_index(160);
            const auto profile = testutil::random_profile(frames, rng);
            PlanParams p;
            p.target_speedup = 2 + static_cast<int>(rng.next_index(10));
            p.window = 5 + static_cast<int>(rng.next_index(20));
            p.lambda1 = rng.next_double();
            p.lambda2 = rng.next_double();
            p.max_rate = 100;
            const auto outcome = plan_segments(profile, p);
            long long covered = 0;
            for (const auto& seg : outcome.segments) {
                covered += seg.length();
                CHECK(seg.speedup >= 1);
                if (seg.relevant) {
                    CHECK(seg.speedup <= outcome.solution.relevant_rate);
                }
            }
            CHECK(covered == static_cast<long long>(frames));
        }
    }
}
