/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypercut/errors.hpp"

namespace hypercut {

namespace {

double mean_over(const InterestProfile& profile, int start, int end) {
    double sum = 0.0;
    for (int f = start; f <= end; ++f) {
        sum += profile.scores[static_cast<std::size_t>(f)];
    }
    return sum / static_cast<double>(end - start + 1);
}

double mean_threshold(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

// nearest-rank percentile of the segment means
double percentile_threshold(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    const double clamped = std::clamp(p, 0.0, 100.0);
    std::size_t rank = static_cast<std::size_t>(
        std::ceil(clamped / 100.0 * static_cast<double>(values.size())));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

// Otsu's threshold over the candidate splits of the sorted means; the
// classes are {v <= t} and {v > t}.
double otsu_threshold(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    double prefix = 0.0;
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    double best_t = values.back();
    double best_var = -1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        prefix += values[i];
        if (values[i] == values[i + 1]) {
            continue; // same split as the next candidate
        }
        const double w0 = static_cast<double>(i + 1) / static_cast<double>(n);
        const double w1 = 1.0 - w0;
        const double mu0 = prefix / static_cast<double>(i + 1);
        const double mu1 = (total - prefix) / static_cast<double>(n - i - 1);
        const double var = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (var > best_var) {
            best_var = var;
            best_t = values[i];
        }
    }
    return best_t;
}

} // namespace

std::vector<Segment> partition(const InterestProfile& profile, int window) {
    const long long frames = static_cast<long long>(profile.frame_count());
    if (frames == 0) {
        throw EmptyVideo("cannot partition an empty profile");
    }
    if (window < 1) {
        throw Error("segment window must be at least 1");
    }

    std::vector<Segment> segments;
    long long start = 0;
    while (start < frames) {
        long long end = std::min(start + window - 1, frames - 1);
        const long long remaining = frames - (end + 1);
        // a trailing remainder shorter than window/2 folds into this segment;
        // one of exactly window/2 stands alone
        if (remaining > 0 && 2 * remaining < window) {
            end = frames - 1;
        }
        Segment seg;
        seg.start = static_cast<int>(start);
        seg.end = static_cast<int>(end);
        segments.push_back(seg);
        start = end + 1;
    }
    for (Segment& seg : segments) {
        seg.mean_score = mean_over(profile, seg.start, seg.end);
    }
    return segments;
}

double classify(std::vector<Segment>& segments,
                const ThresholdStrategy& strategy) {
    if (segments.empty()) {
        throw EmptyVideo("cannot classify an empty segment list");
    }
    std::vector<double> means;
    means.reserve(segments.size());
    for (const Segment& seg : segments) {
        means.push_back(seg.mean_score);
    }
    double threshold = 0.0;
    switch (strategy.kind) {
    case ThresholdStrategy::Kind::Mean:
        threshold = mean_threshold(means);
        break;
    case ThresholdStrategy::Kind::Percentile:
        threshold = percentile_threshold(means, strategy.percentile);
        break;
    case ThresholdStrategy::Kind::Otsu:
        threshold = otsu_threshold(means);
        break;
    }
    for (Segment& seg : segments) {
        seg.relevant = seg.mean_score > threshold;
    }
    return threshold;
}

SpeedupSolution solve_speedups(long long relevant_length,
                               long long nonrelevant_length, int target,
                               double lambda1, double lambda2, int max_rate) {
    const long long total = relevant_length + nonrelevant_length;
    if (total <= 0) {
        throw EmptyVideo("speed-up allocation needs a non-empty video");
    }
    if (target < 1) {
        throw Error("target speed-up must be at least 1");
    }
    if (max_rate < target) {
        throw InfeasibleBounds("max rate " + std::to_string(max_rate) +
                               " is below the target speed-up " +
                               std::to_string(target));
    }

    const double desired = static_cast<double>(total) / target;
    const auto objective = [&](int s_rel, int s_non) {
        const double achieved =
            static_cast<double>(relevant_length) / s_rel +
            static_cast<double>(nonrelevant_length) / s_non;
        return std::abs(desired - achieved) +
               lambda1 * std::abs(static_cast<double>(s_non - s_rel)) +
               lambda2 * static_cast<double>(s_rel);
    };

    if (relevant_length == 0) {
        // no relevant content: uniform rate, S_s is meaningless
        SpeedupSolution sol;
        sol.relevant_rate = target;
        sol.nonrelevant_rate = target;
        sol.objective = objective(target, target);
        return sol;
    }

    SpeedupSolution best;
    double best_obj = std::numeric_limits<double>::infinity();
    for (int s_rel = 1; s_rel <= target; ++s_rel) {
        for (int s_non = target; s_non <= max_rate; ++s_non) {
            const double obj = objective(s_rel, s_non);
            bool better = obj < best_obj;
            if (obj == best_obj) {
                const int cand_gap = std::abs(s_non - target);
                const int best_gap = std::abs(best.nonrelevant_rate - target);
                better = s_rel < best.relevant_rate ||
                         (s_rel == best.relevant_rate &&
                          (cand_gap < best_gap ||
                           (cand_gap == best_gap &&
                            s_non < best.nonrelevant_rate)));
            }
            if (better) {
                best_obj = obj;
                best.relevant_rate = s_rel;
                best.nonrelevant_rate = s_non;
            }
        }
    }
    best.objective = best_obj;
    return best;
}

namespace {

struct Range {
    int start;
    int end;
};

// profile restricted to the given ranges, with a map back to global indices
struct ConcatView {
    InterestProfile profile;
    std::vector<int> to_global;
};

ConcatView concatenate(const InterestProfile& profile,
                       const std::vector<Range>& ranges) {
    ConcatView view;
    for (const Range& r : ranges) {
        for (int f = r.start; f <= r.end; ++f) {
            view.profile.scores.push_back(
                profile.scores[static_cast<std::size_t>(f)]);
            view.to_global.push_back(f);
        }
    }
    return view;
}

// maximal runs of consecutive global indices within [first, last] of the map
std::vector<Range> to_global_ranges(const std::vector<int>& to_global,
                                    int first, int last) {
    std::vector<Range> out;
    int run_start = to_global[static_cast<std::size_t>(first)];
    int prev = run_start;
    for (int i = first + 1; i <= last; ++i) {
        const int g = to_global[static_cast<std::size_t>(i)];
        if (g != prev + 1) {
            out.push_back({run_start, prev});
            run_start = g;
        }
        prev = g;
    }
    out.push_back({run_start, prev});
    return out;
}

} // namespace

std::vector<Segment> refine(const std::vector<Segment>& segments,
                            const InterestProfile& profile, int relevant_rate,
                            double initial_threshold,
                            const PlanParams& params) {
    // per-frame state, starting from the level-0 assignment
    std::vector<int> rate(profile.frame_count(), 1);
    std::vector<char> relevant(profile.frame_count(), 0);
    for (const Segment& seg : segments) {
        for (int f = seg.start; f <= seg.end; ++f) {
            rate[static_cast<std::size_t>(f)] = seg.speedup;
            relevant[static_cast<std::size_t>(f)] = seg.relevant ? 1 : 0;
        }
    }

    std::vector<Range> active;
    for (const Segment& seg : segments) {
        if (seg.relevant) {
            active.push_back({seg.start, seg.end});
        }
    }

    double previous_threshold = initial_threshold;
    int current_target = relevant_rate;
    for (int level = 0; level < params.refinement.max_levels; ++level) {
        if (active.empty()) {
            break;
        }
        const ConcatView view = concatenate(profile, active);
        std::vector<Segment> subs = partition(view.profile, params.window);
        const double threshold = classify(subs, params.strategy);
        if (threshold < (1.0 + params.refinement.gamma) * previous_threshold) {
            break;
        }
        long long rel_len = 0;
        for (const Segment& sub : subs) {
            if (sub.relevant) {
                rel_len += sub.length();
            }
        }
        const long long total = static_cast<long long>(view.to_global.size());
        const SpeedupSolution sol =
            solve_speedups(rel_len, total - rel_len, current_target,
                           params.lambda1, params.lambda2, params.max_rate);

        std::vector<Range> next_active;
        for (const Segment& sub : subs) {
            const int sub_rate =
                sub.relevant ? sol.relevant_rate : sol.nonrelevant_rate;
            for (const Range& r :
                 to_global_ranges(view.to_global, sub.start, sub.end)) {
                for (int f = r.start; f <= r.end; ++f) {
                    rate[static_cast<std::size_t>(f)] = sub_rate;
                    relevant[static_cast<std::size_t>(f)] = sub.relevant ? 1 : 0;
                }
                if (sub.relevant) {
                    next_active.push_back(r);
                }
            }
        }
        active = std::move(next_active);
        previous_threshold = threshold;
        current_target = sol.relevant_rate;
    }

    // rebuild the segment list: untouched segments stay whole, refined ones
    // split into maximal runs of constant (rate, relevance)
    std::vector<Segment> refined;
    for (const Segment& seg : segments) {
        if (!seg.relevant) {
            refined.push_back(seg);
            continue;
        }
        int run_start = seg.start;
        for (int f = seg.start; f <= seg.end; ++f) {
            const auto same_run = [&](int a, int b) {
                return rate[static_cast<std::size_t>(a)] ==
                           rate[static_cast<std::size_t>(b)] &&
                       relevant[static_cast<std::size_t>(a)] ==
                           relevant[static_cast<std::size_t>(b)];
            };
            if (f != seg.end && same_run(f + 1, run_start)) {
                continue;
            }
            Segment piece;
            piece.start = run_start;
            piece.end = f;
            piece.relevant = relevant[static_cast<std::size_t>(run_start)] != 0;
            piece.speedup = rate[static_cast<std::size_t>(run_start)];
            piece.mean_score = mean_over(profile, piece.start, piece.end);
            refined.push_back(piece);
            run_start = f + 1;
        }
    }
    std::sort(refined.begin(), refined.end(),
              [](const Segment& a, const Segment& b) { return a.start < b.start; });
    return refined;
}

PlanOutcome plan_segments(const InterestProfile& profile,
                          const PlanParams& params) {
    PlanOutcome outcome;
    outcome.segments = partition(profile, params.window);
    outcome.threshold = classify(outcome.segments, params.strategy);

    long long relevant_length = 0;
    long long total = 0;
    for (const Segment& seg : outcome.segments) {
        total += seg.length();
        if (seg.relevant) {
            relevant_length += seg.length();
        }
    }
    outcome.solution =
        solve_speedups(relevant_length, total - relevant_length,
                       params.target_speedup, params.lambda1, params.lambda2,
                       params.max_rate);
    for (Segment& seg : outcome.segments) {
        seg.speedup = seg.relevant ? outcome.solution.relevant_rate
                                   : outcome.solution.nonrelevant_rate;
    }
    if (relevant_length > 0) {
        outcome.segments =
            refine(outcome.segments, profile, outcome.solution.relevant_rate,
                   outcome.threshold, params);
    }
    return outcome;
}

} // namespace hypercut
