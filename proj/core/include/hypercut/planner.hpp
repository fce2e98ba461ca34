/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_PLANNER_HPP
#define HYPERCUT_PLANNER_HPP

#include <vector>

#include "hypercut/frame_score.hpp"

namespace hypercut {

// One video segment [start, end], both inclusive, in global frame indices.
struct Segment {
    int start = 0;
    int end = 0;
    double mean_score = 0.0;
    bool relevant = false;
    int speedup = 1;

    int length() const { return end - start + 1; }
};

struct ThresholdStrategy {
    enum class Kind { Mean, Percentile, Otsu };
    Kind kind = Kind::Mean;
    double percentile = 80.0; // used by Kind::Percentile
};

struct SpeedupSolution {
    int relevant_rate = 1;    // S_s*
    int nonrelevant_rate = 1; // S_ns*
    double objective = 0.0;
};

struct RefinementConfig {
    double gamma = 0.2; // required threshold growth factor
    int max_levels = 5;
};

// Everything the segment planner needs.
struct PlanParams {
    int target_speedup = 10;
    int window = 120; // frames per segment before the remainder rule
    ThresholdStrategy strategy{};
    // the spread penalty must stay well below the minimality reward or the
    // uniform pair (S, S) dominates the allocation whenever relevant content
    // is scarce
    double lambda1 = 0.01;
    double lambda2 = 0.1;
    int max_rate = 100; // upper bound for the non-relevant rate
    RefinementConfig refinement{};
};

// Fixed windows tiling frames 0..F-1; a final remainder shorter than half a
// window merges into the previous segment. Mean scores are filled in.
std::vector<Segment> partition(const InterestProfile& profile, int window);

// Marks segments with mean_score strictly above the strategy threshold as
// relevant and returns the threshold used.
double classify(std::vector<Segment>& segments,
                const ThresholdStrategy& strategy);

// Minimizes
//   | (L_s+L_ns)/S - (L_s/S_s + L_ns/S_ns) | + lambda1*|S_ns - S_s|
//   + lambda2*|S_s|
// over integer pairs 1 <= S_s <= S <= S_ns <= max_rate. Ties prefer the
// smaller S_s, then the S_ns closer to S, then the smaller S_ns.
// When L_s = 0 there is no relevant content to favor and the solution
// degenerates to the uniform pair (S, S).
SpeedupSolution solve_speedups(long long relevant_length,
                               long long nonrelevant_length, int target,
                               double lambda1, double lambda2, int max_rate);

// Hierarchical speed-up refinement: re-partitions the concatenation of the
// relevant segments with target S_s*, reclassifies, and re-solves rates.
// Continues only while the new threshold reaches (1+gamma) times the previous
// one, up to max_levels. Returns the refined segment list; relevant pieces
// never end up with a rate above their parent level's relevant rate.
std::vector<Segment> refine(const std::vector<Segment>& segments,
                            const InterestProfile& profile, int relevant_rate,
                            double initial_threshold, const PlanParams& params);

struct PlanOutcome {
    std::vector<Segment> segments;
    double threshold = 0.0;
    SpeedupSolution solution;
};

// partition -> classify -> solve -> assign rates -> refine
PlanOutcome plan_segments(const InterestProfile& profile,
                          const PlanParams& params);

} // namespace hypercut

#endif // HYPERCUT_PLANNER_HPP
