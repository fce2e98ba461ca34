/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_SELECTOR_HPP
#define HYPERCUT_SELECTOR_HPP

#include <functional>
#include <map>
#include <vector>

#include "hypercut/features.hpp"
#include "hypercut/frame_score.hpp"
#include "hypercut/planner.hpp"

namespace hypercut {

struct CostWeights {
    double lambda_s = 1.0; // relevance drop
    double lambda_i = 1.0; // instability
    double lambda_m = 1.0; // speed of motion
    double lambda_a = 1.0; // appearance
    double epsilon = 0.01; // guards the relevance cost against 0/0
};

// W_s = 1 / (I_g + I_h + epsilon)
double relevance_cost(double score_g, double score_h, double epsilon);

// W_i = mean of the two focus-of-expansion distances
double instability_cost(const TransitionFeatures& features, int g, int h);

// W_m = |accumulated flow over [g,h) - baseline|, with the baseline the mean
// accumulated flow over all pairs exactly `rate` frames apart
double motion_cost(const TransitionFeatures& features, int g, int h, int rate);

// W_a = per-channel 1-D earth mover's distance between the normalized color
// histograms, averaged over channels
double appearance_cost(const TransitionFeatures& features, int g, int h);

// Caches prefix sums, normalized histogram CDFs, and per-rate motion
// baselines over one (profile, features) pair.
class TransitionCostModel {
public:
    TransitionCostModel(const InterestProfile& profile,
                        const TransitionFeatures& features,
                        const CostWeights& weights);

    double relevance(int g, int h) const;
    double instability(int g, int h) const;
    double motion(int g, int h, int rate) const;
    double appearance(int g, int h) const;

    // E(v_g, v_h): weighted sum of the four terms
    double transition(int g, int h, int rate) const;

    // mean accumulated flow across all pairs `rate` frames apart (0 when the
    // video is shorter than the rate)
    double motion_baseline(int rate) const;

    double accumulated_flow(int g, int h) const {
        return flow_prefix_[static_cast<std::size_t>(h)] -
               flow_prefix_[static_cast<std::size_t>(g)];
    }

    const CostWeights& weights() const { return weights_; }
    int frame_count() const { return static_cast<int>(profile_->frame_count()); }

private:
    const InterestProfile* profile_;
    const TransitionFeatures* features_;
    CostWeights weights_;
    std::vector<double> flow_prefix_;
    std::vector<std::vector<std::vector<double>>> cdf_; // frame x channel x bin
    mutable std::map<int, double> baselines_;

    void check_pair(int g, int h) const;
};

// Minimum-cost source-to-sink walk over a DAG whose nodes are 0..n-1 and
// whose edges jump forward by at most max_skip. Among equal-cost walks the
// lexicographically smallest index sequence wins. Costs accumulate from the
// sink backwards, i.e. cost(path) = w(p0,p1) + (w(p1,p2) + (...)).
struct DagPath {
    std::vector<int> nodes;
    double cost = 0.0;
};
DagPath shortest_path_dag(int node_count, int max_skip,
                          const std::function<double(int, int)>& edge_weight);

// Frames kept from one segment: shortest path between the segment endpoints
// over edges up to tau frames apart, each edge scaled by
// ceil(gap / segment_rate) to discourage skips beyond the planned rate.
// Segments of one or two frames keep everything.
std::vector<int> select_frames(const Segment& segment,
                               const TransitionCostModel& model, int tau);

struct SelectionPlan {
    std::vector<std::vector<int>> per_segment; // global frame indices
    std::vector<int> selected;                 // flattened, strictly increasing
    std::size_t frame_count = 0;
    double achieved_rate = 0.0; // F / |selected|
};

// Concatenates per-segment selections and computes the achieved rate.
SelectionPlan compose(const std::vector<std::vector<int>>& per_segment,
                      std::size_t frame_count);

} // namespace hypercut

#endif // HYPERCUT_SELECTOR_HPP
