/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypercut/errors.hpp"

namespace hypercut {

double relevance_cost(double score_g, double score_h, double epsilon) {
    return 1.0 / (score_g + score_h + epsilon);
}

double instability_cost(const TransitionFeatures& features, int g, int h) {
    const int frames = static_cast<int>(features.frame_count());
    if (g < 0 || h < 0 || g >= frames || h >= frames) {
        throw FrameOutOfRange("instability cost indices out of range");
    }
    return 0.5 * (features.foe_dist[static_cast<std::size_t>(g)] +
                  features.foe_dist[static_cast<std::size_t>(h)]);
}

namespace {

double accumulated_flow_raw(const TransitionFeatures& features, int g, int h) {
    double sum = 0.0;
    for (int f = g; f < h; ++f) {
        sum += features.flow_mag[static_cast<std::size_t>(f)];
    }
    return sum;
}

double motion_baseline_raw(const TransitionFeatures& features, int rate) {
    const int frames = static_cast<int>(features.frame_count());
    const int last_start = frames - 1 - rate;
    if (last_start < 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (int f = 0; f <= last_start; ++f) {
        sum += accumulated_flow_raw(features, f, f + rate);
    }
    return sum / static_cast<double>(last_start + 1);
}

std::vector<double> normalized_cdf(const std::vector<double>& histogram) {
    double total = 0.0;
    for (double v : histogram) {
        total += v;
    }
    std::vector<double> cdf(histogram.size(), 0.0);
    double acc = 0.0;
    for (std::size_t b = 0; b < histogram.size(); ++b) {
        acc += total > 0.0 ? histogram[b] / total : 0.0;
        cdf[b] = acc;
    }
    return cdf;
}

double emd_1d(const std::vector<double>& cdf_g, const std::vector<double>& cdf_h) {
    double dist = 0.0;
    for (std::size_t b = 0; b < cdf_g.size(); ++b) {
        dist += std::abs(cdf_g[b] - cdf_h[b]);
    }
    return dist;
}

} // namespace

double motion_cost(const TransitionFeatures& features, int g, int h, int rate) {
    return std::abs(accumulated_flow_raw(features, g, h) -
                    motion_baseline_raw(features, rate));
}

double appearance_cost(const TransitionFeatures& features, int g, int h) {
    const auto& hg = features.histograms[static_cast<std::size_t>(g)];
    const auto& hh = features.histograms[static_cast<std::size_t>(h)];
    if (hg.size() != hh.size()) {
        throw HistogramMismatch("channel counts differ between frames " +
                                std::to_string(g) + " and " + std::to_string(h));
    }
    if (hg.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t ch = 0; ch < hg.size(); ++ch) {
        if (hg[ch].size() != hh[ch].size()) {
            throw HistogramMismatch("bin counts differ between frames " +
                                    std::to_string(g) + " and " +
                                    std::to_string(h));
        }
        sum += emd_1d(normalized_cdf(hg[ch]), normalized_cdf(hh[ch]));
    }
    return sum / static_cast<double>(hg.size());
}

TransitionCostModel::TransitionCostModel(const InterestProfile& profile,
                                         const TransitionFeatures& features,
                                         const CostWeights& weights)
    : profile_(&profile), features_(&features), weights_(weights) {
    const std::size_t frames = features.frame_count();
    if (profile.frame_count() != frames) {
        throw Error("profile covers " + std::to_string(profile.frame_count()) +
                    " frames but features cover " + std::to_string(frames));
    }
    flow_prefix_.assign(frames + 1, 0.0);
    for (std::size_t f = 0; f + 1 < frames; ++f) {
        flow_prefix_[f + 1] = flow_prefix_[f] + features.flow_mag[f];
    }
    if (frames > 0) {
        flow_prefix_[frames] = flow_prefix_[frames - 1];
    }
    cdf_.reserve(frames);
    for (std::size_t f = 0; f < frames; ++f) {
        std::vector<std::vector<double>> channels;
        channels.reserve(features.histograms[f].size());
        for (const auto& histogram : features.histograms[f]) {
            channels.push_back(normalized_cdf(histogram));
        }
        cdf_.push_back(std::move(channels));
    }
}

void TransitionCostModel::check_pair(int g, int h) const {
    if (g < 0 || h <= g || h >= frame_count()) {
        throw FrameOutOfRange("bad transition pair (" + std::to_string(g) +
                              ", " + std::to_string(h) + ")");
    }
}

double TransitionCostModel::relevance(int g, int h) const {
    check_pair(g, h);
    return relevance_cost(profile_->scores[static_cast<std::size_t>(g)],
                          profile_->scores[static_cast<std::size_t>(h)],
                          weights_.epsilon);
}

double TransitionCostModel::instability(int g, int h) const {
    return instability_cost(*features_, g, h);
}

double TransitionCostModel::motion(int g, int h, int rate) const {
    check_pair(g, h);
    return std::abs(accumulated_flow(g, h) - motion_baseline(rate));
}

double TransitionCostModel::appearance(int g, int h) const {
    check_pair(g, h);
    const auto& cg = cdf_[static_cast<std::size_t>(g)];
    const auto& ch = cdf_[static_cast<std::size_t>(h)];
    if (cg.size() != ch.size()) {
        throw HistogramMismatch("channel counts differ between frames " +
                                std::to_string(g) + " and " + std::to_string(h));
    }
    if (cg.empty()) {
        return 0.0;
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < cg.size(); ++c) {
        if (cg[c].size() != ch[c].size()) {
            throw HistogramMismatch("bin counts differ between frames " +
                                    std::to_string(g) + " and " +
                                    std::to_string(h));
        }
        sum += emd_1d(cg[c], ch[c]);
    }
    return sum / static_cast<double>(cg.size());
}

double TransitionCostModel::transition(int g, int h, int rate) const {
    return weights_.lambda_s * relevance(g, h) +
           weights_.lambda_i * instability(g, h) +
           weights_.lambda_m * motion(g, h, rate) +
           weights_.lambda_a * appearance(g, h);
}

double TransitionCostModel::motion_baseline(int rate) const {
    const auto it = baselines_.find(rate);
    if (it != baselines_.end()) {
        return it->second;
    }
    const int frames = frame_count();
    const int last_start = frames - 1 - rate;
    double baseline = 0.0;
    if (last_start >= 0) {
        double sum = 0.0;
        for (int f = 0; f <= last_start; ++f) {
            sum += accumulated_flow(f, f + rate);
        }
        baseline = sum / static_cast<double>(last_start + 1);
    }
    baselines_.emplace(rate, baseline);
    return baseline;
}

DagPath shortest_path_dag(int node_count, int max_skip,
                          const std::function<double(int, int)>& edge_weight) {
    DagPath path;
    if (node_count <= 0) {
        return path;
    }
    if (node_count == 1) {
        path.nodes = {0};
        return path;
    }
    const int sink = node_count - 1;
    // cost-to-sink, filled backwards so sums associate right-to-left
    std::vector<double> to_sink(static_cast<std::size_t>(node_count),
                                std::numeric_limits<double>::infinity());
    to_sink[static_cast<std::size_t>(sink)] = 0.0;
    for (int v = sink - 1; v >= 0; --v) {
        const int reach = std::min(sink, v + max_skip);
        double best = std::numeric_limits<double>::infinity();
        for (int u = v + 1; u <= reach; ++u) {
            const double cand =
                edge_weight(v, u) + to_sink[static_cast<std::size_t>(u)];
            if (cand < best) {
                best = cand;
            }
        }
        to_sink[static_cast<std::size_t>(v)] = best;
    }
    // greedy forward walk; taking the smallest optimal successor at every
    // step yields the lexicographically smallest minimum-cost sequence
    path.cost = to_sink[0];
    int v = 0;
    path.nodes.push_back(v);
    while (v != sink) {
        const int reach = std::min(sink, v + max_skip);
        int next = -1;
        for (int u = v + 1; u <= reach; ++u) {
            if (edge_weight(v, u) + to_sink[static_cast<std::size_t>(u)] ==
                to_sink[static_cast<std::size_t>(v)]) {
                next = u;
                break;
            }
        }
        if (next < 0) {
            // cannot happen: the minimum was realized by some successor
            throw Error("shortest-path walk lost the optimal successor");
        }
        path.nodes.push_back(next);
        v = next;
    }
    return path;
}

std::vector<int> select_frames(const Segment& segment,
                               const TransitionCostModel& model, int tau) {
    if (tau < 1) {
        throw Error("tau must be at least 1");
    }
    const int length = segment.length();
    std::vector<int> selected;
    if (length <= 2) {
        for (int f = segment.start; f <= segment.end; ++f) {
            selected.push_back(f);
        }
        return selected;
    }
    const int rate = std::max(segment.speedup, 1);
    const auto weight = [&](int a, int b) {
        const int g = segment.start + a;
        const int h = segment.start + b;
        const int gap = h - g;
        const double factor = static_cast<double>((gap + rate - 1) / rate);
        return factor * model.transition(g, h, rate);
    };
    const DagPath path = shortest_path_dag(length, tau, weight);
    selected.reserve(path.nodes.size());
    for (int node : path.nodes) {
        selected.push_back(segment.start + node);
    }
    return selected;
}

SelectionPlan compose(const std::vector<std::vector<int>>& per_segment,
                      std::size_t frame_count) {
    SelectionPlan plan;
    plan.per_segment = per_segment;
    plan.frame_count = frame_count;
    for (const auto& indices : per_segment) {
        for (int f : indices) {
            if (!plan.selected.empty() && f <= plan.selected.back()) {
                throw PlanOverlap("segment selections overlap at frame " +
                                  std::to_string(f));
            }
            plan.selected.push_back(f);
        }
    }
    if (!plan.selected.empty()) {
        plan.achieved_rate = static_cast<double>(frame_count) /
                             static_cast<double>(plan.selected.size());
    }
    return plan;
}

} // namespace hypercut
