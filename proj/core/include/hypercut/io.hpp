/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_IO_HPP
#define HYPERCUT_IO_HPP

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "hypercut/annotations.hpp"
#include "hypercut/features.hpp"
#include "hypercut/frame_score.hpp"
#include "hypercut/metrics.hpp"
#include "hypercut/planner.hpp"
#include "hypercut/selector.hpp"
#include "hypercut/user_profile.hpp"

namespace hypercut {

// --- plain text formats ----------------------------------------------------

// one post per line
PostCorpus load_posts(const std::string& path);

// `token integer` per line
SentimentLexicon load_lexicon(const std::string& path);

// one token per line
std::set<std::string> load_token_set(const std::string& path);

// `frame score` per line, 6 decimal places
void save_profile(const InterestProfile& profile, const std::string& path);
InterestProfile load_profile(const std::string& path);

// `t start end mean_score relevant speedup` per line
void save_segments(const std::vector<Segment>& segments,
                   const std::string& path);
std::vector<Segment> load_segments(const std::string& path);

// one relevant frame index per line
GroundTruth load_truth(const std::string& path);
void save_truth(const GroundTruth& truth, const std::string& path);

// sparse user profile: header `K`, then `topic weight` lines
void save_user_bot(const BagOfTopics& bot, const std::string& path);
BagOfTopics load_user_bot(const std::string& path);

// one selected frame index per line (for piping to frame extractors)
void save_plan_indices(const SelectionPlan& plan, const std::string& path);

// --- line-delimited JSON records --------------------------------------------

// {"frame":N,"regions":[{"caption":..,"confidence":..,"bbox":[x,y,w,h],
//  "attention":..}],"saliency":{"width":..,"height":..,"scale":..,
//  "values":[..]}} with optional "fps" on the first record
VideoAnnotations load_annotations(const std::string& path);
void save_annotations(const VideoAnnotations& video, const std::string& path);

// {"frame":N,"foe_dist":..,"flow_mag_next":..,"hist":[[..],..],
//  "center_disp_next":number|null,"half_diag":..}; the motion fields are
// omitted on the last frame, half_diag is read from the first record
TransitionFeatures load_features(const std::string& path);
void save_features(const TransitionFeatures& features, const std::string& path);

// --- structured plan and report ---------------------------------------------

struct PlanFile {
    SelectionPlan plan;
    std::vector<Segment> segments;
    int target_speedup = 0;
};

void save_plan(const SelectionPlan& plan, const std::vector<Segment>& segments,
               int target_speedup, const std::string& path);
PlanFile load_plan(const std::string& path);

void save_metrics(const MetricsReport& report, const std::string& path);
void print_metrics(const MetricsReport& report, std::ostream& out);

} // namespace hypercut

#endif // HYPERCUT_IO_HPP
