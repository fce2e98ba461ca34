/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#include "hypercut/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypercut/errors.hpp"
#include "hypercut/text.hpp"

namespace hypercut {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open for writing: " + path);
    }
    return out;
}

std::string locus(const std::string& path, long line) {
    return path + ": record " + std::to_string(line);
}

json parse_record(const std::string& path, long line_no,
                  const std::string& line) {
    try {
        return json::parse(line);
    } catch (const json::exception& e) {
        throw ParseError(locus(path, line_no) + ": " + e.what(), line_no);
    }
}

} // namespace

PostCorpus load_posts(const std::string& path) {
    std::ifstream in = open_in(path);
    PostCorpus corpus;
    corpus.source_id = path;
    std::string line;
    while (std::getline(in, line)) {
        corpus.posts.push_back(line);
    }
    return corpus;
}

SentimentLexicon load_lexicon(const std::string& path) {
    std::ifstream in = open_in(path);
    SentimentLexicon lexicon;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string token;
        if (!(ss >> token)) {
            continue;
        }
        int valence = 0;
        if (!(ss >> valence)) {
            throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": expected `token integer`",
                             line_no);
        }
        lexicon.scores[to_lower(token)] = valence;
    }
    return lexicon;
}

std::set<std::string> load_token_set(const std::string& path) {
    std::ifstream in = open_in(path);
    std::set<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string token;
        if (ss >> token) {
            tokens.insert(to_lower(token));
        }
    }
    return tokens;
}

void save_profile(const InterestProfile& profile, const std::string& path) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (out == nullptr) {
        throw ParseError("cannot open for writing: " + path);
    }
    for (std::size_t f = 0; f < profile.frame_count(); ++f) {
        std::fprintf(out, "%zu %.6f\n", f, profile.scores[f]);
    }
    std::fclose(out);
}

InterestProfile load_profile(const std::string& path) {
    std::ifstream in = open_in(path);
    InterestProfile profile;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        long frame = 0;
        double score = 0.0;
        if (!(ss >> frame >> score)) {
            throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": expected `frame score`",
                             line_no);
        }
        if (frame != line_no - 1) {
            throw ParseError(path + ": line " + std::to_string(line_no) +
                                 ": frames must be contiguous from 0",
                             line_no);
        }
        profile.scores.push_back(score);
    }
    return profile;
}

void save_segments(const std::vector<Segment>& segments,
                   const std::string& path) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (out == nullptr) {
        throw ParseError("cannot open for writing: " + path);
    }
    for (std::size_t t = 0; t < segments.size(); ++t) {
        const Segment& seg = segments[t];
        std::fprintf(out, "%zu %d %d %.6f %d %d\n", t, seg.start, seg.end,
                     seg.mean_score, seg.relevant ? 1 : 0, seg.speedup);
    }
    std::fclose(out);
}

std::vector<Segment> load_segments(const std::string& path) {
    std::ifstream in = open_in(path);
    std::vector<Segment> segments;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        long t = 0;
        Segment seg;
        int relevant = 0;
        if (!(ss >> t >> seg.start >> seg.end >> seg.mean_score >> relevant >>
              seg.speedup)) {
            throw ParseError(
                path + ": line " + std::to_string(line_no) +
                    ": expected `t start end mean_score relevant speedup`",
                line_no);
        }
        seg.relevant = relevant != 0;
        segments.push_back(seg);
    }
    return segments;
}

GroundTruth load_truth(const std::string& path) {
    std::ifstream in = open_in(path);
    GroundTruth truth;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        int frame = 0;
        if (ss >> frame) {
            truth.relevant.insert(frame);
        }
    }
    return truth;
}

void save_truth(const GroundTruth& truth, const std::string& path) {
    std::ofstream out = open_out(path);
    for (int f : truth.relevant) {
        out << f << "\n";
    }
}

void save_user_bot(const BagOfTopics& bot, const std::string& path) {
    std::FILE* out = std::fopen(path.c_str(), "w");
    if (out == nullptr) {
        throw ParseError("cannot open for writing: " + path);
    }
    std::fprintf(out, "%zu\n", bot.topic_count());
    for (std::size_t k = 0; k < bot.topic_count(); ++k) {
        if (bot.weights[k] != 0.0) {
            std::fprintf(out, "%zu %.17g\n", k, bot.weights[k]);
        }
    }
    std::fclose(out);
}

BagOfTopics load_user_bot(const std::string& path) {
    std::ifstream in = open_in(path);
    std::size_t k = 0;
    if (!(in >> k)) {
        throw ParseError(path + ": missing topic count header", 1);
    }
    BagOfTopics bot;
    bot.weights.assign(k, 0.0);
    std::size_t topic = 0;
    double weight = 0.0;
    while (in >> topic >> weight) {
        if (topic >= k) {
            throw ParseError(path + ": topic index " + std::to_string(topic) +
                             " out of range");
        }
        bot.weights[topic] = weight;
    }
    return bot;
}

void save_plan_indices(const SelectionPlan& plan, const std::string& path) {
    std::ofstream out = open_out(path);
    for (int f : plan.selected) {
        out << f << "\n";
    }
}

VideoAnnotations load_annotations(const std::string& path) {
    std::ifstream in = open_in(path);
    VideoAnnotations video;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const json record = parse_record(path, line_no, line);
        FrameAnnotation frame;
        frame.frame_index = record.at("frame").get<int>();
        if (frame.frame_index !=
            static_cast<int>(video.frames.size())) {
            throw ParseError(locus(path, line_no) +
                                 ": frames must be contiguous from 0, got " +
                                 std::to_string(frame.frame_index),
                             line_no);
        }
        if (record.contains("fps")) {
            video.fps = record.at("fps").get<double>();
        }
        for (const json& r : record.value("regions", json::array())) {
            Region region;
            region.caption = r.at("caption").get<std::string>();
            region.confidence = r.at("confidence").get<double>();
            if (region.confidence < 0.0) {
                throw ParseError(locus(path, line_no) +
                                     ": confidence must be non-negative",
                                 line_no);
            }
            const json& box = r.at("bbox");
            region.bbox = {box.at(0).get<int>(), box.at(1).get<int>(),
                           box.at(2).get<int>(), box.at(3).get<int>()};
            if (r.contains("attention") && !r.at("attention").is_null()) {
                region.attention = r.at("attention").get<double>();
                if (*region.attention < 0.0 || *region.attention > 1.0) {
                    throw ParseError(locus(path, line_no) +
                                         ": attention must lie in [0,1]",
                                     line_no);
                }
            }
            frame.regions.push_back(std::move(region));
        }
        if (record.contains("saliency") && !record.at("saliency").is_null()) {
            const json& s = record.at("saliency");
            SaliencyGrid grid;
            grid.width = s.at("width").get<int>();
            grid.height = s.at("height").get<int>();
            grid.scale = s.value("scale", 1.0);
            grid.values = s.at("values").get<std::vector<double>>();
            if (static_cast<std::size_t>(grid.width) *
                    static_cast<std::size_t>(grid.height) !=
                grid.values.size()) {
                throw ParseError(locus(path, line_no) +
                                     ": saliency size does not match dims",
                                 line_no);
            }
            for (double v : grid.values) {
                if (v < 0.0 || v > 1.0) {
                    throw ParseError(locus(path, line_no) +
                                         ": saliency values must lie in [0,1]",
                                     line_no);
                }
            }
            frame.saliency = std::move(grid);
        }
        video.frames.push_back(std::move(frame));
    }
    if (video.frames.empty()) {
        throw EmptyVideo(path + ": no frame records");
    }
    return video;
}

void save_annotations(const VideoAnnotations& video, const std::string& path) {
    std::ofstream out = open_out(path);
    for (std::size_t f = 0; f < video.frame_count(); ++f) {
        const FrameAnnotation& frame = video.frames[f];
        json record;
        record["frame"] = frame.frame_index;
        if (f == 0) {
            record["fps"] = video.fps;
        }
        json regions = json::array();
        for (const Region& r : frame.regions) {
            json jr;
            jr["caption"] = r.caption;
            jr["confidence"] = r.confidence;
            jr["bbox"] = {r.bbox.x, r.bbox.y, r.bbox.width, r.bbox.height};
            if (r.attention) {
                jr["attention"] = *r.attention;
            }
            regions.push_back(std::move(jr));
        }
        record["regions"] = std::move(regions);
        if (frame.saliency) {
            json s;
            s["width"] = frame.saliency->width;
            s["height"] = frame.saliency->height;
            s["scale"] = frame.saliency->scale;
            s["values"] = frame.saliency->values;
            record["saliency"] = std::move(s);
        }
        out << record.dump() << "\n";
    }
}

TransitionFeatures load_features(const std::string& path) {
    std::ifstream in = open_in(path);
    TransitionFeatures features;
    bool have_half_diag = false;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const json record = parse_record(path, line_no, line);
        const int frame = record.at("frame").get<int>();
        if (frame != static_cast<int>(features.foe_dist.size())) {
            throw ParseError(locus(path, line_no) +
                                 ": frames must be contiguous from 0, got " +
                                 std::to_string(frame),
                             line_no);
        }
        features.foe_dist.push_back(record.at("foe_dist").get<double>());
        features.histograms.push_back(
            record.at("hist").get<std::vector<std::vector<double>>>());
        if (record.contains("flow_mag_next") &&
            !record.at("flow_mag_next").is_null()) {
            features.flow_mag.push_back(record.at("flow_mag_next").get<double>());
        }
        if (record.contains("center_disp_next")) {
            if (record.at("center_disp_next").is_null()) {
                features.center_disp.push_back(std::nullopt);
            } else {
                features.center_disp.push_back(
                    record.at("center_disp_next").get<double>());
            }
        }
        if (record.contains("half_diag")) {
            const double hd = record.at("half_diag").get<double>();
            if (have_half_diag && hd != features.half_diag) {
                throw ParseError(locus(path, line_no) +
                                     ": half_diag differs from earlier records",
                                 line_no);
            }
            features.half_diag = hd;
            have_half_diag = true;
        }
    }
    const std::size_t frames = features.foe_dist.size();
    if (frames == 0) {
        throw EmptyVideo(path + ": no feature records");
    }
    if (features.flow_mag.size() != frames - 1) {
        throw ParseError(path + ": expected " + std::to_string(frames - 1) +
                         " flow_mag_next values, got " +
                         std::to_string(features.flow_mag.size()));
    }
    if (features.center_disp.size() != frames - 1) {
        throw ParseError(path + ": expected " + std::to_string(frames - 1) +
                         " center_disp_next values, got " +
                         std::to_string(features.center_disp.size()));
    }
    for (std::size_t f = 1; f < frames; ++f) {
        if (features.histograms[f].size() != features.histograms[0].size()) {
            throw HistogramMismatch(locus(path, static_cast<long>(f + 1)) +
                                    ": channel count differs from frame 0");
        }
        for (std::size_t ch = 0; ch < features.histograms[f].size(); ++ch) {
            if (features.histograms[f][ch].size() !=
                features.histograms[0][ch].size()) {
                throw HistogramMismatch(locus(path, static_cast<long>(f + 1)) +
                                        ": bin count differs from frame 0");
            }
        }
    }
    return features;
}

void save_features(const TransitionFeatures& features,
                   const std::string& path) {
    std::ofstream out = open_out(path);
    for (std::size_t f = 0; f < features.frame_count(); ++f) {
        json record;
        record["frame"] = static_cast<int>(f);
        record["foe_dist"] = features.foe_dist[f];
        record["hist"] = features.histograms[f];
        if (f + 1 < features.frame_count()) {
            record["flow_mag_next"] = features.flow_mag[f];
            if (features.center_disp[f]) {
                record["center_disp_next"] = *features.center_disp[f];
            } else {
                record["center_disp_next"] = nullptr;
            }
        }
        if (f == 0) {
            record["half_diag"] = features.half_diag;
        }
        out << record.dump() << "\n";
    }
}

void save_plan(const SelectionPlan& plan, const std::vector<Segment>& segments,
               int target_speedup, const std::string& path) {
    json root;
    root["frames"] = plan.frame_count;
    root["target_speedup"] = target_speedup;
    root["achieved_speedup"] = plan.achieved_rate;
    json segs = json::array();
    for (std::size_t t = 0; t < segments.size(); ++t) {
        const Segment& seg = segments[t];
        json js;
        js["index"] = t;
        js["start"] = seg.start;
        js["end"] = seg.end;
        js["mean_score"] = seg.mean_score;
        js["relevant"] = seg.relevant;
        js["speedup"] = seg.speedup;
        js["selected"] = t < plan.per_segment.size() ? plan.per_segment[t]
                                                     : std::vector<int>{};
        segs.push_back(std::move(js));
    }
    root["segments"] = std::move(segs);
    root["selected"] = plan.selected;
    std::ofstream out = open_out(path);
    out << root.dump(2) << "\n";
}

PlanFile load_plan(const std::string& path) {
    std::ifstream in = open_in(path);
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    PlanFile file;
    try {
        file.target_speedup = root.at("target_speedup").get<int>();
        file.plan.frame_count = root.at("frames").get<std::size_t>();
        file.plan.achieved_rate = root.at("achieved_speedup").get<double>();
        file.plan.selected = root.at("selected").get<std::vector<int>>();
        for (const json& js : root.at("segments")) {
            Segment seg;
            seg.start = js.at("start").get<int>();
            seg.end = js.at("end").get<int>();
            seg.mean_score = js.at("mean_score").get<double>();
            seg.relevant = js.at("relevant").get<bool>();
            seg.speedup = js.at("speedup").get<int>();
            file.segments.push_back(seg);
            file.plan.per_segment.push_back(
                js.at("selected").get<std::vector<int>>());
        }
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return file;
}

void save_metrics(const MetricsReport& report, const std::string& path) {
    json root;
    root["precision"] = report.precision;
    root["recall"] = report.recall;
    root["f1"] = report.f1;
    root["speedup_deviation"] = report.speedup_deviation;
    if (std::isfinite(report.shaking_ratio)) {
        root["shaking_ratio"] = report.shaking_ratio;
    } else {
        root["shaking_ratio"] = nullptr;
    }
    std::ofstream out = open_out(path);
    out << root.dump(2) << "\n";
}

void print_metrics(const MetricsReport& report, std::ostream& out) {
    char buffer[64];
    const auto row = [&](const char* name, double value) {
        if (std::isfinite(value)) {
            std::snprintf(buffer, sizeof(buffer), "%-18s %10.4f", name, value);
        } else {
            std::snprintf(buffer, sizeof(buffer), "%-18s %10s", name, "inf");
        }
        out << buffer << "\n";
    };
    row("precision", report.precision);
    row("recall", report.recall);
    row("f1", report.f1);
    row("speedup_deviation", report.speedup_deviation);
    row("shaking_ratio", report.shaking_ratio);
}

} // namespace hypercut
