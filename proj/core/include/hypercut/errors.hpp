/*
 * Hypercut - personalized fast-forward video planning
 *
 * Licensed under the terms of the Apache 2.0 License.
 * See LICENSE file in the project root for terms.
 */

#ifndef HYPERCUT_ERRORS_HPP
#define HYPERCUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypercut {

// Base for every recoverable error raised by the library. The CLI maps
// these to exit code 2 (input/validation) and anything else to 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyVocabulary : public Error {
public:
    explicit EmptyVocabulary(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what, long line = -1)
        : Error(what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, long line = -1)
        : Error(what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class InvalidK : public Error {
public:
    explicit InvalidK(const std::string& what) : Error(what) {}
};

class TooManyClusters : public Error {
public:
    explicit TooManyClusters(const std::string& what) : Error(what) {}
};

class RegionOutOfBounds : public Error {
public:
    explicit RegionOutOfBounds(const std::string& what) : Error(what) {}
};

class MissingAttention : public Error {
public:
    explicit MissingAttention(const std::string& what, long frame = -1)
        : Error(what), frame_(frame) {}
    long frame() const { return frame_; }

private:
    long frame_;
};

class TopicCountMismatch : public Error {
public:
    explicit TopicCountMismatch(const std::string& what) : Error(what) {}
};

class EmptyVideo : public Error {
public:
    explicit EmptyVideo(const std::string& what) : Error(what) {}
};

class InfeasibleBounds : public Error {
public:
    explicit InfeasibleBounds(const std::string& what) : Error(what) {}
};

class FrameOutOfRange : public Error {
public:
    explicit FrameOutOfRange(const std::string& what) : Error(what) {}
};

class HistogramMismatch : public Error {
public:
    explicit HistogramMismatch(const std::string& what) : Error(what) {}
};

class PlanOverlap : public Error {
public:
    explicit PlanOverlap(const std::string& what) : Error(what) {}
};

class EmptyGroundTruth : public Error {
public:
    explicit EmptyGroundTruth(const std::string& what) : Error(what) {}
};

class DegeneratePlan : public Error {
public:
    explicit DegeneratePlan(const std::string& what) : Error(what) {}
};

class ObjectiveError : public Error {
public:
    explicit ObjectiveError(const std::string& what) : Error(what) {}
};

} // namespace hypercut

#endif // HYPERCUT_ERRORS_HPP
