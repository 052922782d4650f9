#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crossmodal {

enum class GazeEventKind { Fixation, Saccade, Blink };

struct FixationEvent {
    std::int64_t t_start_ms = 0;
    std::int64_t t_end_ms = 0;
    double x_px = 0.0;
    double y_px = 0.0;
    GazeEventKind kind = GazeEventKind::Fixation;

    std::int64_t duration_ms() const { return t_end_ms - t_start_ms; }
};

// A maximal run of consecutive in-image fixations, merged into one unit of
// visual intake. The centroid is the duration-weighted mean of the member
// fixation points.
struct FixationWindow {
    std::int64_t t_start_ms = 0;
    std::int64_t t_end_ms = 0;
    double centroid_x_px = 0.0;
    double centroid_y_px = 0.0;
    std::int64_t duration_ms = 0;
};

struct BoundingBox {
    std::string label;
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double area() const { return w * h; }
    // Half-open on both axes: [x, x+w) x [y, y+h).
    bool contains(double px, double py) const {
        return px >= x && px < x + w && py >= y && py < y + h;
    }
};

struct ImageRecord {
    std::string image_id;
    int width_px = 0;
    int height_px = 0;
    std::vector<BoundingBox> boxes;

    bool contains(double px, double py) const {
        return px >= 0.0 && px < double(width_px) && py >= 0.0 && py < double(height_px);
    }
};

// A tokenized spoken description with one onset timestamp per token.
struct TimedCaption {
    std::string image_id;
    std::string participant_id;
    std::vector<std::string> tokens;       // lowercase, no punctuation-only entries
    std::vector<std::int64_t> onsets_ms;   // non-decreasing, one per token
};

// Time-ordered sequence of fixated object labels; repeats are kept.
struct Scanpath {
    std::string image_id;
    std::string participant_id;
    std::vector<std::string> labels;
};

}  // namespace crossmodal
