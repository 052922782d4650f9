#pragma once

#include "crossmodal/image_io.hpp"
#include "crossmodal/types.hpp"

#include <span>
#include <string>
#include <vector>

namespace crossmodal {

/// Default Gaussian standard deviation: one degree of visual angle in the
/// source recording setup, expressed in pixels.
inline constexpr double kDefaultSigmaPx = 44.0;

struct SaliencyMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major; [0, 1] with max 1 once normalised

    double at(int row, int col) const { return values[std::size_t(row) * width + col]; }
    double& at(int row, int col) { return values[std::size_t(row) * width + col]; }
};

struct SequentialSaliency {
    std::string image_id;
    std::string participant_id;
    std::vector<SaliencyMap> per_word_maps;  // one per caption token
};

/// Unnormalised Gaussian centered on the window centroid:
/// values[r][c] = exp(-((c-cx)^2 + (r-cy)^2) / (2 sigma^2)).
SaliencyMap gaussian_mask(const FixationWindow& window, int width, int height, double sigma_px);

/// Sum of the windows' Gaussian masks weighted by relative fixation
/// duration, rescaled so the maximum is exactly 1. Throws on an empty
/// window list.
SaliencyMap participant_map(std::span<const FixationWindow> windows, int width, int height,
                            double sigma_px);

/// Element-wise sum of per-participant maps, rescaled to max 1. Throws on
/// an empty list or mismatched dimensions.
SaliencyMap aggregate_map(std::span<const SaliencyMap> per_participant_maps);

/// Assigns each window to at most one caption token by start time. Token 0
/// takes every window starting before its onset; token t >= 1 takes starts
/// in the half-open interval [onset(t-1), onset(t)). Windows starting at
/// or after the last onset stay unassigned.
std::vector<std::vector<FixationWindow>> bucket_windows_by_word(
    const TimedCaption& caption, std::span<const FixationWindow> windows);

/// One normalised map per caption token. A token with no windows repeats
/// the most recent non-empty map bit-exactly; leading empty tokens get a
/// uniform all-ones map.
SequentialSaliency sequential_maps(const TimedCaption& caption,
                                   std::span<const FixationWindow> windows, int width, int height,
                                   double sigma_px);

/// Element-wise multiplication of the map with each RGB channel; results
/// are rounded and clamped to [0, 255].
ImageRgb apply_mask(const ImageRgb& image, const SaliencyMap& map);

/// Portable binary map format: ASCII header "SALMAP <width> <height>\n"
/// followed by row-major little-endian 32-bit floats.
void write_salmap(const SaliencyMap& map, const std::string& path);
SaliencyMap read_salmap(const std::string& path);

/// 8-bit binary PGM (value * 255, rounded) for visualisation.
void write_pgm(const SaliencyMap& map, const std::string& path);

}  // namespace crossmodal
