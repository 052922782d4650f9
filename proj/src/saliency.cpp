#include "crossmodal/saliency.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace crossmodal {

namespace {

void check_grid(int width, int height) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("non-positive map dimensions");
}

// Rescale so the maximum is exactly 1.
void normalize_max(SaliencyMap& map) {
    double mx = 0.0;
    for (double v : map.values) mx = std::max(mx, v);
    if (mx <= 0.0) throw std::invalid_argument("cannot normalise an all-zero saliency map");
    for (double& v : map.values) v /= mx;
}

SaliencyMap zero_map(int width, int height) {
    return {width, height, std::vector<double>(std::size_t(width) * height, 0.0)};
}

}  // namespace

SaliencyMap gaussian_mask(const FixationWindow& window, int width, int height, double sigma_px) {
    check_grid(width, height);
    if (sigma_px <= 0.0) throw std::invalid_argument("sigma_px must be positive");
    SaliencyMap map = zero_map(width, height);
    const double inv = 1.0 / (2.0 * sigma_px * sigma_px);
    // separable: exp(-(dx^2+dy^2)k) = exp(-dx^2 k) * exp(-dy^2 k)
    std::vector<double> ex(std::size_t(width));
    std::vector<double> ey(std::size_t(height));
    for (int c = 0; c < width; ++c) {
        const double dx = double(c) - window.centroid_x_px;
        ex[std::size_t(c)] = std::exp(-dx * dx * inv);
    }
    for (int r = 0; r < height; ++r) {
        const double dy = double(r) - window.centroid_y_px;
        ey[std::size_t(r)] = std::exp(-dy * dy * inv);
    }
    double* out = map.values.data();
    for (int r = 0; r < height; ++r) {
        const double fy = ey[std::size_t(r)];
        for (int c = 0; c < width; ++c) *out++ = fy * ex[std::size_t(c)];
    }
    return map;
}

SaliencyMap participant_map(std::span<const FixationWindow> windows, int width, int height,
                            double sigma_px) {
    if (windows.empty()) throw std::invalid_argument("participant_map: no fixation windows");
    check_grid(width, height);
    double total_ms = 0.0;
    for (const FixationWindow& w : windows) total_ms += double(w.duration_ms);
    if (total_ms <= 0.0) throw std::invalid_argument("participant_map: zero total duration");

    SaliencyMap acc = zero_map(width, height);
    for (const FixationWindow& w : windows) {
        const SaliencyMap mask = gaussian_mask(w, width, height, sigma_px);
        const double weight = double(w.duration_ms) / total_ms;
        for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += weight * mask.values[i];
    }
    normalize_max(acc);
    return acc;
}

SaliencyMap aggregate_map(std::span<const SaliencyMap> per_participant_maps) {
    if (per_participant_maps.empty()) throw std::invalid_argument("aggregate_map: no maps");
    const SaliencyMap& first = per_participant_maps.front();
    SaliencyMap acc = zero_map(first.width, first.height);
    for (const SaliencyMap& m : per_participant_maps) {
        if (m.width != first.width || m.height != first.height) {
            throw std::invalid_argument("aggregate_map: dimension mismatch");
        }
        for (std::size_t i = 0; i < acc.values.size(); ++i) acc.values[i] += m.values[i];
    }
    normalize_max(acc);
    return acc;
}

std::vector<std::vector<FixationWindow>> bucket_windows_by_word(
    const TimedCaption& caption, std::span<const FixationWindow> windows) {
    const auto& onsets = caption.onsets_ms;
    std::vector<std::vector<FixationWindow>> groups(caption.tokens.size());
    if (groups.empty()) return groups;
    for (const FixationWindow& w : windows) {
        if (w.t_start_ms < onsets.front()) {
            groups.front().push_back(w);
            continue;
        }
        // first onset strictly greater than the start time; the window
        // belongs to that token unless it starts at/after the last onset
        auto it = std::upper_bound(onsets.begin(), onsets.end(), w.t_start_ms);
        if (it == onsets.end()) continue;
        groups[std::size_t(it - onsets.begin())].push_back(w);
    }
    return groups;
}

SequentialSaliency sequential_maps(const TimedCaption& caption,
                                   std::span<const FixationWindow> windows, int width, int height,
                                   double sigma_px) {
    check_grid(width, height);
    const auto groups = bucket_windows_by_word(caption, windows);
    SequentialSaliency out{caption.image_id, caption.participant_id, {}};
    out.per_word_maps.reserve(groups.size());
    std::ptrdiff_t last_nonempty = -1;
    for (const auto& group : groups) {
        if (!group.empty()) {
            out.per_word_maps.push_back(participant_map(group, width, height, sigma_px));
            last_nonempty = std::ptrdiff_t(out.per_word_maps.size()) - 1;
        } else if (last_nonempty >= 0) {
            out.per_word_maps.push_back(out.per_word_maps[std::size_t(last_nonempty)]);
        } else {
            out.per_word_maps.push_back(
                {width, height, std::vector<double>(std::size_t(width) * height, 1.0)});
        }
    }
    return out;
}

ImageRgb apply_mask(const ImageRgb& image, const SaliencyMap& map) {
    if (image.width != map.width || image.height != map.height) {
        throw std::invalid_argument("apply_mask: image and map dimensions differ");
    }
    ImageRgb out{image.width, image.height,
                 std::vector<std::uint8_t>(image.pixels.size(), 0)};
    for (std::size_t p = 0; p < map.values.size(); ++p) {
        const double v = map.values[p];
        for (std::size_t ch = 0; ch < 3; ++ch) {
            const double scaled = std::round(double(image.pixels[p * 3 + ch]) * v);
            out.pixels[p * 3 + ch] = std::uint8_t(std::clamp(scaled, 0.0, 255.0));
        }
    }
    return out;
}

namespace {

void put_f32_le(std::ofstream& os, float v) {
    const auto bits = std::bit_cast<std::uint32_t>(v);
    const char bytes[4] = {char(bits & 0xff), char((bits >> 8) & 0xff), char((bits >> 16) & 0xff),
                           char((bits >> 24) & 0xff)};
    os.write(bytes, 4);
}

float get_f32_le(std::istream& is) {
    unsigned char bytes[4];
    is.read(reinterpret_cast<char*>(bytes), 4);
    const std::uint32_t bits = std::uint32_t(bytes[0]) | (std::uint32_t(bytes[1]) << 8) |
                               (std::uint32_t(bytes[2]) << 16) | (std::uint32_t(bytes[3]) << 24);
    return std::bit_cast<float>(bits);
}

}  // namespace

void write_salmap(const SaliencyMap& map, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "SALMAP " << map.width << " " << map.height << "\n";
    for (double v : map.values) put_f32_le(os, float(v));
    if (!os) throw std::runtime_error("write failed: " + path);
}

SaliencyMap read_salmap(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path);
    std::string magic;
    int width = 0, height = 0;
    is >> magic >> width >> height;
    if (magic != "SALMAP" || width <= 0 || height <= 0) {
        throw std::runtime_error("not a SALMAP file: " + path);
    }
    is.get();  // the single newline after the header
    SaliencyMap map = zero_map(width, height);
    for (double& v : map.values) v = double(get_f32_le(is));
    if (!is) throw std::runtime_error("truncated SALMAP file: " + path);
    return map;
}

void write_pgm(const SaliencyMap& map, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << "P5\n" << map.width << " " << map.height << "\n255\n";
    for (double v : map.values) {
        const double scaled = std::round(v * 255.0);
        os.put(char(std::uint8_t(std::clamp(scaled, 0.0, 255.0))));
    }
    if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace crossmodal
