#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmodal {

class ImageIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ImageRgb {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // interleaved RGB, row-major

    std::size_t index(int row, int col) const {
        return (std::size_t(row) * width + col) * 3;
    }
};

/// Reads a PNG or binary PPM (P6) image, detected by magic bytes.
ImageRgb read_image(const std::string& path);

/// Writes PNG or PPM depending on the file extension (.png / .ppm).
void write_image(const ImageRgb& image, const std::string& path);

}  // namespace crossmodal
