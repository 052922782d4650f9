#include "crossmodal/image_io.hpp"

#include <png.h>

#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

namespace crossmodal {

namespace {

// --- PPM (binary P6, maxval 255) ---

int next_ppm_int(std::istream& is, const std::string& path) {
    // skip whitespace and '#' comments between header fields
    int c = is.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = is.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = is.get();
    }
    if (c == EOF) throw ImageIoError("truncated PPM header: " + path);
    int value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = is.get();
    }
    if (!any) throw ImageIoError("malformed PPM header: " + path);
    return value;
}

ImageRgb read_ppm(std::istream& is, const std::string& path) {
    char magic[2];
    is.read(magic, 2);
    if (!is || magic[0] != 'P' || magic[1] != '6') throw ImageIoError("not a P6 PPM: " + path);
    const int width = next_ppm_int(is, path);
    const int height = next_ppm_int(is, path);
    const int maxval = next_ppm_int(is, path);
    if (width <= 0 || height <= 0 || maxval != 255) {
        throw ImageIoError("unsupported PPM (need positive dims, maxval 255): " + path);
    }
    ImageRgb img{width, height, std::vector<std::uint8_t>(std::size_t(width) * height * 3)};
    is.read(reinterpret_cast<char*>(img.pixels.data()), std::streamsize(img.pixels.size()));
    if (!is) throw ImageIoError("truncated PPM pixel data: " + path);
    return img;
}

void write_ppm(const ImageRgb& img, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ImageIoError("cannot open for writing: " + path);
    os << "P6\n" << img.width << " " << img.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.pixels.data()), std::streamsize(img.pixels.size()));
    if (!os) throw ImageIoError("write failed: " + path);
}

// --- PNG via libpng, forced to 8-bit RGB ---

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

ImageRgb read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw ImageIoError("cannot open: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw ImageIoError("libpng init failed");
    }
    ImageRgb img;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw ImageIoError("failed to decode PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    img.width = int(png_get_image_width(png, info));
    img.height = int(png_get_image_height(png, info));
    const std::size_t rowbytes = png_get_rowbytes(png, info);
    if (rowbytes != std::size_t(img.width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw ImageIoError("unexpected PNG row layout: " + path);
    }
    img.pixels.resize(std::size_t(img.width) * img.height * 3);
    rows.resize(std::size_t(img.height));
    for (int r = 0; r < img.height; ++r) rows[std::size_t(r)] = img.pixels.data() + img.index(r, 0);
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png(const ImageRgb& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw ImageIoError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw ImageIoError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw ImageIoError("failed to encode PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, png_uint_32(img.width), png_uint_32(img.height), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(std::size_t(img.height));
    for (int r = 0; r < img.height; ++r) {
        rows[std::size_t(r)] = const_cast<png_bytep>(img.pixels.data() + img.index(r, 0));
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

ImageRgb read_image(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ImageIoError("cannot open: " + path);
    unsigned char magic[2] = {0, 0};
    is.read(reinterpret_cast<char*>(magic), 2);
    is.seekg(0);
    if (magic[0] == 0x89 && magic[1] == 'P') {
        is.close();
        return read_png(path);
    }
    if (magic[0] == 'P' && magic[1] == '6') return read_ppm(is, path);
    throw ImageIoError("unrecognised image format (need PNG or P6 PPM): " + path);
}

void write_image(const ImageRgb& image, const std::string& path) {
    if (image.width <= 0 || image.height <= 0 ||
        image.pixels.size() != std::size_t(image.width) * image.height * 3) {
        throw ImageIoError("inconsistent image record");
    }
    if (has_suffix(path, ".png")) {
        write_png(image, path);
    } else if (has_suffix(path, ".ppm")) {
        write_ppm(image, path);
    } else {
        throw ImageIoError("unsupported image extension (use .png or .ppm): " + path);
    }
}

}  // namespace crossmodal
