#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arcane {

// Raw RGB image, row-major, 3 bytes per pixel.
struct Image {
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> rgb;

    Image() = default;
    Image(int r, int c) : rows(r), cols(c), rgb(static_cast<size_t>(r) * c * 3, 0) {}

    uint8_t* at(int r, int c) { return &rgb[(static_cast<size_t>(r) * cols + c) * 3]; }
    const uint8_t* at(int r, int c) const {
        return &rgb[(static_cast<size_t>(r) * cols + c) * 3];
    }

    bool operator==(const Image& o) const {
        return rows == o.rows && cols == o.cols && rgb == o.rgb;
    }
};

// Plain binary PPM (P6) export for debugging.
void write_ppm(const Image& img, const std::string& path);

}  // namespace arcane
