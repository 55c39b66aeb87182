#pragma once

#include <cstdint>
#include <vector>

#include "synthcal/errors.hpp"

namespace synthcal {

/// Row-major 8-bit grayscale image.
struct ImageU8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    ImageU8() = default;
    ImageU8(int w, int h, std::uint8_t fill = 0) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    bool contains(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

    bool operator==(const ImageU8&) const = default;
};

}  // namespace synthcal
