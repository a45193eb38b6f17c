#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wavemask {

// Row-major real-valued raster. Scene images live in [0,1]; intermediates
// (noisy measurements, Wiener outputs) are unconstrained.
struct Image2D {
    int height = 0;
    int width = 0;
    std::vector<double> pixels;

    Image2D() = default;
    Image2D(int h, int w, double fill = 0.0)
        : height(h), width(w), pixels(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill) {
        if (h <= 0 || w <= 0) throw std::invalid_argument("Image2D: dimensions must be positive");
    }

    double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
    double at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
    std::size_t size() const { return pixels.size(); }

    bool same_shape(const Image2D& other) const {
        return height == other.height && width == other.width;
    }
};

} // namespace wavemask
