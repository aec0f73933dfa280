#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stegkit/errors.hpp"

namespace stegkit {

/// 8-bit pixel raster, row-major, interleaved channels (1 = gray, 3 = RGB).
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<uint8_t> data;

  size_t sample_count() const { return data.size(); }
  size_t pixel_count() const {
    return static_cast<size_t>(width) * static_cast<size_t>(height);
  }

  uint8_t& at(int x, int y, int c) {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }
  uint8_t at(int x, int y, int c) const {
    return data[(static_cast<size_t>(y) * width + x) * channels + c];
  }

  bool same_shape(const ImageBuffer& other) const {
    return width == other.width && height == other.height &&
           channels == other.channels;
  }
};

ImageBuffer make_image(int width, int height, int channels, uint8_t fill = 0);

/// Requires width, height >= 16; throws image_too_small otherwise.
void require_embeddable(const ImageBuffer& image);

/// BT.601 full-range conversions, rounded half away from zero and clamped.
/// Round trip differs from the input by at most 1 per sample.
ImageBuffer rgb_to_ycbcr(const ImageBuffer& image);
ImageBuffer ycbcr_to_rgb(const ImageBuffer& image);

/// Real-valued luminance plane (BT.601 weights); gray images copy through.
std::vector<float> luma_plane(const ImageBuffer& image);

/// PNG (lossless, 8-bit gray/RGB) or the internal raw dump, by extension.
/// Raw dump layout: little-endian u32 width, height, channels, then samples.
ImageBuffer read_image(const std::string& path);
void write_image(const ImageBuffer& image, const std::string& path);

}  // namespace stegkit
