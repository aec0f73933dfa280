#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "stegkit/image.hpp"

namespace stegkit {

/// Coefficients of one 8x8 block, row-major: coeffs[v * 8 + u] where u is the
/// horizontal and v the vertical frequency.
struct DctBlock {
  std::array<double, 64> coeffs{};
  int block_x = 0;
  int block_y = 0;
};

/// 8x8 quantization steps, row-major, every entry >= 1.
struct QuantTable {
  std::array<int, 64> entries{};
  int quality = 0;
};

/// Scan position -> row-major coefficient index, JPEG zig-zag order.
extern const std::array<uint8_t, 64> kZigZag;

/// Rounds half away from zero.
inline long rhaz(double x) { return std::lround(x); }

/// Orthonormal 2D DCT-II on a level-shifted 8x8 block (and its inverse).
/// With this scaling an all-127 input block yields DC = 1016 and zero AC.
void dct2d_8x8(const double* samples, double* coeffs);
void idct2d_8x8(const double* coeffs, double* samples);

/// Forward transform of 8-bit samples; applies the -128 level shift.
DctBlock forward_dct(const uint8_t* samples, int block_x = 0, int block_y = 0);
/// Inverse of forward_dct: un-shifts, rounds half away from zero, clamps.
void inverse_dct(const DctBlock& block, uint8_t* samples);

/// Annex-K luminance table scaled to the given quality (1..100):
/// S = 5000/q (q < 50) or 200 - 2q, entry' = floor((S*base + 50)/100), min 1.
QuantTable quant_table_for_quality(int quality);
/// Same scaling applied to the Annex-K chrominance base table.
QuantTable chroma_quant_table_for_quality(int quality);

enum class ChromaSubsampling { k444, k420 };

/// Deterministic in-memory JPEG-equivalent roundtrip: YCbCr, per-plane 8x8
/// DCT, quantize/dequantize, IDCT, clamp, back to RGB. Edge blocks are
/// replicate-padded and cropped. No container bytes are produced.
ImageBuffer jpeg_roundtrip(const ImageBuffer& image, int quality,
                           ChromaSubsampling subsample = ChromaSubsampling::k444);

}  // namespace stegkit
