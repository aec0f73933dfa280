#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stegkit/image.hpp"
#include "stegkit/keyed_rand.hpp"

namespace stegkit {

// Everything the selection logic sees goes through the stabilized view
// (samples masked with 0xF8), so plans rebuilt from a stego image match the
// plans built on its cover exactly: embedding only ever touches the low 3
// bits.
inline constexpr uint8_t kStabilizeMask = 0xF8;

/// Set of 8x8 blocks excluded from pixel selection (used to keep the spatial
/// channel out of the frequency channel's blocks).
struct BlockSet {
  int blocks_x = 0;
  int blocks_y = 0;
  std::vector<uint8_t> member;  // blocks_x * blocks_y flags

  bool contains(int bx, int by) const {
    if (bx < 0 || by < 0 || bx >= blocks_x || by >= blocks_y) return false;
    return member[static_cast<size_t>(by) * blocks_x + bx] != 0;
  }
  bool contains_pixel(int x, int y) const { return contains(x / 8, y / 8); }
  size_t count() const;
};

BlockSet make_block_set(int blocks_x, int blocks_y);

/// Per-sample embedding desirability phi in [0, 1]:
/// phi = w1 * local texture variance (5x5, normalized)
///     + w2 * distance from strong edges (Chebyshev, capped at 8, /8)
///     + w3 * (1 - histogram frequency of the sample value).
struct SuitabilityMap {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::array<double, 3> weights{0.5, 0.3, 0.2};
  std::vector<float> phi;  // indexed like image samples

  float at(int x, int y, int c) const {
    return phi[(static_cast<size_t>(y) * width + x) * channels + c];
  }
};

/// Local complexity (5x5 stabilized variance) with percentile thresholds and
/// the per-pixel embedding depth (1..3) they induce.
struct ComplexityMap {
  int width = 0;
  int height = 0;
  float tau_low = 0.0f;
  float tau_high = 0.0f;
  std::vector<float> gamma;   // per pixel
  std::vector<uint8_t> depth;  // per pixel, 1..3

  uint8_t depth_at(int x, int y) const {
    return depth[static_cast<size_t>(y) * width + x];
  }
};

struct LsbPlanEntry {
  uint16_t x = 0;
  uint16_t y = 0;
  uint8_t c = 0;
  uint8_t depth = 1;
};

struct LsbPlan {
  std::vector<LsbPlanEntry> entries;
  uint64_t capacity_bits = 0;  // sum of entry depths
};

SuitabilityMap suitability_map(const ImageBuffer& image,
                               std::array<double, 3> weights = {0.5, 0.3, 0.2},
                               bool edge_affinity = false);

ComplexityMap complexity_depths(const ImageBuffer& image);

/// Full keyed candidate sequence (suitability-filtered, key-shuffled, with
/// adaptive depths). build_lsb_plan takes a prefix of this sequence, so
/// extraction can walk it incrementally without knowing the payload length.
struct LsbSequence {
  std::vector<LsbPlanEntry> entries;
  uint64_t total_capacity_bits = 0;
};

struct LsbOptions {
  std::array<double, 3> suitability_weights{0.5, 0.3, 0.2};
  bool edge_affinity = false;  // when true, 1 - d_edge replaces d_edge
  int depth_cap = 3;           // 1..3
};

LsbSequence lsb_candidate_sequence(const ImageBuffer& image, const StegoKey& key,
                                   const BlockSet* excluded = nullptr,
                                   const LsbOptions& options = {});

/// Prefix of the candidate sequence covering needed_bits.
/// Throws capacity_exceeded when the full sequence cannot hold them.
LsbPlan build_lsb_plan(const ImageBuffer& image, const StegoKey& key,
                       uint64_t needed_bits, const BlockSet* excluded = nullptr,
                       const LsbOptions& options = {});

/// Replaces the lowest `depth` bits at each plan entry with payload bits,
/// most significant first. A partial final entry fills only the top of its
/// depth span. Throws bits_exceed_plan.
ImageBuffer lsb_embed(const ImageBuffer& image, const LsbPlan& plan,
                      std::span<const uint8_t> bits);

std::vector<uint8_t> lsb_extract(const ImageBuffer& image, const LsbPlan& plan,
                                 uint64_t nbits);

}  // namespace stegkit
