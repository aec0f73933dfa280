#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stegkit/errors.hpp"

namespace stegkit {

inline constexpr uint8_t kFrameMagic0 = 0x53;
inline constexpr uint8_t kFrameMagic1 = 0x50;
inline constexpr uint8_t kFrameVersion = 0x01;
inline constexpr size_t kFrameHeaderBytes = 11;
inline constexpr size_t kMaxPromptBytes = 8 * 1024;
inline constexpr int kDefaultEccRate = 3;

// Payload channel ids (frame header field). Slot 2 is reserved for a learned
// channel and is rejected by the combiner.
inline constexpr uint8_t kChannelLsb = 0;
inline constexpr uint8_t kChannelDct = 1;
inline constexpr uint8_t kChannelNeuralReserved = 2;

/// One framed payload fragment. Wire layout (big-endian, 11-byte header):
/// magic 0x53 0x50, version 0x01, channel_id, total_channels, fragment_len
/// u16, crc32 u32 (IEEE, over the fragment), then fragment bytes.
struct PayloadFrame {
  uint8_t channel_id = 0;
  uint8_t total_channels = 1;
  std::vector<uint8_t> fragment;
};

/// IEEE CRC-32 (the PNG/zlib polynomial); crc of the empty string is 0.
uint32_t crc32_ieee(std::span<const uint8_t> data);

std::vector<uint8_t> frame_serialize(const PayloadFrame& frame);

/// Serialized frame expanded to bits, each repeated `rate` times.
/// Bits are MSB-first within each byte; values are 0/1.
std::vector<uint8_t> frame_encode(std::span<const uint8_t> fragment,
                                  uint8_t channel_id, uint8_t total_channels,
                                  int rate = kDefaultEccRate);

/// Majority-votes each bit group, validates magic, version and CRC.
/// Throws magic_not_found, crc_mismatch or truncated_frame.
PayloadFrame frame_decode(std::span<const uint8_t> coded_bits,
                          int rate = kDefaultEccRate);

/// Incremental decoder: push coded bits until complete(), then take().
/// bits_wanted() reports how many more coded bits are needed at most; it
/// tightens once the header (and with it the fragment length) is known.
class FrameDecoder {
 public:
  explicit FrameDecoder(int rate = kDefaultEccRate);

  void push(uint8_t bit);
  bool complete() const;
  size_t bits_wanted() const;
  PayloadFrame take();  // validates; throws like frame_decode

 private:
  void decode_header();

  int rate_;
  std::vector<uint8_t> coded_;
  size_t total_coded_bits_;  // updated once the header is decoded
  bool header_decoded_ = false;
  uint16_t fragment_len_ = 0;
};

/// Contiguous split with fragment sizes proportional to the weights,
/// remainders assigned left to right. Concatenation reproduces the prompt.
std::vector<std::vector<uint8_t>> split_prompt(
    std::span<const uint8_t> prompt, std::span<const double> weights);

/// Concatenates fragments in channel_id order after consistency checks.
std::vector<uint8_t> merge_fragments(const std::vector<PayloadFrame>& frames);

}  // namespace stegkit
