#pragma once

#include <stdexcept>
#include <string>

namespace stegkit {

// Stable machine-readable error codes; string forms are part of the CLI
// contract and must not change between releases.
enum class errc {
  wrong_channel_count,
  invalid_quality,
  io_error,
  unsupported_format,
  corrupt_file,
  invalid_key,
  no_channel_enabled,
  magic_not_found,
  crc_mismatch,
  truncated_frame,
  missing_channel,
  inconsistent_headers,
  capacity_exceeded,
  bits_exceed_plan,
  verification_overflow,
  dimension_mismatch,
  too_small_for_scales,
  image_too_small,
  unknown_class,
  empty_corpus,
  invalid_params,
  out_of_range,
  invalid_counts,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace stegkit
