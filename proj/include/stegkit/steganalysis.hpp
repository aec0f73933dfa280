#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stegkit/image.hpp"

namespace stegkit {

struct MethodRecord {
  std::string method;
  double statistic = 0.0;
  std::optional<double> estimated_rate;  // clamped to [0, 1] when present
  std::optional<double> p_value;
  bool flagged = false;
};

struct DetectionReport {
  std::vector<MethodRecord> methods;
  bool overall_flagged = false;
};

/// Pairs-of-values test on horizontal bands of `window_rows` rows: 128 value
/// pairs (2k, 2k+1), expected = pair mean, chi-square over pairs with
/// expected >= 5. statistic = fraction of bands with p > 0.95; flagged when
/// at least half the bands exceed 0.95.
MethodRecord chi_square_attack(const ImageBuffer& image, int window_rows = 64);

/// Regular/singular analysis on groups of 4 horizontally adjacent samples,
/// mask [0,1,1,0]. Solves the dual-group quadratic; the estimate is
/// z/(z - 1/2) for the root z smaller in absolute value. No real root leaves
/// the estimate absent and the image unflagged. Flagged when p-hat > 0.05.
MethodRecord rs_analysis(const ImageBuffer& image);

/// Sample pair analysis over horizontally adjacent pairs; standard quadratic
/// estimate of the embedding rate, flagged when p-hat > 0.05. Degenerate
/// trace sets (all pairs equal) leave the estimate absent.
MethodRecord sample_pair_analysis(const ImageBuffer& image);

/// All methods; overall_flagged is the OR across methods.
DetectionReport run_battery(const ImageBuffer& image);

}  // namespace stegkit
