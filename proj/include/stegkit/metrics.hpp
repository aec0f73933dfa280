#pragma once

#include "stegkit/image.hpp"

namespace stegkit {

struct Chi2Result {
  double statistic = 0.0;
  double p_value = 1.0;
  int df = 0;
};

struct QualityReport {
  double psnr = 0.0;  // +infinity when the images are identical
  double ssim = 0.0;
  double ms_ssim = 0.0;  // NaN when the image is too small for 5 scales
  double entropy_cover = 0.0;
  double entropy_stego = 0.0;
  Chi2Result hist_chi2;
};

/// 10*log10(255^2 / MSE) over all samples; +inf on identical images.
double psnr(const ImageBuffer& a, const ImageBuffer& b);

/// SSIM on the luminance plane: 11x11 Gaussian window (sigma 1.5),
/// C1 = (0.01*255)^2, C2 = (0.03*255)^2, mean over valid window positions.
double ssim(const ImageBuffer& a, const ImageBuffer& b);

/// Five dyadic scales (2x2 mean downsampling), weights
/// (0.0448, 0.2856, 0.3001, 0.2363, 0.1333); needs min dimension >= 176.
double ms_ssim(const ImageBuffer& a, const ImageBuffer& b);

/// Shannon entropy of the 256-bin sample histogram, bits per sample.
double entropy(const ImageBuffer& image);

/// Chi-square of the stego histogram against the cover histogram; adjacent
/// bins with cover count < 5 are merged. p from the chi-square survival
/// function at df = groups - 1.
Chi2Result hist_chi2(const ImageBuffer& cover, const ImageBuffer& stego);

QualityReport quality_report(const ImageBuffer& cover, const ImageBuffer& stego);

}  // namespace stegkit
