// include/adcf/loss.hpp

// Copyright 2026  The adcf authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ADCF_LOSS_HPP_
#define ADCF_LOSS_HPP_

#include <vector>

#include "adcf/metrics.hpp"

namespace adcf {

// Sigmoid-softened error rates.  Values are strictly inside (0,1) for finite
// scores and threshold; an empty class contributes 0 and sets its flag, the
// same convention as the hard rates.
struct SoftRates {
  double p_miss_tar = 0.0;
  double p_fa_non = 0.0;
  double p_fa_spf = 0.0;
  bool tar_empty = false;
  bool non_empty = false;
  bool spf_empty = false;
};

// Scale applied to the sigmoid argument.  alpha = 1 is the definition used
// for training; larger values sharpen the surrogate towards hard counting
// and exist for convergence testing.
struct SteepnessConfig {
  double alpha = 1.0;

  SteepnessConfig() = default;
  explicit SteepnessConfig(double alpha_in);
};

enum class LossMode { kBce, kSoftADcf, kCombined };

/// Per-trial loss gradients, partitioned like the score set.
struct ScoreGradients {
  std::vector<double> tar;
  std::vector<double> non;
  std::vector<double> spf;
};

/// Soft miss rate mean(sigmoid(alpha*(tau - g))) over targets and soft
/// false-alarm rates mean(sigmoid(alpha*(g - tau))) over each negative class.
SoftRates SoftErrorRates(const ScoreSet &scores, double tau,
                         const SteepnessConfig &steep = SteepnessConfig());

/// Cost-weighted sum of the soft rates; the differentiable training loss.
double SoftADcf(const ScoreSet &scores, double tau, const CostModel &cm,
                const SteepnessConfig &steep = SteepnessConfig());

/// Mean binary cross entropy.  Predictions are clamped to
/// [kBceEpsilon, 1 - kBceEpsilon] before the logarithm so saturated scores
/// cannot produce infinities; labels must be 0 or 1.
double Bce(const std::vector<double> &predictions,
           const std::vector<int> &labels);

inline constexpr double kBceEpsilon = 1e-7;

/// BCE over the score set with targets labelled 1 and both negative classes
/// labelled 0, trials taken in class-major order (tar, non, spf).
double BcePooled(const ScoreSet &scores);

/// Mean of the soft cost and the pooled BCE.
double CombinedLoss(const ScoreSet &scores, double tau, const CostModel &cm,
                    const SteepnessConfig &steep = SteepnessConfig());

/// Loss value under the selected mode, on one score set.
double LossValue(const ScoreSet &scores, double tau, const CostModel &cm,
                 const SteepnessConfig &steep, LossMode mode);

/// Analytic d(loss)/d(score) for every trial.
ScoreGradients LossGradientWrtScores(const ScoreSet &scores, double tau,
                                     const CostModel &cm,
                                     const SteepnessConfig &steep,
                                     LossMode mode);

/// Analytic d(loss)/d(threshold).  Training never uses this (the threshold
/// is grid-searched, not descended); provided so gradient checks can cover
/// the full input surface.
double LossGradientWrtTau(const ScoreSet &scores, double tau,
                          const CostModel &cm, const SteepnessConfig &steep,
                          LossMode mode);

}  // namespace adcf

#endif  // ADCF_LOSS_HPP_
