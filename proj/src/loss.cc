// src/loss.cc

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

#include "adcf/loss.hpp"

#include <algorithm>
#include <cmath>

namespace adcf {

namespace {

void CheckTau(double tau) {
  if (!std::isfinite(tau)) throw ValidationError("threshold must be finite");
}

/// Mean of sigmoid(sign * alpha * (g - tau)) over one class, in input order.
double SoftRate(const std::vector<double> &scores, double tau, double alpha,
                double sign) {
  double sum = 0.0;
  for (double g : scores) sum += Sigmoid(sign * alpha * (g - tau));
  return sum / static_cast<double>(scores.size());
}

double BceTermGradient(double p, double y, double inv_n) {
  // The clamp makes the loss constant in the saturated region, so its
  // gradient there is exactly zero.
  if (p < kBceEpsilon || p > 1.0 - kBceEpsilon) return 0.0;
  return -inv_n * (y / p - (1.0 - y) / (1.0 - p));
}

}  // namespace

SteepnessConfig::SteepnessConfig(double alpha_in) : alpha(alpha_in) {
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw ValidationError("steepness alpha must be > 0");
}

SoftRates SoftErrorRates(const ScoreSet &scores, double tau,
                         const SteepnessConfig &steep) {
  if (scores.AllEmpty())
    throw ValidationError("no trials: every score class is empty");
  CheckTau(tau);
  scores.CheckFinite();

  SoftRates r;
  r.tar_empty = scores.tar.empty();
  r.non_empty = scores.non.empty();
  r.spf_empty = scores.spf.empty();
  if (!r.tar_empty) r.p_miss_tar = SoftRate(scores.tar, tau, steep.alpha, -1.0);
  if (!r.non_empty) r.p_fa_non = SoftRate(scores.non, tau, steep.alpha, 1.0);
  if (!r.spf_empty) r.p_fa_spf = SoftRate(scores.spf, tau, steep.alpha, 1.0);
  return r;
}

double SoftADcf(const ScoreSet &scores, double tau, const CostModel &cm,
                const SteepnessConfig &steep) {
  SoftRates r = SoftErrorRates(scores, tau, steep);
  return cm.c_miss_tar * cm.pi_tar * r.p_miss_tar +
         cm.c_fa_non * cm.pi_non * r.p_fa_non +
         cm.c_fa_spf * cm.pi_spf * r.p_fa_spf;
}

double Bce(const std::vector<double> &predictions,
           const std::vector<int> &labels) {
  if (predictions.empty()) throw ValidationError("BCE over an empty set");
  if (predictions.size() != labels.size())
    throw ValidationError("BCE predictions/labels length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1)
      throw ValidationError("BCE labels must be 0 or 1");
    if (!std::isfinite(predictions[i]))
      throw ValidationError("BCE prediction must be finite");
    double p = std::clamp(predictions[i], kBceEpsilon, 1.0 - kBceEpsilon);
    sum += labels[i] == 1 ? std::log(p) : std::log(1.0 - p);
  }
  return -sum / static_cast<double>(predictions.size());
}

double BcePooled(const ScoreSet &scores) {
  if (scores.AllEmpty())
    throw ValidationError("no trials: every score class is empty");
  std::vector<double> preds = scores.Pooled();
  std::vector<int> labels(preds.size(), 0);
  std::fill(labels.begin(), labels.begin() + scores.tar.size(), 1);
  return Bce(preds, labels);
}

double CombinedLoss(const ScoreSet &scores, double tau, const CostModel &cm,
                    const SteepnessConfig &steep) {
  return 0.5 * (SoftADcf(scores, tau, cm, steep) + BcePooled(scores));
}

double LossValue(const ScoreSet &scores, double tau, const CostModel &cm,
                 const SteepnessConfig &steep, LossMode mode) {
  switch (mode) {
    case LossMode::kBce:
      return BcePooled(scores);
    case LossMode::kSoftADcf:
      return SoftADcf(scores, tau, cm, steep);
    case LossMode::kCombined:
      return CombinedLoss(scores, tau, cm, steep);
  }
  throw ValidationError("unknown loss mode");
}

ScoreGradients LossGradientWrtScores(const ScoreSet &scores, double tau,
                                     const CostModel &cm,
                                     const SteepnessConfig &steep,
                                     LossMode mode) {
  if (scores.AllEmpty())
    throw ValidationError("no trials: every score class is empty");
  CheckTau(tau);
  scores.CheckFinite();

  ScoreGradients g;
  g.tar.assign(scores.tar.size(), 0.0);
  g.non.assign(scores.non.size(), 0.0);
  g.spf.assign(scores.spf.size(), 0.0);

  double half = mode == LossMode::kCombined ? 0.5 : 1.0;

  if (mode == LossMode::kSoftADcf || mode == LossMode::kCombined) {
    double alpha = steep.alpha;
    if (!scores.tar.empty()) {
      double w = half * cm.c_miss_tar * cm.pi_tar * alpha /
                 static_cast<double>(scores.tar.size());
      for (std::size_t i = 0; i < scores.tar.size(); ++i)
        g.tar[i] -= w * SigmoidGrad(alpha * (tau - scores.tar[i]));
    }
    if (!scores.non.empty()) {
      double w = half * cm.c_fa_non * cm.pi_non * alpha /
                 static_cast<double>(scores.non.size());
      for (std::size_t i = 0; i < scores.non.size(); ++i)
        g.non[i] += w * SigmoidGrad(alpha * (scores.non[i] - tau));
    }
    if (!scores.spf.empty()) {
      double w = half * cm.c_fa_spf * cm.pi_spf * alpha /
                 static_cast<double>(scores.spf.size());
      for (std::size_t i = 0; i < scores.spf.size(); ++i)
        g.spf[i] += w * SigmoidGrad(alpha * (scores.spf[i] - tau));
    }
  }

  if (mode == LossMode::kBce || mode == LossMode::kCombined) {
    double inv_n = half / static_cast<double>(scores.TotalCount());
    for (std::size_t i = 0; i < scores.tar.size(); ++i)
      g.tar[i] += BceTermGradient(scores.tar[i], 1.0, inv_n);
    for (std::size_t i = 0; i < scores.non.size(); ++i)
      g.non[i] += BceTermGradient(scores.non[i], 0.0, inv_n);
    for (std::size_t i = 0; i < scores.spf.size(); ++i)
      g.spf[i] += BceTermGradient(scores.spf[i], 0.0, inv_n);
  }

  return g;
}

double LossGradientWrtTau(const ScoreSet &scores, double tau,
                          const CostModel &cm, const SteepnessConfig &steep,
                          LossMode mode) {
  if (mode == LossMode::kBce) return 0.0;
  if (scores.AllEmpty())
    throw ValidationError("no trials: every score class is empty");
  CheckTau(tau);

  double alpha = steep.alpha;
  double grad = 0.0;
  if (!scores.tar.empty()) {
    double w = cm.c_miss_tar * cm.pi_tar * alpha /
               static_cast<double>(scores.tar.size());
    for (double gscore : scores.tar)
      grad += w * SigmoidGrad(alpha * (tau - gscore));
  }
  if (!scores.non.empty()) {
    double w =
        cm.c_fa_non * cm.pi_non * alpha / static_cast<double>(scores.non.size());
    for (double gscore : scores.non)
      grad -= w * SigmoidGrad(alpha * (gscore - tau));
  }
  if (!scores.spf.empty()) {
    double w =
        cm.c_fa_spf * cm.pi_spf * alpha / static_cast<double>(scores.spf.size());
    for (double gscore : scores.spf)
      grad -= w * SigmoidGrad(alpha * (gscore - tau));
  }
  return mode == LossMode::kCombined ? 0.5 * grad : grad;
}

}  // namespace adcf
