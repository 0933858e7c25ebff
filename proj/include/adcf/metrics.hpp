// include/adcf/metrics.hpp

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

#ifndef ADCF_METRICS_HPP_
#define ADCF_METRICS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "adcf/common.hpp"

namespace adcf {

// Costs and priors of the three-class detection cost.  Construction enforces:
// priors sum to 1 (1e-12), priors in [0,1], costs >= 0, and at least one of
// the miss branch (c_miss_tar*pi_tar) and the false-alarm branch
// (c_fa_non*pi_non + c_fa_spf*pi_spf) strictly positive, since otherwise the
// cost is identically zero for every threshold.
struct CostModel {
  double c_miss_tar = 1.0;
  double c_fa_non = 10.0;
  double c_fa_spf = 20.0;
  double pi_tar = 0.9;
  double pi_non = 0.05;
  double pi_spf = 0.05;

  CostModel() = default;
  CostModel(double c_miss_tar_in, double c_fa_non_in, double c_fa_spf_in,
            double pi_tar_in, double pi_non_in, double pi_spf_in);

  /// Upper bound of the cost over all thresholds (all three rates at 1).
  double MaxCost() const {
    return c_miss_tar * pi_tar + c_fa_non * pi_non + c_fa_spf * pi_spf;
  }

  /// Cost of the better of the two trivial policies (accept-all/reject-all);
  /// used as the optional normalizer.
  double Normalizer() const {
    double always_accept = c_fa_non * pi_non + c_fa_spf * pi_spf;
    double always_reject = c_miss_tar * pi_tar;
    return always_reject < always_accept ? always_reject : always_accept;
  }

  // The named operating points exposed by the CLI as --setting {1,2,3}.
  static CostModel Setting1() { return CostModel(1, 10, 20, 0.9, 0.05, 0.05); }
  static CostModel Setting2() { return CostModel(1, 1, 1, 0.5, 0.5, 0.0); }
  static CostModel Setting3() { return CostModel(1, 1, 1, 0.5, 0.0, 0.5); }
};

/// Two-class cost model for the conventional verification cost.
struct TwoClassCostModel {
  double c_miss = 1.0;
  double c_fa = 1.0;
  double pi_tar = 0.5;

  TwoClassCostModel() = default;
  TwoClassCostModel(double c_miss_in, double c_fa_in, double pi_tar_in);

  double pi_non() const { return 1.0 - pi_tar; }
};

// Detection scores partitioned by trial class.  Scores must be finite; the
// validating constructor and the file loaders reject NaN/Inf.
struct ScoreSet {
  std::vector<double> tar;
  std::vector<double> non;
  std::vector<double> spf;

  ScoreSet() = default;
  ScoreSet(std::vector<double> tar_in, std::vector<double> non_in,
           std::vector<double> spf_in);

  std::size_t TotalCount() const { return tar.size() + non.size() + spf.size(); }
  bool AllEmpty() const { return tar.empty() && non.empty() && spf.empty(); }

  /// All scores of all classes, in class-major order (tar, non, spf).
  std::vector<double> Pooled() const;

  /// Throws ValidationError if any score is non-finite.
  void CheckFinite() const;
};

// Hard error rates at one threshold.  An empty class contributes rate 0 and
// sets its *_empty flag, so callers can tell "no errors" from "no trials".
struct ErrorRates {
  double p_miss_tar = 0.0;
  double p_fa_non = 0.0;
  double p_fa_spf = 0.0;
  bool tar_empty = false;
  bool non_empty = false;
  bool spf_empty = false;
};

enum class ClassPair { kTarVsNon, kTarVsSpf };

struct DetPoint {
  double tau = 0.0;
  double p_fa = 0.0;
  double p_miss = 0.0;
};

// DET curve points in increasing threshold order, so p_fa is non-increasing
// and p_miss non-decreasing along the sequence, with endpoints at (1,0) and
// (0,1) contributed by the sentinel thresholds.
struct DetCurve {
  ClassPair pair = ClassPair::kTarVsNon;
  std::vector<DetPoint> points;
};

/// Evenly spaced threshold grid lo, lo+step, ..., hi.
struct ThresholdGrid {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.001;

  ThresholdGrid() = default;
  ThresholdGrid(double lo_in, double hi_in, double step_in);

  std::vector<double> Points() const;
};

struct MinADcfResult {
  double cost = 0.0;
  double tau = 0.0;
};

/// Counting-based miss/false-alarm rates at threshold tau.  A score equal to
/// tau counts as a rejection (miss for targets).  Throws if every class is
/// empty or tau is not finite.
ErrorRates HardErrorRates(const ScoreSet &scores, double tau);

/// Cost-weighted sum of the three error rates.  With normalized=true the
/// value is divided by the better trivial policy's cost; requesting that for
/// a cost model whose normalizer is zero is an error.
double ADcf(const ErrorRates &rates, const CostModel &cm,
            bool normalized = false);

/// Conventional two-class detection cost.
double Dcf(double p_miss, double p_fa, const TwoClassCostModel &cm);

/// Decision-relevant thresholds for a pooled score list: midpoints between
/// consecutive distinct values plus one sentinel below the minimum and one
/// above the maximum.  The hard cost is piecewise constant between scores,
/// so this candidate set is exhaustive.
std::vector<double> CandidateThresholds(std::vector<double> pooled);

/// Minimum of ADcf(HardErrorRates(scores, tau), cm) over the candidate set,
/// ties broken towards the smallest threshold.
MinADcfResult MinADcf(const ScoreSet &scores, const CostModel &cm,
                      bool normalized = false);

/// DET curve over the candidate thresholds of the selected class pair.
DetCurve ComputeDetCurve(const ScoreSet &scores, ClassPair pair);

/// Rate at which the pair's miss and false-alarm rates cross, taken as the
/// midpoint of the two rates at the first threshold where miss >= fa.
double Eer(const ScoreSet &scores, ClassPair pair);

/// Pointwise hard cost along an explicit threshold list.
std::vector<std::pair<double, double>> ADcfVsThreshold(
    const ScoreSet &scores, const CostModel &cm,
    const std::vector<double> &taus, bool normalized = false);

std::vector<std::pair<double, double>> ADcfVsThreshold(
    const ScoreSet &scores, const CostModel &cm, const ThresholdGrid &grid,
    bool normalized = false);

/// Standard normal quantile for DET plotting, clamped to [-4, 4].
double Probit(double p);

}  // namespace adcf

#endif  // ADCF_METRICS_HPP_
