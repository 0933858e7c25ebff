// src/metrics.cc

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

#include "adcf/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adcf {

namespace {

void CheckRate(double r, const char *name) {
  if (!(r >= 0.0 && r <= 1.0)) {
    std::ostringstream os;
    os << name << " must lie in [0,1], got " << r;
    throw ValidationError(os.str());
  }
}

void CheckFiniteList(const std::vector<double> &v, const char *name) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      std::ostringstream os;
      os << "non-finite score in class '" << name << "'";
      throw ValidationError(os.str());
    }
  }
}

/// Count of entries <= tau in a sorted list.
std::size_t CountAtOrBelow(const std::vector<double> &sorted, double tau) {
  return static_cast<std::size_t>(
      std::upper_bound(sorted.begin(), sorted.end(), tau) - sorted.begin());
}

struct SortedScores {
  std::vector<double> tar, non, spf;

  explicit SortedScores(const ScoreSet &s) : tar(s.tar), non(s.non), spf(s.spf) {
    std::sort(tar.begin(), tar.end());
    std::sort(non.begin(), non.end());
    std::sort(spf.begin(), spf.end());
  }

  ErrorRates RatesAt(double tau) const {
    ErrorRates r;
    r.tar_empty = tar.empty();
    r.non_empty = non.empty();
    r.spf_empty = spf.empty();
    if (!tar.empty())
      r.p_miss_tar = static_cast<double>(CountAtOrBelow(tar, tau)) /
                     static_cast<double>(tar.size());
    if (!non.empty())
      r.p_fa_non = static_cast<double>(non.size() - CountAtOrBelow(non, tau)) /
                   static_cast<double>(non.size());
    if (!spf.empty())
      r.p_fa_spf = static_cast<double>(spf.size() - CountAtOrBelow(spf, tau)) /
                   static_cast<double>(spf.size());
    return r;
  }
};

/// Unrefined inverse normal CDF (Acklam's rational approximation).
double ProbitApprox(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  double q = p - 0.5;
  double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
          a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double NormalCdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

}  // namespace

CostModel::CostModel(double c_miss_tar_in, double c_fa_non_in,
                     double c_fa_spf_in, double pi_tar_in, double pi_non_in,
                     double pi_spf_in)
    : c_miss_tar(c_miss_tar_in),
      c_fa_non(c_fa_non_in),
      c_fa_spf(c_fa_spf_in),
      pi_tar(pi_tar_in),
      pi_non(pi_non_in),
      pi_spf(pi_spf_in) {
  for (double c : {c_miss_tar, c_fa_non, c_fa_spf}) {
    if (!(std::isfinite(c) && c >= 0.0))
      throw ValidationError("costs must be finite and >= 0");
  }
  for (double pi : {pi_tar, pi_non, pi_spf}) {
    if (!(std::isfinite(pi) && pi >= 0.0 && pi <= 1.0))
      throw ValidationError("priors must lie in [0,1]");
  }
  if (std::abs(pi_tar + pi_non + pi_spf - 1.0) > 1e-12)
    throw ValidationError("priors must sum to 1");
  if (c_miss_tar * pi_tar <= 0.0 &&
      c_fa_non * pi_non + c_fa_spf * pi_spf <= 0.0)
    throw ValidationError(
        "cost model is identically zero: both the miss and the false-alarm "
        "branch have zero weight");
}

TwoClassCostModel::TwoClassCostModel(double c_miss_in, double c_fa_in,
                                     double pi_tar_in)
    : c_miss(c_miss_in), c_fa(c_fa_in), pi_tar(pi_tar_in) {
  if (!(std::isfinite(c_miss) && c_miss >= 0.0) ||
      !(std::isfinite(c_fa) && c_fa >= 0.0))
    throw ValidationError("costs must be finite and >= 0");
  if (!(std::isfinite(pi_tar) && pi_tar >= 0.0 && pi_tar <= 1.0))
    throw ValidationError("pi_tar must lie in [0,1]");
}

ScoreSet::ScoreSet(std::vector<double> tar_in, std::vector<double> non_in,
                   std::vector<double> spf_in)
    : tar(std::move(tar_in)), non(std::move(non_in)), spf(std::move(spf_in)) {
  CheckFinite();
}

void ScoreSet::CheckFinite() const {
  CheckFiniteList(tar, "target");
  CheckFiniteList(non, "nontarget");
  CheckFiniteList(spf, "spoof");
}

std::vector<double> ScoreSet::Pooled() const {
  std::vector<double> all;
  all.reserve(TotalCount());
  all.insert(all.end(), tar.begin(), tar.end());
  all.insert(all.end(), non.begin(), non.end());
  all.insert(all.end(), spf.begin(), spf.end());
  return all;
}

ThresholdGrid::ThresholdGrid(double lo_in, double hi_in, double step_in)
    : lo(lo_in), hi(hi_in), step(step_in) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw ValidationError("grid requires lo < hi");
  if (!(std::isfinite(step) && step > 0.0))
    throw ValidationError("grid step must be > 0");
}

std::vector<double> ThresholdGrid::Points() const {
  // Points are generated as lo + i*step rather than by accumulation, so the
  // grid is identical however many times it is materialized.
  auto count = static_cast<std::size_t>((hi - lo) / step + 1e-9) + 1;
  std::vector<double> taus(count);
  for (std::size_t i = 0; i < count; ++i)
    taus[i] = lo + static_cast<double>(i) * step;
  return taus;
}

ErrorRates HardErrorRates(const ScoreSet &scores, double tau) {
  if (scores.AllEmpty())
    throw ValidationError("no trials: every score class is empty");
  if (!std::isfinite(tau)) throw ValidationError("threshold must be finite");

  ErrorRates r;
  r.tar_empty = scores.tar.empty();
  r.non_empty = scores.non.empty();
  r.spf_empty = scores.spf.empty();

  // Acceptance requires a score strictly above tau; g == tau rejects.
  std::size_t misses = 0, fa_non = 0, fa_spf = 0;
  for (double g : scores.tar) misses += (g <= tau);
  for (double g : scores.non) fa_non += (g > tau);
  for (double g : scores.spf) fa_spf += (g > tau);

  if (!r.tar_empty)
    r.p_miss_tar =
        static_cast<double>(misses) / static_cast<double>(scores.tar.size());
  if (!r.non_empty)
    r.p_fa_non =
        static_cast<double>(fa_non) / static_cast<double>(scores.non.size());
  if (!r.spf_empty)
    r.p_fa_spf =
        static_cast<double>(fa_spf) / static_cast<double>(scores.spf.size());
  return r;
}

double ADcf(const ErrorRates &rates, const CostModel &cm, bool normalized) {
  CheckRate(rates.p_miss_tar, "p_miss_tar");
  CheckRate(rates.p_fa_non, "p_fa_non");
  CheckRate(rates.p_fa_spf, "p_fa_spf");
  double cost = cm.c_miss_tar * cm.pi_tar * rates.p_miss_tar +
                cm.c_fa_non * cm.pi_non * rates.p_fa_non +
                cm.c_fa_spf * cm.pi_spf * rates.p_fa_spf;
  if (!normalized) return cost;
  double norm = cm.Normalizer();
  if (norm <= 0.0)
    throw ValidationError(
        "normalized cost undefined: a trivial policy already has zero cost");
  return cost / norm;
}

double Dcf(double p_miss, double p_fa, const TwoClassCostModel &cm) {
  CheckRate(p_miss, "p_miss");
  CheckRate(p_fa, "p_fa");
  return cm.c_miss * cm.pi_tar * p_miss + cm.c_fa * cm.pi_non() * p_fa;
}

std::vector<double> CandidateThresholds(std::vector<double> pooled) {
  if (pooled.empty())
    throw ValidationError("cannot build thresholds for an empty score list");
  std::sort(pooled.begin(), pooled.end());
  pooled.erase(std::unique(pooled.begin(), pooled.end()), pooled.end());

  std::vector<double> taus;
  taus.reserve(pooled.size() + 1);
  taus.push_back(pooled.front() - 1.0);
  for (std::size_t i = 0; i + 1 < pooled.size(); ++i)
    taus.push_back(0.5 * (pooled[i] + pooled[i + 1]));
  taus.push_back(pooled.back() + 1.0);
  return taus;
}

MinADcfResult MinADcf(const ScoreSet &scores, const CostModel &cm,
                      bool normalized) {
  if (scores.AllEmpty()) throw ValidationError("no trials: empty score set");
  scores.CheckFinite();

  SortedScores sorted(scores);
  std::vector<double> taus = CandidateThresholds(scores.Pooled());

  MinADcfResult best;
  bool first = true;
  for (double tau : taus) {
    double cost = ADcf(sorted.RatesAt(tau), cm, normalized);
    // Strict < keeps the smallest threshold among ties.
    if (first || cost < best.cost) {
      best.cost = cost;
      best.tau = tau;
      first = false;
    }
  }
  return best;
}

DetCurve ComputeDetCurve(const ScoreSet &scores, ClassPair pair) {
  const std::vector<double> &negatives =
      pair == ClassPair::kTarVsNon ? scores.non : scores.spf;
  if (scores.tar.empty() || negatives.empty())
    throw ValidationError("DET curve requires both classes non-empty");

  std::vector<double> tar_sorted = scores.tar;
  std::vector<double> neg_sorted = negatives;
  std::sort(tar_sorted.begin(), tar_sorted.end());
  std::sort(neg_sorted.begin(), neg_sorted.end());

  std::vector<double> pooled = tar_sorted;
  pooled.insert(pooled.end(), neg_sorted.begin(), neg_sorted.end());

  DetCurve curve;
  curve.pair = pair;
  for (double tau : CandidateThresholds(std::move(pooled))) {
    DetPoint pt;
    pt.tau = tau;
    pt.p_miss = static_cast<double>(CountAtOrBelow(tar_sorted, tau)) /
                static_cast<double>(tar_sorted.size());
    pt.p_fa = static_cast<double>(neg_sorted.size() -
                                  CountAtOrBelow(neg_sorted, tau)) /
              static_cast<double>(neg_sorted.size());
    curve.points.push_back(pt);
  }
  return curve;
}

double Eer(const ScoreSet &scores, ClassPair pair) {
  DetCurve curve = ComputeDetCurve(scores, pair);
  // Thresholds ascend, so p_miss - p_fa is non-decreasing from -1 to +1;
  // report the midpoint of the two rates at the first sign change.
  for (const DetPoint &pt : curve.points) {
    if (pt.p_miss >= pt.p_fa) return 0.5 * (pt.p_miss + pt.p_fa);
  }
  return 1.0;  // unreachable: the top sentinel has p_miss=1, p_fa=0
}

std::vector<std::pair<double, double>> ADcfVsThreshold(
    const ScoreSet &scores, const CostModel &cm,
    const std::vector<double> &taus, bool normalized) {
  if (scores.AllEmpty()) throw ValidationError("no trials: empty score set");
  SortedScores sorted(scores);
  std::vector<std::pair<double, double>> out;
  out.reserve(taus.size());
  for (double tau : taus) {
    if (!std::isfinite(tau)) throw ValidationError("threshold must be finite");
    out.emplace_back(tau, ADcf(sorted.RatesAt(tau), cm, normalized));
  }
  return out;
}

std::vector<std::pair<double, double>> ADcfVsThreshold(
    const ScoreSet &scores, const CostModel &cm, const ThresholdGrid &grid,
    bool normalized) {
  return ADcfVsThreshold(scores, cm, grid.Points(), normalized);
}

double Probit(double p) {
  const double kClamp = 4.0;
  if (!(p > 0.0)) return -kClamp;
  if (!(p < 1.0)) return kClamp;
  double x = ProbitApprox(p);
  // One Halley step against the exact CDF tightens the approximation to
  // near machine precision.
  double e = NormalCdf(x) - p;
  double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return std::clamp(x, -kClamp, kClamp);
}

}  // namespace adcf
