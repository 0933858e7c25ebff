// include/adcf/common.hpp

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

#ifndef ADCF_COMMON_HPP_
#define ADCF_COMMON_HPP_

#include <cmath>
#include <stdexcept>
#include <string>

namespace adcf {

/// Invariant or content violations (bad cost models, malformed lines, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failures (missing file, unwritable directory, ...).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerically stable logistic function.
inline double Sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  double e = std::exp(x);
  return e / (1.0 + e);
}

/// Derivative of the logistic function at x, written as s(1-s).
inline double SigmoidGrad(double x) {
  double s = Sigmoid(x);
  return s * (1.0 - s);
}

}  // namespace adcf

#endif  // ADCF_COMMON_HPP_
