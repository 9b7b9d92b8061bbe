// Copyright 2026 The pandc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PANDC_TRANSFORM_H_
#define PANDC_TRANSFORM_H_

#include <vector>

#include "pandc/rational.h"

namespace pandc {

// Strictly increasing piecewise-linear map R -> R through rational
// breakpoints, extended past the extreme breakpoints with the slope of the
// adjacent segment. The class is closed under inversion and composition, so
// every money transform stays exact.
//
// Breakpoints are normalized on construction: collinear interior points are
// dropped, which makes equality structural.
class MonotoneTransform {
 public:
  // Needs at least two points, xs strictly increasing and ys strictly
  // increasing. Throws kInvalidTransform otherwise.
  MonotoneTransform(std::vector<Rational> xs, std::vector<Rational> ys);

  static MonotoneTransform identity();
  // x -> slope * x + intercept, slope > 0.
  static MonotoneTransform affine(const Rational& slope, const Rational& intercept);

  Rational operator()(const Rational& x) const { return apply(x); }
  Rational apply(const Rational& x) const;
  MonotoneTransform inverse() const;
  bool is_identity() const;

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return ys_; }

  friend bool operator==(const MonotoneTransform&, const MonotoneTransform&) = default;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> ys_;
};

// (f o g)(x) = f(g(x)).
MonotoneTransform compose(const MonotoneTransform& f, const MonotoneTransform& g);

}  // namespace pandc

#endif  // PANDC_TRANSFORM_H_
