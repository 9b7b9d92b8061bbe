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

#include "pandc/transform.h"

#include <algorithm>
#include <utility>

#include "pandc/error.h"

namespace pandc {
namespace {

Rational slope(const Rational& x0, const Rational& y0, const Rational& x1,
               const Rational& y1) {
  return (y1 - y0) / (x1 - x0);
}

}  // namespace

MonotoneTransform::MonotoneTransform(std::vector<Rational> xs, std::vector<Rational> ys) {
  if (xs.size() != ys.size()) {
    fail(ErrorCode::kInvalidTransform, "breakpoints and values differ in length");
  }
  if (xs.size() < 2) {
    fail(ErrorCode::kInvalidTransform, "a transform needs at least two breakpoints");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) {
      fail(ErrorCode::kInvalidTransform, "breakpoints must be strictly increasing");
    }
    if (!(ys[i - 1] < ys[i])) {
      fail(ErrorCode::kInvalidTransform, "transform values must be strictly increasing");
    }
  }
  // Drop collinear interior points.
  xs_.push_back(xs[0]);
  ys_.push_back(ys[0]);
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    const Rational left = slope(xs_.back(), ys_.back(), xs[i], ys[i]);
    const Rational right = slope(xs[i], ys[i], xs[i + 1], ys[i + 1]);
    if (left != right) {
      xs_.push_back(xs[i]);
      ys_.push_back(ys[i]);
    }
  }
  xs_.push_back(xs.back());
  ys_.push_back(ys.back());
  // A single line is stored through x = 0 and x = 1 so equal maps compare equal.
  if (xs_.size() == 2) {
    const Rational m = slope(xs_[0], ys_[0], xs_[1], ys_[1]);
    const Rational b = ys_[0] - m * xs_[0];
    xs_ = {Rational(0), Rational(1)};
    ys_ = {b, b + m};
  }
}

MonotoneTransform MonotoneTransform::identity() {
  return MonotoneTransform({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
}

MonotoneTransform MonotoneTransform::affine(const Rational& slope, const Rational& intercept) {
  if (slope.sign() <= 0) fail(ErrorCode::kInvalidTransform, "slope must be positive");
  return MonotoneTransform({Rational(0), Rational(1)}, {intercept, intercept + slope});
}

bool MonotoneTransform::is_identity() const { return *this == identity(); }

Rational MonotoneTransform::apply(const Rational& x) const {
  // Segment index s covers [xs_[s], xs_[s+1]]; the outer segments extend.
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t s = static_cast<std::size_t>(it - xs_.begin());
  s = s == 0 ? 0 : s - 1;
  s = std::min(s, xs_.size() - 2);
  return ys_[s] + slope(xs_[s], ys_[s], xs_[s + 1], ys_[s + 1]) * (x - xs_[s]);
}

MonotoneTransform MonotoneTransform::inverse() const { return MonotoneTransform(ys_, xs_); }

MonotoneTransform compose(const MonotoneTransform& f, const MonotoneTransform& g) {
  // Kinks of f o g sit at g's kinks and at preimages under g of f's kinks.
  const MonotoneTransform g_inv = g.inverse();
  std::vector<Rational> xs = g.breakpoints();
  for (const auto& fx : f.breakpoints()) xs.push_back(g_inv(fx));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(f(g(x)));
  return MonotoneTransform(std::move(xs), std::move(ys));
}

}  // namespace pandc
