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


#ifndef PANDC_INSTANCE_GEN_H_
#define PANDC_INSTANCE_GEN_H_

#include <cstdint>

#include "pandc/model.h"
#include "pandc/random.h"
#include "pandc/rational.h"
#include "pandc/transform.h"

namespace pandc {

struct GenOptions {
  int players = 2;
  int options = 3;
  std::uint64_t seed = 0;
  Rational lo = Rational(-5);
  Rational hi = Rational(5);
  int max_den = 8;
  bool unique_efficient = false;
  int max_attempts = 10000;

  void validate() const;  // kInvalidArgument
};

// Each utility is num/den with den uniform in [1, max_den] and num uniform
// over the values that keep it inside [lo, hi]. Deterministic per options.
UtilityProfile generate_profile(const GenOptions& options);

// Draws one profile from rng; shared by generate_profile and the tests.
UtilityProfile random_profile(Rng& rng, int players, int options, const Rational& lo,
                              const Rational& hi, int max_den);

// Strictly increasing piecewise-linear map with `pieces` segments, slopes in
// [1/4, 3] and breakpoints spread over roughly [-6, 6].
MonotoneTransform random_transform(Rng& rng, int pieces = 3);

}  // namespace pandc

#endif  // PANDC_INSTANCE_GEN_H_
