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


#include "pandc/instance_gen.h"

#include <string>
#include <vector>

#include "pandc/error.h"

namespace pandc {
namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::kInvalidArgument, "value range too large");
  return z.get_si();
}

// floor(x * den) and ceil(x * den).
std::int64_t floor_scaled(const Rational& x, int den) {
  mpz_class q;
  const Rational s = x * Rational(den);
  mpz_fdiv_q(q.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
  return to_int64(q);
}

std::int64_t ceil_scaled(const Rational& x, int den) {
  mpz_class q;
  const Rational s = x * Rational(den);
  mpz_cdiv_q(q.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
  return to_int64(q);
}

}  // namespace

void GenOptions::validate() const {
  if (players < 2) fail(ErrorCode::kInvalidArgument, "need at least 2 players");
  if (options < 2) fail(ErrorCode::kInvalidArgument, "need at least 2 options (k >= 2)");
  if (max_den < 1) fail(ErrorCode::kInvalidArgument, "max_den must be at least 1");
  if (!(lo < hi)) fail(ErrorCode::kInvalidArgument, "value range must satisfy lo < hi");
  if (max_attempts < 1) fail(ErrorCode::kInvalidArgument, "max_attempts must be positive");
}

UtilityProfile random_profile(Rng& rng, int players, int options, const Rational& lo,
                              const Rational& hi, int max_den) {
  std::vector<std::vector<Rational>> values(players, std::vector<Rational>(options));
  for (auto& row : values) {
    for (auto& v : row) {
      // den = 1 always admits at least one integer when hi - lo >= 1; for
      // narrower ranges retry until the denominator fits one.
      for (;;) {
        const int den = static_cast<int>(rng.uniform(1, max_den));
        const std::int64_t a = ceil_scaled(lo, den);
        const std::int64_t b = floor_scaled(hi, den);
        if (a > b) continue;
        v = Rational(rng.uniform(a, b), den);
        break;
      }
    }
  }
  return UtilityProfile::from_values(std::move(values));
}

UtilityProfile generate_profile(const GenOptions& options) {
  options.validate();
  Rng rng(options.seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    UtilityProfile u =
        random_profile(rng, options.players, options.options, options.lo, options.hi,
                       options.max_den);
    if (!options.unique_efficient || efficient_set(u).size() == 1) return u;
  }
  fail(ErrorCode::kInvalidArgument,
       "no profile with a unique efficient option after " +
           std::to_string(options.max_attempts) + " attempts");
}

MonotoneTransform random_transform(Rng& rng, int pieces) {
  if (pieces < 1) fail(ErrorCode::kInvalidArgument, "transform needs at least one piece");
  std::vector<Rational> xs{Rational(rng.uniform(-48, -16), 8)};
  std::vector<Rational> ys{Rational(rng.uniform(-32, 32), 8)};
  for (int i = 0; i < pieces; ++i) {
    const Rational dx(rng.uniform(4, 32), 8);
    const Rational slope(rng.uniform(1, 12), 4);
    xs.push_back(xs.back() + dx);
    ys.push_back(ys.back() + slope * dx);
  }
  return MonotoneTransform(std::move(xs), std::move(ys));
}

}  // namespace pandc
