// Copyright 2026 The RSBM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSBM_RNG_HPP_
#define RSBM_RNG_HPP_

#include <cstdint>
#include <random>

namespace rsbm {

// Seeded pseudo-random stream. Substreams derived with split() depend only
// on the parent's seed and the key, never on how much of the parent has been
// consumed, so one component's rejection count cannot shift another's draws.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  RngStream split(std::uint64_t key) const;
  RngStream split(std::uint64_t key_hi, std::uint64_t key_lo) const;

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform double in [0, 1).
  double unit();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace rsbm

#endif  // RSBM_RNG_HPP_
