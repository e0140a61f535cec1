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

#include "rsbm/rng.hpp"

#include <cassert>

namespace rsbm {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed)
    : seed_(seed), engine_(seeded_engine(seed)) {}

RngStream RngStream::split(std::uint64_t key) const {
  return RngStream(mix(seed_ ^ mix(key)));
}

RngStream RngStream::split(std::uint64_t key_hi, std::uint64_t key_lo) const {
  return RngStream(mix(seed_ ^ mix(mix(key_hi) ^ key_lo)));
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  assert(bound > 0);
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

double RngStream::unit() {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  return dist(engine_);
}

}  // namespace rsbm
