// Copyright 2026 The qinfo Authors
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

#pragma once

#include <cstdint>
#include <random>

namespace qinfo {

/// Random engine used everywhere a sampling decision is made. Always passed
/// explicitly so that every run is reproducible from its seed.
using Rng = std::mt19937_64;

/// Engine for stream `stream` of a seeded family. Streams with distinct
/// indices are decorrelated through a splitmix64 finalizer.
Rng derive_rng(uint64_t seed, uint64_t stream);

/// Uniform double in [0, 1) built from the top 53 bits of one draw, so the
/// sequence does not depend on the standard library's distribution code.
double uniform01(Rng &rng);

/// Uniform integer in [0, bound). bound must be nonzero.
uint64_t uniform_below(Rng &rng, uint64_t bound);

inline bool random_bit(Rng &rng) { return (rng() >> 63) != 0; }

}  // namespace qinfo
