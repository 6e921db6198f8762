/*
 * Copyright 2026 the slowcol authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SLOWCOL_RNG_HPP
#define SLOWCOL_RNG_HPP

#include <cstdint>

namespace slowcol {

/// 64-bit splittable PRNG (splitmix64 update function).
///
/// Every randomized component in the library takes one of these explicitly,
/// so a single seed printed in a report reproduces the entire run. split()
/// derives an independent stream; use it when handing randomness to a
/// subcomponent so that changing one consumer does not shift another's stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling keeps the distribution exactly uniform.
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bool(double p) { return next_double() < p; }

    /// Independent child stream.
    Rng split() { return Rng(next_u64() ^ 0x5851f42d4c957f2dULL); }

private:
    std::uint64_t state_;
};

}  // namespace slowcol

#endif  // SLOWCOL_RNG_HPP
