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

#ifndef SLOWCOL_Q15_HPP
#define SLOWCOL_Q15_HPP

#include <cstdint>
#include <numeric>
#include <string>

namespace slowcol {

/// Exact fixed-denominator rational: an integer count of fifteenths.
///
/// Every potential value used by the potential-method painters is a multiple
/// of 1/3 or 1/5, so 1/15 is a common unit and all potential bookkeeping is
/// integer arithmetic. No floating point enters any strategy decision.
struct Q15 {
    std::int64_t fifteenths = 0;

    constexpr Q15() = default;
    constexpr explicit Q15(std::int64_t f) : fifteenths(f) {}

    static constexpr Q15 from_int(std::int64_t v) { return Q15(15 * v); }
    static constexpr Q15 from_thirds(std::int64_t thirds) { return Q15(5 * thirds); }
    static constexpr Q15 from_fifths(std::int64_t fifths) { return Q15(3 * fifths); }

    friend constexpr Q15 operator+(Q15 a, Q15 b) { return Q15(a.fifteenths + b.fifteenths); }
    friend constexpr Q15 operator-(Q15 a, Q15 b) { return Q15(a.fifteenths - b.fifteenths); }
    friend constexpr Q15 operator-(Q15 a) { return Q15(-a.fifteenths); }
    friend constexpr Q15 operator*(std::int64_t k, Q15 a) { return Q15(k * a.fifteenths); }
    Q15& operator+=(Q15 o) {
        fifteenths += o.fifteenths;
        return *this;
    }
    Q15& operator-=(Q15 o) {
        fifteenths -= o.fifteenths;
        return *this;
    }

    friend constexpr bool operator==(Q15 a, Q15 b) { return a.fifteenths == b.fifteenths; }
    friend constexpr bool operator!=(Q15 a, Q15 b) { return a.fifteenths != b.fifteenths; }
    friend constexpr bool operator<(Q15 a, Q15 b) { return a.fifteenths < b.fifteenths; }
    friend constexpr bool operator<=(Q15 a, Q15 b) { return a.fifteenths <= b.fifteenths; }
    friend constexpr bool operator>(Q15 a, Q15 b) { return a.fifteenths > b.fifteenths; }
    friend constexpr bool operator>=(Q15 a, Q15 b) { return a.fifteenths >= b.fifteenths; }

    double to_double() const { return static_cast<double>(fifteenths) / 15.0; }

    /// Largest integer <= value.
    std::int64_t floor() const {
        std::int64_t q = fifteenths / 15;
        if (fifteenths % 15 != 0 && fifteenths < 0) --q;
        return q;
    }

    /// Reduced fraction, e.g. "10/3", "7", "-2/15".
    std::string to_string() const {
        std::int64_t n = fifteenths;
        std::int64_t d = 15;
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (d == 1) return std::to_string(n);
        return std::to_string(n) + "/" + std::to_string(d);
    }
};

}  // namespace slowcol

#endif  // SLOWCOL_Q15_HPP
