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

#ifndef SLOWCOL_ERRORS_HPP
#define SLOWCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slowcol {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (bad file, bad ids, violated precondition).
struct BadInput : Error {
    explicit BadInput(const std::string& what) : Error(what) {}
};

/// Instance too large for an exact computation (solver or search caps).
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Lister produced an illegal mark (empty, or not a subset of the uncolored set).
struct IllegalMark : Error {
    explicit IllegalMark(const std::string& what) : Error(what) {}
};

/// Painter produced an illegal response (empty, not a subset of the mark,
/// or not independent).
struct IllegalResponse : Error {
    explicit IllegalResponse(const std::string& what) : Error(what) {}
};

/// A game exceeded its round cap without coloring every vertex.
struct RoundCapExceeded : Error {
    explicit RoundCapExceeded(const std::string& what) : Error(what) {}
};

/// A quantity that is guaranteed nonnegative (or otherwise certified) by the
/// underlying theory came out wrong at runtime. Always indicates either a bug
/// or an input that violates a strategy's class certificate.
struct TheoryViolation : Error {
    explicit TheoryViolation(const std::string& what) : Error(what) {}
};

}  // namespace slowcol

#endif  // SLOWCOL_ERRORS_HPP
