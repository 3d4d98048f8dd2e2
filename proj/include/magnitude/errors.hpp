/* Copyright 2026 The magnitude authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace magnitude {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Two input points coincide, so the separation axiom would fail.
class DuplicatePoint : public Error {
 public:
  using Error::Error;
};

class NonpositiveScale : public Error {
 public:
  using Error::Error;
};

/// The linear system is numerically singular (rcond below threshold).
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme hit its refinement or term cap before meeting tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// The exponentiated distance matrix cannot be inverted reliably, so no
/// weighting can be certified for this space.
class MagnitudeUndefined : public Error {
 public:
  using Error::Error;
};

/// The row-multiset homogeneity check failed.
class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace magnitude
