// Copyright 2026 The clonesim Authors
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

#pragma once

#include <stdexcept>

namespace clonesim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/** An argument outside the operation's domain (index range, parity). */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** The requested object would exceed the 256-dimensional cap. */
class CapacityError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

/** A value failed its type invariant (density matrix, unitary, ...). */
class InvariantError : public Error {
 public:
  using Error::Error;
};

/** Malformed input file or JSON document. */
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace clonesim
