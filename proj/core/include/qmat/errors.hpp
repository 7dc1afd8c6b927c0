// Copyright 2026 The qmat developers
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

#include <stdexcept>
#include <string>

namespace qmat {

/// Requested register size exceeds the simulator capacity bound.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A qubit index or matrix address is out of range for the target object.
class AddressError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A numeric parameter lies outside its admissible interval.
class RangeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Operand shapes do not agree (register sizes, matrix dimensions).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant broke: lost norm, or a scale ledger that no
/// longer matches the state it describes.
class InconsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input data (CSV/JSON) could not be parsed or contains non-finite values.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qmat
