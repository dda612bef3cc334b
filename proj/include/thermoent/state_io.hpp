// Copyright 2026 The thermoent Authors
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

// State file format (UTF-8 text):
//
//   # comment lines and trailing comments start with '#'
//   dims: 2 2
//   0 0 0.5 0
//   0 3 0.5 0
//   ...
//
// One `i j re im` line per matrix entry (0-based row and column, dim^2
// lines in any order, each entry exactly once).

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "thermoent/quantum.hpp"

namespace thermoent {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ParseError for malformed text and InvalidStateError when the
/// parsed matrix is not a density matrix (non-Hermitian, trace, positivity).
DensityMatrix read_state(std::istream& in);
DensityMatrix load_state(const std::filesystem::path& path);

/// Writes with 17 significant digits so that reading back is exact.
void write_state(std::ostream& out, const DensityMatrix& rho);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

/// Shortest decimal that round-trips, capped at 12 significant digits,
/// always with a '.' or exponent ("0.0", "2.0", "0.42246918846", "1e-05").
std::string format_real(double v);

}  // namespace thermoent
