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

#include "thermoent/state_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace thermoent {

namespace {

std::string message_at(int line, const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ": " << message;
  return os.str();
}

std::string strip(std::string s) {
  if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> fields(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

template <class T>
bool parse_number(const std::string& tok, T& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string to_chars_string(double v, int precision) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, precision);
  return std::string(buf.data(), res.ptr);
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(message_at(line, message)), line_(line) {}

DensityMatrix read_state(std::istream& in) {
  std::vector<int> dims;
  int total = 0;
  ComplexMatrix m;
  std::vector<bool> seen;
  int entries = 0;
  int line_no = 0;
  int dims_line = 0;

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    auto tok = fields(line);

    if (dims.empty()) {
      if (tok.front() != "dims:") {
        throw ParseError(line_no, "expected 'dims: d1 d2 ...' header");
      }
      if (tok.size() < 2) throw ParseError(line_no, "dims header lists no dimensions");
      total = 1;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        int d = 0;
        if (!parse_number(tok[k], d) || d < 1) {
          throw ParseError(line_no, "field " + std::to_string(k) +
                                        ": invalid dimension '" + tok[k] + "'");
        }
        dims.push_back(d);
        total *= d;
        if (total > kMaxDim) {
          throw ParseError(line_no, "total dimension exceeds " + std::to_string(kMaxDim));
        }
      }
      m = ComplexMatrix::Zero(total, total);
      seen.assign(static_cast<std::size_t>(total * total), false);
      dims_line = line_no;
      continue;
    }

    if (tok.size() != 4) {
      throw ParseError(line_no, "expected 4 fields 'i j re im', found " +
                                    std::to_string(tok.size()));
    }
    int i = 0, j = 0;
    double re = 0.0, im = 0.0;
    if (!parse_number(tok[0], i) || i < 0 || i >= total) {
      throw ParseError(line_no, "field 1: invalid row index '" + tok[0] + "'");
    }
    if (!parse_number(tok[1], j) || j < 0 || j >= total) {
      throw ParseError(line_no, "field 2: invalid column index '" + tok[1] + "'");
    }
    if (!parse_number(tok[2], re) || !std::isfinite(re)) {
      throw ParseError(line_no, "field 3: invalid real part '" + tok[2] + "'");
    }
    if (!parse_number(tok[3], im) || !std::isfinite(im)) {
      throw ParseError(line_no, "field 4: invalid imaginary part '" + tok[3] + "'");
    }
    const auto slot = static_cast<std::size_t>(i * total + j);
    if (seen[slot]) {
      throw ParseError(line_no, "duplicate entry (" + tok[0] + ", " + tok[1] + ")");
    }
    seen[slot] = true;
    m(i, j) = Complex(re, im);
    ++entries;
  }

  if (dims.empty()) throw ParseError(line_no, "missing 'dims:' header");
  if (entries != total * total) {
    for (std::size_t s = 0; s < seen.size(); ++s) {
      if (!seen[s]) {
        throw ParseError(dims_line, "missing entry (" + std::to_string(s / total) +
                                        ", " + std::to_string(s % total) + "); " +
                                        std::to_string(entries) + " of " +
                                        std::to_string(total * total) + " present");
      }
    }
  }

  try {
    return DensityMatrix(HermitianOperator(m), dims);
  } catch (const NotHermitianError& e) {
    throw InvalidStateError(e.what());
  }
}

DensityMatrix load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file '" + path.string() + "'");
  return read_state(in);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  out << "dims:";
  for (int d : rho.subsystem_dims()) out << ' ' << d;
  out << '\n';
  const int n = rho.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex z = rho.matrix()(i, j);
      out << i << ' ' << j << ' ' << to_chars_string(z.real(), 17) << ' '
          << to_chars_string(z.imag(), 17) << '\n';
    }
  }
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_state(out, rho);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string format_real(double v) {
  if (v == 0.0) return "0.0";  // also folds -0.0
  std::string s;
  for (int p = 1; p <= 12; ++p) {
    s = to_chars_string(v, p);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    if (back == v) break;
  }
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace thermoent
