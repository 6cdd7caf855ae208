// Copyright 2026 The ykdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ykdist/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace ykdist {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

void write_rate_report_csv(std::ostream& out, const RateReport& report, bool with_header) {
  if (with_header) out << kRateReportHeader << '\n';
  out << format_double(report.e_B) << ',' << format_double(report.e_E) << ','
      << format_double(report.F_plus) << ',' << format_double(report.I_AB) << ','
      << format_double(report.tau) << ',' << format_double(report.R) << ','
      << format_double(report.throughput_fraction) << '\n';
}

void write_key_hex(std::ostream& out, const BitString& key) { out << key.to_hex() << '\n'; }

void write_key_file(const std::filesystem::path& path, const BitString& key) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open key file " + path.string());
  write_key_hex(out, key);
  if (!out) throw std::runtime_error("failed writing key file " + path.string());
}

}  // namespace ykdist
