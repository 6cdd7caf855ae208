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


// Text output shared by the tools: CSV rows with round-trip doubles and
// hex key files.

#ifndef YKDIST_REPORT_IO_HPP_
#define YKDIST_REPORT_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ykdist/bit_string.hpp"
#include "ykdist/security.hpp"

namespace ykdist {

/// Shortest decimal that parses back to the same double ("inf", "nan" for
/// non-finite values). Locale independent.
std::string format_double(double value);

/// Column names of a RateReport, in output order.
inline constexpr std::string_view kRateReportHeader = "eb,ee,f_plus,i_ab,tau,r,fr";

void write_rate_report_csv(std::ostream& out, const RateReport& report, bool with_header = true);

/// Writes `key` as lowercase hex on one line with a trailing newline.
void write_key_hex(std::ostream& out, const BitString& key);
/// Same, to a file. Throws std::runtime_error when the file cannot be written.
void write_key_file(const std::filesystem::path& path, const BitString& key);

}  // namespace ykdist

#endif  // YKDIST_REPORT_IO_HPP_
