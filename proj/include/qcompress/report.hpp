// Copyright 2026 The qcompress Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "qcompress/experiment.hpp"

namespace qcompress {

enum class ReportFormat { Table, Csv, Json };

/// "table", "csv" or "json". Throws ConfigError otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Throws SpecError for a report without rows or whose first row is not
/// Vanilla.
std::string format_report(const Report &report, ReportFormat format);

/// Writes format_report() to `path`. Throws IoError if it cannot be written.
void emit_report(const Report &report, ReportFormat format, const std::filesystem::path &path);

/// Inverse of the CSV format. Throws ParseError on malformed input.
Report parse_report_csv(std::string_view text);

} // namespace qcompress
