// Copyright 2026 The bispec Authors
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

#include <ostream>
#include <string>
#include <vector>

#include "bispec/json_io.hpp"

namespace bispec {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string details;
  Json data;  // optional structured payload (reports, constraint sets, ...)

  static CheckResult pass(std::string name, std::string details = "", Json data = nullptr);
  static CheckResult fail(std::string name, std::string details = "", Json data = nullptr);
  static CheckResult skip(std::string name, std::string details = "");
};

struct SectionReport {
  std::string name;
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  int skipped() const;
};

/// The machine-readable outcome of a verification run. failed == 0 is the
/// release gate; tallies always equal the per-section sums.
struct VerificationReport {
  std::string tool_version = kToolVersion;
  std::string timestamp_utc;
  Json options;
  std::vector<SectionReport> sections;

  int passed() const;
  int failed() const;
  int skipped() const;

  Json to_json() const;
  void render_text(std::ostream& out) const;
};

/// ISO-8601 UTC timestamp; honors SOURCE_DATE_EPOCH for reproducible output.
std::string utc_timestamp();

}  // namespace bispec
