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

#include "bispec/report.hpp"

#include <cstdlib>
#include <ctime>

namespace bispec {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

int count(const std::vector<CheckResult>& checks, CheckStatus s) {
  int n = 0;
  for (const auto& c : checks) n += (c.status == s) ? 1 : 0;
  return n;
}

}  // namespace

CheckResult CheckResult::pass(std::string name, std::string details, Json data) {
  return {std::move(name), CheckStatus::Pass, std::move(details), std::move(data)};
}
CheckResult CheckResult::fail(std::string name, std::string details, Json data) {
  return {std::move(name), CheckStatus::Fail, std::move(details), std::move(data)};
}
CheckResult CheckResult::skip(std::string name, std::string details) {
  return {std::move(name), CheckStatus::Skip, std::move(details), nullptr};
}

int SectionReport::passed() const { return count(checks, CheckStatus::Pass); }
int SectionReport::failed() const { return count(checks, CheckStatus::Fail); }
int SectionReport::skipped() const { return count(checks, CheckStatus::Skip); }

int VerificationReport::passed() const {
  int n = 0;
  for (const auto& s : sections) n += s.passed();
  return n;
}
int VerificationReport::failed() const {
  int n = 0;
  for (const auto& s : sections) n += s.failed();
  return n;
}
int VerificationReport::skipped() const {
  int n = 0;
  for (const auto& s : sections) n += s.skipped();
  return n;
}

Json VerificationReport::to_json() const {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["toolVersion"] = tool_version;
  j["timestampUTC"] = timestamp_utc;
  if (!options.is_null()) j["options"] = options;
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json js;
    js["name"] = s.name;
    js["passed"] = s.passed();
    js["failed"] = s.failed();
    js["skipped"] = s.skipped();
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json jc;
      jc["name"] = c.name;
      jc["status"] = status_name(c.status);
      if (!c.details.empty()) jc["details"] = c.details;
      if (!c.data.is_null()) jc["data"] = c.data;
      checks.push_back(std::move(jc));
    }
    js["checks"] = checks;
    secs.push_back(std::move(js));
  }
  j["sections"] = secs;
  j["overall"] = Json{{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
  return j;
}

void VerificationReport::render_text(std::ostream& out) const {
  for (const auto& s : sections) {
    out << "[" << s.name << "] passed=" << s.passed() << " failed=" << s.failed()
        << " skipped=" << s.skipped() << "\n";
    for (const auto& c : s.checks) {
      out << "  " << status_name(c.status) << "  " << c.name;
      if (!c.details.empty()) out << "  (" << c.details << ")";
      out << "\n";
    }
  }
  out << "overall: passed=" << passed() << " failed=" << failed() << " skipped=" << skipped()
      << "\n";
}

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0')
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace bispec
