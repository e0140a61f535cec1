// Copyright 2026 The RSBM Authors.
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

#include "rsbm/experiment.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include "rsbm/errors.hpp"

namespace rsbm {

Json record_to_json(const ExperimentRecord& record) {
  return Json{{"timestamp", record.timestamp},
              {"subcommand", record.subcommand},
              {"config", record.config},
              {"result", record.result},
              {"version", record.version}};
}

ExperimentRecord record_from_json(const Json& j) {
  ExperimentRecord record;
  record.timestamp = j.at("timestamp").get<std::string>();
  record.subcommand = j.at("subcommand").get<std::string>();
  record.config = j.at("config");
  record.result = j.at("result");
  record.version = j.at("version").get<std::string>();
  return record;
}

void append_record(const std::filesystem::path& log,
                   const ExperimentRecord& record) {
  std::ofstream os(log, std::ios::binary | std::ios::app);
  if (!os) throw IoError("cannot open log " + log.string());
  os << record_to_json(record).dump() << '\n';
  if (!os) throw IoError("failed appending to log " + log.string());
}

std::vector<ExperimentRecord> read_records(const std::filesystem::path& log) {
  std::ifstream is(log, std::ios::binary);
  if (!is) throw IoError("cannot open log " + log.string());
  std::vector<ExperimentRecord> records;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw ValidationError("malformed log line in " + log.string(), {e.what()});
    }
  }
  return records;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rsbm
