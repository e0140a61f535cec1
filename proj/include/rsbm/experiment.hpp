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

#ifndef RSBM_EXPERIMENT_HPP_
#define RSBM_EXPERIMENT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "rsbm/io.hpp"

namespace rsbm {

inline constexpr const char* kVersion = "0.1.0";

// One line of the append-only JSONL experiment log. `config` holds every
// input the subcommand read (inline graphs included), so running it again
// must reproduce `result` exactly.
struct ExperimentRecord {
  std::string timestamp;
  std::string subcommand;
  Json config;
  Json result;
  std::string version = kVersion;
};

Json record_to_json(const ExperimentRecord& record);
ExperimentRecord record_from_json(const Json& j);

void append_record(const std::filesystem::path& log,
                   const ExperimentRecord& record);
std::vector<ExperimentRecord> read_records(const std::filesystem::path& log);

// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace rsbm

#endif  // RSBM_EXPERIMENT_HPP_
