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

#include "rsbm/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "rsbm/analysis.hpp"
#include "rsbm/errors.hpp"
#include "rsbm/oracles.hpp"
#include "rsbm/samplers.hpp"

namespace rsbm {
namespace {

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> n;
  std::optional<int> d;
  bool bipartite = false;
  std::optional<long> samples;
  long max_attempts = kDefaultMaxAttempts;
  std::optional<std::uint64_t> cap;
  std::string mode = "exhaustive";
  bool dedup_symmetry = false;
  std::string log = "experiments.jsonl";
  std::string graph;
  std::string partition;
  std::optional<long> index;
};

const std::vector<std::string> kSubcommands = {
    "sample",  "enumerate", "membership",    "uniqueness", "uniformity",
    "analyze", "spectral",  "tv-experiment", "replay"};

std::uint64_t require_seed(const Flags& f, const std::string& cmd) {
  if (!f.seed) throw ValidationError(cmd + " requires --seed");
  return *f.seed;
}

Json require_params(const Flags& f, const std::string& cmd) {
  if (f.config.empty()) throw ValidationError(cmd + " requires --config");
  return params_to_json(load_params(f.config));
}

Json require_graph(const Flags& f, const std::string& cmd) {
  if (f.graph.empty()) throw ValidationError(cmd + " requires --graph");
  return graph_to_json(load_edge_list(f.graph));
}

// Translates flags into the self-contained config stored in the log.
Json resolve_config(const std::string& cmd, const Flags& f) {
  Json c = Json::object();
  if (cmd == "sample") {
    c["params"] = require_params(f, cmd);
    c["seed"] = require_seed(f, cmd);
    c["max_attempts"] = f.max_attempts;
  } else if (cmd == "enumerate") {
    if (!f.n || !f.d) throw ValidationError("enumerate requires --n and --d");
    const OracleCaps defaults;
    c["n"] = *f.n;
    c["d"] = *f.d;
    c["bipartite"] = f.bipartite;
    c["cap"] = f.cap ? static_cast<int>(*f.cap)
                     : (f.bipartite ? defaults.bipartite_n : defaults.regular_n);
  } else if (cmd == "membership") {
    c["params"] = require_params(f, cmd);
    c["graph"] = require_graph(f, cmd);
    c["dedup_symmetry"] = f.dedup_symmetry;
    c["cap"] = f.cap.value_or(OracleCaps{}.partitions);
  } else if (cmd == "uniqueness") {
    c["params"] = require_params(f, cmd);
    c["cap"] = f.cap.value_or(OracleCaps{}.partitions);
    if (!f.graph.empty()) {
      if (f.partition.empty()) {
        throw ValidationError("uniqueness with --graph requires --partition");
      }
      c["graph"] = require_graph(f, cmd);
      c["planted"] = partition_to_json(load_partition(f.partition));
    } else {
      c["seed"] = require_seed(f, cmd);
      c["samples"] = f.samples.value_or(1);
      c["max_attempts"] = f.max_attempts;
    }
  } else if (cmd == "uniformity") {
    if (!f.n || !f.d) throw ValidationError("uniformity requires --n and --d");
    const OracleCaps defaults;
    c["n"] = *f.n;
    c["d"] = *f.d;
    c["bipartite"] = f.bipartite;
    c["samples"] = f.samples.value_or(30'000);
    c["seed"] = require_seed(f, cmd);
    c["max_attempts"] = f.max_attempts;
    c["cap"] = f.cap ? static_cast<int>(*f.cap)
                     : (f.bipartite ? defaults.bipartite_n : defaults.regular_n);
  } else if (cmd == "analyze") {
    c["params"] = require_params(f, cmd);
  } else if (cmd == "spectral") {
    c["graph"] = require_graph(f, cmd);
    if (f.d) c["d"] = *f.d;
    if (f.mode != "exhaustive" && f.mode != "sampled") {
      throw ValidationError("--mode must be exhaustive or sampled");
    }
    c["mode"] = f.mode;
    c["cap"] = f.cap ? static_cast<int>(*f.cap) : ExpansionOptions{}.exhaustive_cap;
    if (f.mode == "sampled") {
      c["seed"] = require_seed(f, cmd);
      c["samples"] = f.samples.value_or(ExpansionOptions{}.samples);
    }
  } else if (cmd == "tv-experiment") {
    c["params"] = require_params(f, cmd);
    c["samples"] = f.samples.value_or(2000);
    c["seed"] = require_seed(f, cmd);
    c["max_attempts"] = f.max_attempts;
    c["cap"] = f.cap.value_or(OracleCaps{}.partitions);
  }
  return c;
}

OracleCaps partition_caps(const Json& c) {
  OracleCaps caps;
  caps.partitions = c.at("cap").get<std::uint64_t>();
  return caps;
}

Json run_sample(const Json& c) {
  const RsbmParams params = params_from_json(c.at("params"));
  RngStream rng(c.at("seed").get<std::uint64_t>());
  const RsbmSample s = sample_rsbm(params, rng, c.at("max_attempts").get<long>());
  Json payload = graph_to_json(s.graph);
  payload["k"] = params.k();
  payload["n"] = params.n;
  payload["d"] = params.degree();
  payload["partition"] = partition_to_json(s.partition);
  payload["attempts"] = s.attempts;
  return payload;
}

Json run_enumerate(const Json& c) {
  const int n = c.at("n").get<int>();
  const int d = c.at("d").get<int>();
  const bool bipartite = c.at("bipartite").get<bool>();
  OracleCaps caps;
  (bipartite ? caps.bipartite_n : caps.regular_n) = c.at("cap").get<int>();
  const EnumerationResult r = bipartite
                                  ? enumerate_bipartite_regular(n, d, false, caps)
                                  : enumerate_regular(n, d, false, caps);
  Json payload{{"n", n}, {"d", d}, {"bipartite", bipartite},
               {"count", big_count_to_json(r.count)}};
  if (bipartite || (n * d) % 2 == 0) {
    payload["pairings"] = big_count_to_json(count_pairings(n, d, bipartite));
  }
  return payload;
}

Json run_membership(const Json& c) {
  const RsbmParams params = params_from_json(c.at("params"));
  const LabeledGraph graph = graph_from_json(c.at("graph"));
  return support_membership(graph, params, c.at("dedup_symmetry").get<bool>(),
                            partition_caps(c));
}

Json run_uniqueness(const Json& c) {
  const RsbmParams params = params_from_json(c.at("params"));
  const OracleCaps caps = partition_caps(c);
  if (c.contains("graph")) {
    return uniqueness_census(graph_from_json(c.at("graph")), params,
                             partition_from_json(c.at("planted")), caps);
  }
  const RngStream base(c.at("seed").get<std::uint64_t>());
  const long samples = c.at("samples").get<long>();
  const long max_attempts = c.at("max_attempts").get<long>();
  Json instances = Json::array();
  long unique = 0;
  for (long i = 0; i < samples; ++i) {
    RngStream stream = base.split(static_cast<std::uint64_t>(i));
    const RsbmSample s = sample_rsbm(params, stream, max_attempts);
    const CensusReport r = uniqueness_census(s.graph, params, s.partition, caps);
    Json entry = r;
    entry["index"] = i;
    instances.push_back(std::move(entry));
    if (r.unique()) ++unique;
  }
  return Json{{"samples", samples},
              {"unique_instances", unique},
              {"instances", std::move(instances)}};
}

Json run_uniformity(const Json& c) {
  const bool bipartite = c.at("bipartite").get<bool>();
  OracleCaps caps;
  (bipartite ? caps.bipartite_n : caps.regular_n) = c.at("cap").get<int>();
  RngStream rng(c.at("seed").get<std::uint64_t>());
  Json payload = empirical_uniformity_test(
      c.at("n").get<int>(), c.at("d").get<int>(), bipartite,
      c.at("samples").get<long>(), rng, c.at("max_attempts").get<long>(), caps);
  payload["n"] = c.at("n");
  payload["d"] = c.at("d");
  payload["bipartite"] = bipartite;
  return payload;
}

Json run_analyze(const Json& c) {
  const RsbmParams params = params_from_json(c.at("params"));
  const BoundReport bound = support_measure_bound(params);
  return Json{{"params", params_to_json(params)},
              {"d", params.degree()},
              {"validation", validate_params(params)},
              {"r_k", bound.ratio},
              {"bound", bound},
              {"hypotheses", check_uniqueness_hypotheses(params.matrix)},
              {"gm_hm", gm_hm_check(params.matrix)}};
}

Json run_spectral(const Json& c) {
  const LabeledGraph graph = graph_from_json(c.at("graph"));
  int d = 0;
  if (c.contains("d")) {
    d = c.at("d").get<int>();
  } else if (auto reg = graph.regular_degree()) {
    d = *reg;
  } else {
    throw ValidationError("graph is not regular");
  }
  ExpansionOptions options;
  options.exhaustive_cap = c.at("cap").get<int>();
  if (c.at("mode").get<std::string>() == "sampled") {
    options.mode = ExpansionMode::kSampled;
    options.samples = c.at("samples").get<long>();
    RngStream rng(c.at("seed").get<std::uint64_t>());
    return expansion_check(graph, d, options, &rng);
  }
  return expansion_check(graph, d, options);
}

Json run_tv(const Json& c) {
  const RsbmParams params = params_from_json(c.at("params"));
  TvOptions options;
  options.max_attempts = c.at("max_attempts").get<long>();
  options.caps = partition_caps(c);
  RngStream rng(c.at("seed").get<std::uint64_t>());
  return tv_lower_bound_experiment(params, c.at("samples").get<long>(), rng,
                                   options);
}

int exit_code_of(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e)) return kExitIo;
  if (dynamic_cast<const CapExceeded*>(&e) ||
      dynamic_cast<const RejectionFailure*>(&e)) {
    return kExitResource;
  }
  return kExitValidation;
}

Json error_json(const std::exception& e, int code) {
  Json j{{"error", code == kExitIo         ? "io"
                   : code == kExitResource ? "resource"
                                           : "validation"},
         {"message", e.what()},
         {"exit_code", code}};
  if (auto* v = dynamic_cast<const ValidationError*>(&e)) {
    j["details"] = v->details();
  } else if (auto* r = dynamic_cast<const RejectionFailure*>(&e)) {
    j["attempts"] = r->attempts();
  } else if (auto* cap = dynamic_cast<const CapExceeded*>(&e)) {
    auto number = [](double x) -> Json {
      if (x == std::floor(x) && std::abs(x) < 9.0e15) {
        return static_cast<std::int64_t>(x);
      }
      return x;
    };
    j["requested"] = number(cap->requested());
    j["cap"] = number(cap->cap());
  }
  return j;
}

void emit(const std::string& cmd, const Json& payload, const Flags& f,
          std::ostream& out) {
  if (f.out.empty()) {
    out << payload.dump(2) << '\n';
    return;
  }
  if (cmd == "sample") {
    save_text(f.out, edge_list_string(graph_from_json(payload)));
    save_text(f.out + ".partition",
              partition_string(partition_from_json(payload.at("partition"))));
  } else {
    save_text(f.out, payload.dump(2) + "\n");
  }
}

Json run_replay(const Flags& f) {
  const auto records = read_records(f.log);
  if (records.empty()) throw ValidationError("log " + f.log + " is empty");
  long index = f.index.value_or(-1);
  if (index < 0) index += static_cast<long>(records.size());
  if (index < 0 || index >= static_cast<long>(records.size())) {
    throw ValidationError("log index out of range");
  }
  const ReplayOutcome outcome = replay(records[index]);
  return Json{{"index", index},
              {"subcommand", records[index].subcommand},
              {"identical", outcome.identical}};
}

}  // namespace

Json execute(const std::string& cmd, const Json& config) {
  try {
    if (cmd == "sample") return run_sample(config);
    if (cmd == "enumerate") return run_enumerate(config);
    if (cmd == "membership") return run_membership(config);
    if (cmd == "uniqueness") return run_uniqueness(config);
    if (cmd == "uniformity") return run_uniformity(config);
    if (cmd == "analyze") return run_analyze(config);
    if (cmd == "spectral") return run_spectral(config);
    if (cmd == "tv-experiment") return run_tv(config);
  } catch (const Json::exception& e) {
    throw ValidationError("malformed config for " + cmd, {e.what()});
  }
  throw ValidationError("unknown subcommand " + cmd);
}

ReplayOutcome replay(const ExperimentRecord& record) {
  if (record.config.is_null()) {
    throw ValidationError("record failed before its config was resolved");
  }
  ReplayOutcome outcome;
  outcome.logged = record.result.dump();
  try {
    outcome.replayed = execute(record.subcommand, record.config).dump();
  } catch (const std::exception& e) {
    outcome.replayed = error_json(e, exit_code_of(e)).dump();
  }
  outcome.identical = outcome.logged == outcome.replayed;
  return outcome;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Regular stochastic block model toolkit", "rsbm"};
  app.require_subcommand(1);
  Flags f;
  for (const auto& name : kSubcommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--log", f.log, "Experiment log (JSONL)");
    sub->add_option("--out", f.out, "Write the report here instead of stdout");
    if (name == "replay") {
      sub->add_option("--index", f.index, "Record index, negative from the end");
      continue;
    }
    sub->add_option("--config", f.config, "Model parameters (JSON)");
    sub->add_option("--seed", f.seed, "Random seed");
    sub->add_option("--n", f.n, "Vertices per side / graph size");
    sub->add_option("--d", f.d, "Degree");
    sub->add_flag("--bipartite", f.bipartite, "Bipartite variant");
    sub->add_option("--samples", f.samples, "Sample count");
    sub->add_option("--max-attempts", f.max_attempts, "Rejection cap");
    sub->add_option("--cap", f.cap, "Size cap for exhaustive search");
    sub->add_option("--mode", f.mode, "exhaustive|sampled");
    sub->add_flag("--dedup-symmetry", f.dedup_symmetry,
                  "Count partitions up to cluster relabeling");
    sub->add_option("--graph", f.graph, "Edge-list file");
    sub->add_option("--partition", f.partition, "Partition file");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << Json{{"error", "validation"}, {"message", e.what()},
                {"exit_code", kExitValidation}}
               .dump()
        << '\n';
    return kExitValidation;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  ExperimentRecord record;
  record.timestamp = utc_timestamp();
  record.subcommand = cmd;
  try {
    if (cmd == "replay") {
      emit(cmd, run_replay(f), f, out);
      return kExitOk;
    }
    record.config = resolve_config(cmd, f);
    record.result = execute(cmd, record.config);
    emit(cmd, record.result, f, out);
    append_record(f.log, record);
    return kExitOk;
  } catch (const std::exception& e) {
    const int code = exit_code_of(e);
    const Json error = error_json(e, code);
    err << error.dump() << '\n';
    if (cmd != "replay") {
      record.result = error;
      try {
        append_record(f.log, record);
      } catch (const IoError&) {
      }
    }
    return code;
  }
}

}  // namespace rsbm
