// Copyright 2026 The FingerGrover Authors. All rights reserved.
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

#include "fingergrover/sweep.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fingergrover/errors.hpp"
#include "fingergrover/harness.hpp"
#include "fingergrover/random.hpp"

namespace fingergrover {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

SweepTable sweep(const SweepSpec& spec) {
  SweepTable table;
  std::uint64_t row_index = 0;
  for (std::uint64_t n : spec.n_values) {
    for (std::uint64_t m : spec.m_values) {
      const std::uint64_t index = row_index++;
      try {
        Rng instance_rng = Rng::derive(spec.seed, Stream::kInstance, index);
        const PlantedInstance instance = plant_unique_instance(n, m, instance_rng);
        const ComplexityReport complexity = complexity_report(n, m, spec.c);
        const std::uint64_t row_seed = Rng::derive(spec.seed, Stream::kTrial, index).next();
        const ErrorStats stats = estimate_error_rate(
            instance.text, instance.pattern, {spec.c, row_seed, false}, spec.trials);

        SweepRow row;
        row.n = n;
        row.m = m;
        row.c = spec.c;
        row.d = complexity.d;
        row.l = complexity.l;
        row.qubits = complexity.qubits_total;
        row.queries = complexity.queries;
        row.pi4_sqrt_n = complexity.pi4_sqrt_n;
        row.empirical_error = stats.empirical_rate;
        row.bound = stats.theoretical_bound;
        row.bad_fraction = stats.bad_draw_fraction;
        row.census_mass = stats.census_mass;
        row.trials = spec.trials;
        row.seed = spec.seed;
        row.stderr_rate = stats.stderr_rate;
        table.rows.push_back(row);
      } catch (const Error& e) {
        table.failures.push_back({n, m, e.what()});
      }
    }
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "n,m,c,d,l,qubits,queries,pi4_sqrt_n,empirical_error,bound,"
         "bad_fraction,census_mass,trials,seed\n";
  for (const SweepRow& r : table.rows) {
    out << r.n << ',' << r.m << ',' << r.c << ',' << r.d << ',' << r.l << ','
        << r.qubits << ',' << r.queries << ',' << format_double(r.pi4_sqrt_n) << ','
        << format_double(r.empirical_error) << ',' << format_double(r.bound) << ','
        << format_double(r.bad_fraction) << ',' << format_double(r.census_mass)
        << ',' << r.trials << ',' << r.seed << '\n';
  }
  return out.str();
}

std::string to_json(const SweepTable& table, bool pretty) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& r : table.rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["c"] = r.c;
    j["d"] = r.d;
    j["l"] = r.l;
    j["qubits"] = r.qubits;
    j["queries"] = r.queries;
    j["pi4_sqrt_n"] = r.pi4_sqrt_n;
    j["empirical_error"] = r.empirical_error;
    j["bound"] = r.bound;
    j["bad_fraction"] = r.bad_fraction;
    j["census_mass"] = r.census_mass;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    rows.push_back(std::move(j));
  }
  return rows.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace fingergrover
