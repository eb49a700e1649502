/*
   Copyright 2026 The apolar authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef APOLAR_PIPELINES_HPP
#define APOLAR_PIPELINES_HPP

#include <json.hpp>

#include "apolar/liaison.hpp"

namespace apolar {

struct PipelineError : std::runtime_error {
  PipelineError(const std::string& stage, const std::string& what)
      : std::runtime_error("stage " + stage + ": " + what), stage(stage) {}
  std::string stage;
};

struct StageRecord {
  std::string name;
  std::string ring;
  std::vector<std::string> ideal;  // canonical reduced basis, one generator per entry
  std::vector<long> hilbert;
  long degree = -1;
  nlohmann::json extra;
};

struct PipelineReport {
  std::string example;
  std::string field;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::vector<StageRecord> stages;

  std::string form;
  int kernel_dim = 0;
  bool apolar_first = false;
  bool apolar_second = false;
  std::vector<long> hf_row_first;
  std::vector<long> hf_row_second;
  bool hf_rows_differ = false;
  int reg_first = -1;
  int reg_second = -1;
  bool linkage_first = false;
  bool linkage_second = false;
  bool cb_union = false;
  long h1_union = -1;
  long rank_bound = -1;
  bool ok = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Degree-10 construction: 22 general points, a collinear triple, the
/// singular image cubic and its line fiber, a (7,7) complete intersection,
/// and the residual 22 points sharing a degree-10 annihilated form.
PipelineReport run_example1(const RandomConfig& cfg, const Field& field);

/// Degree-13 construction: 12 points on the cuspidal cubic, links through
/// (6,7) and (6,10) complete intersections, the unique common degree-13
/// form, and the cardinality certificate.
PipelineReport run_example2(const RandomConfig& cfg, const Field& field);

}  // namespace apolar

#endif  // APOLAR_PIPELINES_HPP
