// Copyright 2026 The hocat Authors.
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

#ifndef HOCAT_REPORT_HPP_
#define HOCAT_REPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "hocat/congruence.hpp"
#include "hocat/deformation.hpp"
#include "hocat/document.hpp"
#include "hocat/fincat.hpp"
#include "hocat/homotopy.hpp"
#include "hocat/weq.hpp"

namespace hocat {

  enum class ReportFormat { text, json };

  // Pipeline stages in execution order.
  inline constexpr char const* kStageNames[] = {
      "axioms", "splits", "homotopy", "whitehead", "forks", "saturation", "deformation"};

  inline constexpr std::size_t kDefaultBudget = 8;

  struct AnalysisOptions {
    std::size_t budget = kDefaultBudget;
    // Requested stages; empty means all. Prerequisites are added.
    std::set<std::string> stages;
  };

  // Reads HOCAT_BUDGET, falling back to kDefaultBudget.
  std::size_t default_budget();

  // Throws PreconditionError for unknown stage names.
  std::set<std::string> resolve_stages(std::set<std::string> const& requested);

  struct ForkSide {
    ForkCheck         fork_condition;
    ForkCheck         common_fork;
    TransitivityCheck rc_transitive;
  };

  struct DeformationStage {
    DeformationChain                chain;
    FinCat                          c0;
    WeqFamily                       c0_family;
    std::optional<WhiteheadVerdict> c0_whitehead;
    std::optional<HoCr>             ho_cr;
    std::optional<InversionCheck>   inverts_w;
    std::optional<ConjugationReport> conjugation;
    // Morphisms outside W whose image under γ_r is invertible.
    std::optional<std::vector<MorphismId>> saturation_violations;
    std::vector<std::string>        notes;
  };

  struct StageTiming {
    std::string name;
    double      milliseconds;
  };

  struct AnalysisReport {
    FinCat                           category;
    std::set<std::string>            stages;  // stages that were scheduled
    std::optional<WeqFamily>         family;
    std::optional<SplitGeneration>   splits;
    std::optional<Congruence>        homotopy;
    std::optional<WhiteheadVerdict>  whitehead;
    std::optional<QuotientResult>    quotient;
    std::optional<ForkSide>          forks_left;
    std::optional<ForkSide>          forks_right;
    std::optional<SaturationReport>  saturation;
    std::optional<DeformationStage>  deformation;
    std::vector<std::string>         notes;
    std::vector<StageTiming>         timings;  // rendered in text only
  };

  // Runs the pipeline on an already loaded document. Throws ValidationError
  // if the category or deformation data is unlawful; analysis verdicts never
  // throw.
  AnalysisReport analyze(RawCategory const& raw, AnalysisOptions const& options);

  // load_spec_file followed by analyze. Throws ParseError on IO problems.
  AnalysisReport run_analysis(std::filesystem::path const& path,
                              AnalysisOptions const&       options);

  nlohmann::json report_json(AnalysisReport const& report);
  std::string    render_report(AnalysisReport const& report, ReportFormat format);

}  // namespace hocat

#endif  // HOCAT_REPORT_HPP_
