#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "toricmf/exact_lattice.hpp"
#include "toricmf/fan.hpp"
#include "toricmf/ideal_gens.hpp"
#include "toricmf/macaulayfication.hpp"
#include "toricmf/oracle.hpp"
#include "toricmf/problem_model.hpp"

namespace toricmf {

/// Reads a problem document:
///   {"a": [...], "b": [...], "c": [...],
///    "torsion": {"moduli": [...], "h_x": [[...], ...], "h_z": [...], "h_y": [...]}}
/// Integers may be JSON integers or decimal strings. An optional "n" must match
/// the list lengths. Unknown keys are rejected. Throws InvalidInput.
ProblemSpec parse_input(std::string_view text);
ProblemSpec parse_input_file(const std::string& path);

struct AnalyzeOptions {
  bool verify = false;
  VerifyOptions verify_options;
};

struct AnalysisReport {
  ProblemSpec spec;
  Basis2 basis;
  FanDecomposition fan;
  InvariantReport fan_check;
  GeneratorReport generators;
  MacaulayReport macaulay;
  std::optional<VerificationReport> verification;
};

AnalysisReport run_analyze(const ProblemSpec& spec, const AnalyzeOptions& options = {});

enum class Section { All, Generators, Macaulayfy, Verify };

/// Human-readable report; `section` selects what follows the header.
std::string render_text(const AnalysisReport& report, Section section = Section::All);

/// Structured report. Every integer is a decimal string.
nlohmann::json to_json(const AnalysisReport& report);
std::string render_structured(const AnalysisReport& report);

/// Inverse of to_json on every numeric field. Throws InvalidInput.
AnalysisReport report_from_json(const nlohmann::json& doc);

}  // namespace toricmf
