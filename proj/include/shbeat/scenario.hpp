#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shbeat/beating.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/report.hpp"

namespace shbeat {

/// Malformed or inconsistent scenario file. The message names the line (for
/// syntax errors) or the dotted field path.
class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

struct BeamSpec {
  double kinetic_energy_keV = 50.0;
  double current_uA = 0.4;
};

struct LaserSpec {
  double vacuum_wavelength_angstrom = 4880.0;
  double intensity_W_per_cm2 = 1.0e7;
};

struct SlabSpec {
  double refractive_index = 1.550;
  double thickness_angstrom = 1007.0;
  double beta_coupling = 0.35;
  /// Overrides the TM0 solve when set.
  std::optional<double> effective_index;
};

struct GeometrySpec {
  FocusScheme scheme = FocusScheme::fixed_r;
  std::optional<double> focus_distance_cm;
  std::optional<double> focus_ratio;
  double reference_distance_cm = 10.2;
  std::vector<double> mode_orders{12.0, 12.5, 13.0};
  double z_min_cm = 0.0;
  double z_max_cm = 40.0;
  double z_step_cm = 0.01;
};

struct PhenomenologicalSpec {
  double elastic_current_uA = 1.0;
  double sideband_current_uA = 0.31;
  double kappa = 1.0;
  double carrying_fraction = 1.0e-3;
  double target_power_W = 1.0e-10;
};

/// Relative tolerances for anchors whose published value is sensitive to
/// unstated inputs. Other anchors carry their own fixed tolerances.
struct ToleranceSpec {
  double r_triple_relative = 0.05;
  double fixed_ratio_relative = 0.02;
  double tm1_cutoff_relative = 0.02;
};

enum class OutputFormat { table, json, both };

struct OutputSpec {
  std::optional<std::filesystem::path> directory;
  OutputFormat format = OutputFormat::table;
};

struct ScenarioConfig {
  BeamSpec beam;
  LaserSpec laser;
  SlabSpec slab;
  GeometrySpec geometry;
  PhenomenologicalSpec phenomenological;
  /// Subset of {planewave, tm0, divergent, phenomenological}.
  std::vector<std::string> models{"planewave", "tm0", "divergent", "phenomenological"};
  OutputSpec output;
  ToleranceSpec tolerances;

  /// The published configuration: 50 keV, 4880 A, alpha-quartz n = 1.550,
  /// d = 1007 A, beta = 0.35.
  static ScenarioConfig golden();
  /// Checks every module precondition before dispatch. Throws ConfigError.
  void validate() const;
  bool has_model(std::string_view name) const;
  /// Published anchors apply only to the published configuration.
  bool matches_published_conditions() const;
};

ScenarioConfig parse_scenario_config(std::string_view json_text);
ScenarioConfig load_scenario_config(const std::filesystem::path& path);
std::string dump_scenario_config(const ScenarioConfig& config);

struct NamedSeries {
  std::string file_name;
  Series series;
};

struct ScenarioResult {
  ReportTable table;
  std::vector<NamedSeries> series;
};

ScenarioResult run_scenario(const ScenarioConfig& config);

/// Full reproduction report: every published anchor plus the model-identity
/// and scaling checks, on the golden configuration.
ScenarioResult reproduce_all(const ToleranceSpec& tolerances = {});

/// Writes report.json and every series CSV into dir (created if needed).
void write_outputs(const ScenarioResult& result, const std::filesystem::path& dir);

}  // namespace shbeat
