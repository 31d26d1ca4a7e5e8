// Command-line front end: one subcommand per model plus the reproduction
// harness. Physical inputs come from --config (JSON) and per-flag overrides.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "shbeat/analysis.hpp"
#include "shbeat/beating.hpp"
#include "shbeat/constants.hpp"
#include "shbeat/kinematics.hpp"
#include "shbeat/phenomenological.hpp"
#include "shbeat/scenario.hpp"
#include "shbeat/slab_optics.hpp"
#include "shbeat/sweep.hpp"

namespace {

using namespace shbeat;

struct CommonOptions {
  std::string config_path;
  std::optional<double> energy_keV;
  std::optional<double> wavelength_angstrom;
  std::optional<double> index;
  std::optional<double> thickness_angstrom;
  std::optional<double> beta;
  std::optional<double> neff;
  std::string out_dir;
  bool json = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON scenario file")->check(CLI::ExistingFile);
    app->add_option("--energy-keV", energy_keV, "beam kinetic energy (keV)");
    app->add_option("--wavelength-angstrom", wavelength_angstrom, "laser vacuum wavelength (angstrom)");
    app->add_option("--index", index, "slab refractive index");
    app->add_option("--thickness-angstrom", thickness_angstrom, "slab thickness (angstrom)");
    app->add_option("--beta", beta, "laser coupling beta");
    app->add_option("--neff", neff, "effective index n cos(alpha), overrides the TM0 solve");
    app->add_option("--out", out_dir, "output directory for CSV/JSON files");
    app->add_flag("--json", json, "print JSON instead of a text table");
  }

  ScenarioConfig config() const {
    ScenarioConfig cfg = config_path.empty() ? ScenarioConfig::golden() : load_scenario_config(config_path);
    if (energy_keV) cfg.beam.kinetic_energy_keV = *energy_keV;
    if (wavelength_angstrom) cfg.laser.vacuum_wavelength_angstrom = *wavelength_angstrom;
    if (index) cfg.slab.refractive_index = *index;
    if (thickness_angstrom) cfg.slab.thickness_angstrom = *thickness_angstrom;
    if (beta) cfg.slab.beta_coupling = *beta;
    if (neff) cfg.slab.effective_index = *neff;
    if (!out_dir.empty()) cfg.output.directory = out_dir;
    if (json) cfg.output.format = OutputFormat::json;
    cfg.validate();
    return cfg;
  }
};

struct Inputs {
  BeamParameters beam;
  LaserField laser;
  SlabGeometry slab;
};

Inputs inputs_from(const ScenarioConfig& cfg) {
  return Inputs{BeamParameters::from_kinetic_energy(cfg.beam.kinetic_energy_keV, cfg.beam.current_uA),
                LaserField::from_vacuum_wavelength(cfg.laser.vacuum_wavelength_angstrom,
                                                   cfg.laser.intensity_W_per_cm2),
                SlabGeometry{cfg.slab.refractive_index, cfg.slab.thickness_angstrom,
                             cfg.laser.vacuum_wavelength_angstrom}};
}

ModeSolution mode_from(const ScenarioConfig& cfg, const SlabGeometry& slab) {
  if (cfg.slab.effective_index) {
    return ModeSolution::from_effective_index(slab.refractive_index, *cfg.slab.effective_index,
                                              slab.vacuum_wavelength_angstrom);
  }
  return solve_tm0_mode(slab);
}

void emit_table(const ReportTable& table, const ScenarioConfig& cfg) {
  if (cfg.output.format == OutputFormat::table || cfg.output.format == OutputFormat::both) {
    std::cout << render_text(table);
  }
  if (cfg.output.format == OutputFormat::json || cfg.output.format == OutputFormat::both) {
    std::cout << to_json(table).dump(2) << '\n';
  }
}

void emit_series(const std::string& file_name, const Series& series, const ScenarioConfig& cfg) {
  if (cfg.output.directory) {
    std::filesystem::create_directories(*cfg.output.directory);
    const auto path = *cfg.output.directory / file_name;
    std::ofstream out(path, std::ios::binary);
    out << to_csv(series);
    if (!out) throw std::runtime_error("failed to write " + path.string());
    std::cerr << "wrote " << path.string() << '\n';
  } else {
    std::cout << to_csv(series);
  }
}

int finish(const ScenarioResult& result, const ScenarioConfig& cfg) {
  emit_table(result.table, cfg);
  if (cfg.output.directory) {
    write_outputs(result, *cfg.output.directory);
    std::cerr << "wrote report.json and " << result.series.size() << " series to "
              << cfg.output.directory->string() << '\n';
  }
  return result.table.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial-beating models for laser-modulated electron beams crossing a dielectric film"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* kin = app.add_subcommand("kinematics", "beam and laser derived scalars");
  common.attach(kin);

  std::string model = "tm0";
  double z_cm = 10.2;
  double z0_cm = 10.2;
  std::optional<double> r_cm;
  std::optional<double> ratio;
  auto* beat = app.add_subcommand("beating", "beating phase and wavelength for one model");
  common.attach(beat);
  beat->add_option("--model", model, "planewave | tm0 | divergent")
      ->check(CLI::IsMember({"planewave", "tm0", "divergent"}));
  beat->add_option("--z", z_cm, "film-target distance (cm)");
  beat->add_option("--r", r_cm, "focus distance before the film (cm), fixed_r scheme");
  beat->add_option("--ratio", ratio, "r/(z+r), fixed_ratio scheme");
  double focus_m = 12.0;
  beat->add_option("--m", focus_m, "without --r/--ratio: solve r so that chi(z0) = m pi");
  beat->add_option("--z0", z0_cm, "reference maximum for --m (cm)");

  auto* mode_cmd = app.add_subcommand("mode-solve", "TM0 guided mode of the slab");
  common.attach(mode_cmd);

  double m_order = 12.0;
  auto* fit_r = app.add_subcommand("fit-r", "focus distance r placing chi(z0) = m pi");
  common.attach(fit_r);
  fit_r->add_option("--m", m_order, "mode order m (integer: cos^2 maximum, half-integer: sin^2)")->required();
  fit_r->add_option("--z0", z0_cm, "reference maximum (cm)");

  double target_cm = 1.70;
  auto* fixed = app.add_subcommand("fixed-ratio", "constant r/(z+r) giving a target lambda_b");
  common.attach(fixed);
  fixed->add_option("--target", target_cm, "target beating wavelength (cm)")->required();
  fixed->add_option("--z0", z0_cm, "reference maximum (cm)");

  std::string law = "all";
  std::string scheme;
  double z_min = 0.0, z_max = 40.0, z_step = 0.01;
  std::optional<double> j_elastic, j_sideband;
  auto* prof = app.add_subcommand("profile", "normalized intensity laws over z");
  common.attach(prof);
  prof->add_option("--law", law, "sin2 | cos2 | phenom | all")
      ->check(CLI::IsMember({"sin2", "cos2", "phenom", "all"}));
  prof->add_option("--scheme", scheme, "collimated | fixed_r | fixed_ratio");
  prof->add_option("--r", r_cm, "focus distance (cm)");
  prof->add_option("--ratio", ratio, "r/(z+r)");
  prof->add_option("--m", focus_m, "fixed_r without --r: solve r so that chi(z0) = m pi");
  prof->add_option("--z0", z0_cm, "reference maximum for --m (cm)");
  prof->add_option("--zmin", z_min, "grid start (cm)");
  prof->add_option("--zmax", z_max, "grid end (cm)");
  prof->add_option("--step", z_step, "grid step (cm)");
  prof->add_option("--elastic-current", j_elastic, "elastic beam current (uA)");
  prof->add_option("--sideband-current", j_sideband, "photon-carrying beam current (uA)");

  std::vector<double> orders;
  auto* fig = app.add_subcommand("figure2", "lambda_b(z) curves for several mode orders");
  common.attach(fig);
  fig->add_option("--m", orders, "mode orders (default 12 12.5 13)");
  fig->add_option("--z0", z0_cm, "reference maximum (cm)");

  auto* repro = app.add_subcommand("reproduce-all", "full reproduction report; exit 1 on any failed row");
  common.attach(repro);

  auto* run = app.add_subcommand("run", "run a JSON scenario");
  common.attach(run);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*kin) {
      auto cfg = common.config();
      cfg.models.clear();
      return finish(run_scenario(cfg), cfg);
    }
    if (*beat) {
      const auto cfg = common.config();
      const auto in = inputs_from(cfg);
      const auto mode = model == "planewave"
                            ? ModeSolution::from_effective_index(in.slab.refractive_index,
                                                                 in.slab.refractive_index,
                                                                 in.slab.vacuum_wavelength_angstrom)
                            : mode_from(cfg, in.slab);
      GeometryScenario geom;
      geom.z_cm = z_cm;
      if (r_cm) {
        geom.scheme = FocusScheme::fixed_r;
        geom.focus_distance_cm = *r_cm;
      } else if (ratio) {
        geom.scheme = FocusScheme::fixed_ratio;
        geom.ratio = *ratio;
      } else if (model == "divergent") {
        geom.scheme = FocusScheme::fixed_r;
        geom.focus_distance_cm =
            solve_r_for_phase(z0_cm, focus_m, PhaseCoefficients::from(in.beam, in.laser, mode))
                .focus_distance_cm;
      }
      const auto p = predict_beating(beating_model_from_string(model), geom, in.beam, in.laser, mode);
      ReportTable t;
      std::cerr << "model: " << to_string(p.model_tag) << '\n';
      t.add_value("z", "cm", z_cm);
      t.add_value("chi", "rad", p.phase);
      t.add_value("chi / pi", "-", p.phase / units::pi);
      t.add_value("lambda_b(z)", "cm", p.local_wavelength_cm);
      t.add_value("lambda_b asymptote", "cm", p.asymptotic_wavelength_cm);
      if (geom.scheme == FocusScheme::fixed_r) t.add_value("focus distance r", "cm", geom.focus_distance_cm);
      emit_table(t, cfg);
      return 0;
    }
    if (*mode_cmd) {
      const auto cfg = common.config();
      const auto in = inputs_from(cfg);
      const auto mode = mode_from(cfg, in.slab);
      ReportTable t;
      t.add_value("n cos(alpha)", "-", mode.effective_index);
      t.add_value("alpha", "rad", mode.tilt_angle);
      t.add_value("kappa (inside)", "1/m", mode.transverse_wavenumber);
      t.add_value("gamma (outside)", "1/m", mode.decay_constant);
      t.add_value("dispersion residual", "-", tm0_dispersion_residual(in.slab, mode.effective_index));
      t.add_value("TM1 cutoff thickness", "angstrom",
                  tm1_cutoff_thickness(in.slab.refractive_index, in.slab.vacuum_wavelength_angstrom));
      t.add_value("guided TM modes", "-", mode_count(in.slab));
      emit_table(t, cfg);
      return 0;
    }
    if (*fit_r) {
      const auto cfg = common.config();
      const auto in = inputs_from(cfg);
      const auto coeffs = PhaseCoefficients::from(in.beam, in.laser, mode_from(cfg, in.slab));
      const auto band = feasible_mode_orders(z0_cm, coeffs);
      const auto sol = solve_r_for_phase(z0_cm, m_order, coeffs);
      ReportTable t;
      t.add_value("m", "-", m_order);
      t.add_value("r/(z0+r)", "-", sol.ratio);
      t.add_value("focus distance r", "cm", sol.focus_distance_cm, sol.at_boundary ? "band edge" : "");
      t.add_value("feasible m low", "-", band.low);
      t.add_value("feasible m high", "-", band.high);
      emit_table(t, cfg);
      return 0;
    }
    if (*fixed) {
      const auto cfg = common.config();
      const auto in = inputs_from(cfg);
      const auto coeffs = PhaseCoefficients::from(in.beam, in.laser, mode_from(cfg, in.slab));
      auto record = ExperimentRecord::schwarz_dataset();
      record.reference_maximum_cm = z0_cm;
      const auto f = fit_fixed_ratio(record, target_cm, coeffs);
      const auto maxima = check_maxima_consistency(record, target_cm);
      ReportTable t;
      t.add_value("target lambda_b", "cm", target_cm);
      t.add_value("r/(z+r)", "-", f.ratio);
      t.add_value("focus distance r at z0", "cm", f.focus_distance_cm, f.at_boundary ? "band edge" : "");
      for (const auto& s : maxima.spacings) {
        t.add_value("maxima " + format_short(s.z_from_cm) + "-" + format_short(s.z_to_cm) + " half-periods",
                    "-", s.half_periods, "residual " + format_short(s.residual));
      }
      t.add_value("maxima consistent", "-", maxima.consistent ? 1.0 : 0.0);
      emit_table(t, cfg);
      return 0;
    }
    if (*prof) {
      auto cfg = common.config();
      if (!scheme.empty()) cfg.geometry.scheme = focus_scheme_from_string(scheme);
      if (r_cm) cfg.geometry.focus_distance_cm = *r_cm;
      if (ratio) cfg.geometry.focus_ratio = *ratio;
      if (j_elastic) cfg.phenomenological.elastic_current_uA = *j_elastic;
      if (j_sideband) cfg.phenomenological.sideband_current_uA = *j_sideband;
      const auto in = inputs_from(cfg);
      const auto coeffs = PhaseCoefficients::from(in.beam, in.laser, mode_from(cfg, in.slab));
      GeometryScenario geom;
      geom.scheme = cfg.geometry.scheme;
      if (geom.scheme == FocusScheme::fixed_r) {
        geom.focus_distance_cm = cfg.geometry.focus_distance_cm
                                     ? *cfg.geometry.focus_distance_cm
                                     : solve_r_for_phase(z0_cm, focus_m, coeffs).focus_distance_cm;
      } else if (geom.scheme == FocusScheme::fixed_ratio) {
        if (!cfg.geometry.focus_ratio) throw InvalidInput("fixed_ratio profile needs --ratio");
        geom.ratio = *cfg.geometry.focus_ratio;
      }
      const auto grid = sweep::uniform_grid(z_min, z_max, z_step);
      const auto amps = amplitudes_from_currents(cfg.phenomenological.elastic_current_uA,
                                                 cfg.phenomenological.sideband_current_uA,
                                                 cfg.phenomenological.kappa);
      const auto p = intensity_profile(grid, geom, coeffs, amps);
      Series s;
      s.columns = {"z_cm"};
      s.data = {p.z_cm};
      if (law == "sin2" || law == "all") { s.columns.push_back("I_sin2"); s.data.push_back(p.sin2); }
      if (law == "cos2" || law == "all") { s.columns.push_back("I_cos2"); s.data.push_back(p.cos2); }
      if (law == "phenom" || law == "all") { s.columns.push_back("I_phenom"); s.data.push_back(p.phenom); }
      emit_series("profile.csv", s, cfg);
      return 0;
    }
    if (*fig) {
      const auto cfg = common.config();
      const auto in = inputs_from(cfg);
      const auto coeffs = PhaseCoefficients::from(in.beam, in.laser, mode_from(cfg, in.slab));
      if (orders.empty()) orders = cfg.geometry.mode_orders;
      const auto grid = sweep::uniform_grid(cfg.geometry.z_min_cm, cfg.geometry.z_max_cm, cfg.geometry.z_step_cm);
      const auto curves = reproduce_figure2(coeffs, z0_cm, orders, grid);
      Series s;
      s.columns = {"z_cm"};
      s.data = {grid};
      for (const auto& c : curves) {
        std::ostringstream name;
        name << "lambda_b_m" << c.mode_order << "_cm";
        s.columns.push_back(name.str());
        s.data.push_back(c.lambda_b_cm);
        std::cerr << "m = " << c.mode_order << ": r = " << format_short(c.focus_distance_cm) << " cm\n";
      }
      emit_series("figure2.csv", s, cfg);
      return 0;
    }
    if (*repro) {
      const auto cfg = common.config();
      const auto result = reproduce_all(cfg.tolerances);
      const int rc = finish(result, cfg);
      std::cerr << (rc == 0 ? "all reproduction rows passed\n"
                            : std::to_string(result.table.failure_count()) + " reproduction row(s) failed\n");
      return rc;
    }
    if (*run) {
      const auto cfg = common.config();
      return finish(run_scenario(cfg), cfg);
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
