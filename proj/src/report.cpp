#include "shbeat/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "shbeat/errors.hpp"

namespace shbeat {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::derived: return "derived";
    case Provenance::identity: return "identity";
    case Provenance::computed: return "computed";
  }
  return "?";
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "FAIL";
    case RowStatus::info: return "info";
  }
  return "?";
}

const std::vector<Anchor>& anchor_registry() {
  static const std::vector<Anchor> registry = {
      {"none", "no published reference"},
      {"velocity_ratio", "v0/c of a 50 keV beam"},
      {"energy_ratio", "E0 / hbar omega at 50 keV and 4880 A"},
      {"lambda_b0", "vacuum beating wavelength at 50 keV and 4880 A"},
      {"optimal_thickness", "smallest optimum slab thickness d0"},
      {"absorption_probability", "one-photon exchange probability at d = d0, beta = 0.35"},
      {"tm1_cutoff", "TM1 cutoff thickness for alpha-quartz"},
      {"lambda_b_planewave", "plane-wave beating wavelength for alpha-quartz"},
      {"lambda_b_tm0", "TM0 beating wavelength for alpha-quartz"},
      {"lambda_b0_upper_bound", "vacuum wavelength bounds every guided-mode wavelength"},
      {"lambda_b_asymptote", "large-z limit of the fixed-r local wavelength"},
      {"focus_distance_triple", "focus distances for m = 12, 12.5, 13 at z0 = 10.2 cm"},
      {"fixed_ratio_focus", "focus distance 4.55-4.57 cm for constant 1.70 cm beating"},
      {"maxima_positions", "intensity maxima at 10.2, 15.3 and 34.0 cm"},
      {"measured_lambda_b", "measured beating wavelengths 1.70, 1.75, 1.73 cm"},
      {"beating_discrepancy", "theory-experiment gap of more than 10% in lambda_b"},
      {"initial_phase", "intensity maximum at the film surface"},
      {"phase_doubling", "light phase difference is twice the electron beating phase"},
      {"current_linearity", "radiation intensity linear in beam current"},
      {"modulation_depth", "modulation depth of about 85%"},
      {"transported_power", "10^-10 W radiation from a 0.1% carrying fraction"},
  };
  return registry;
}

bool is_registered_anchor(std::string_view id) {
  const auto& reg = anchor_registry();
  return std::any_of(reg.begin(), reg.end(), [&](const Anchor& a) { return a.id == id; });
}

void ReportTable::add_value(std::string quantity, std::string unit, double computed,
                            std::string note) {
  ReportRow row;
  row.quantity = std::move(quantity);
  row.unit = std::move(unit);
  row.computed = computed;
  row.anchor = "none";
  row.note = std::move(note);
  rows_.push_back(std::move(row));
}

void ReportTable::add_check(std::string quantity, std::string unit, double computed,
                            double reference, Check check, double tolerance,
                            Provenance provenance, std::string anchor, std::string note) {
  if (!is_registered_anchor(anchor)) throw InvalidInput("unregistered report anchor '" + anchor + "'");
  ReportRow row;
  row.quantity = std::move(quantity);
  row.unit = std::move(unit);
  row.reference = reference;
  row.computed = computed;
  const double diff = std::abs(computed - reference);
  row.deviation = reference != 0.0 ? diff / std::abs(reference) : diff;
  row.check = check;
  row.tolerance = tolerance;
  row.provenance = provenance;
  row.anchor = std::move(anchor);
  row.note = std::move(note);
  bool ok = true;
  switch (check) {
    case Check::none: row.status = RowStatus::info; break;
    case Check::absolute: ok = diff <= tolerance; break;
    case Check::relative: ok = row.deviation <= tolerance; break;
    case Check::at_least: ok = computed >= reference; break;
    case Check::interval: ok = row.deviation <= tolerance; break;
  }
  if (check != Check::none) row.status = ok ? RowStatus::pass : RowStatus::fail;
  if (!std::isfinite(computed) && check != Check::none) row.status = RowStatus::fail;
  rows_.push_back(std::move(row));
}

void ReportTable::add_interval_check(std::string quantity, std::string unit, double computed,
                                     double low, double high, double tolerance,
                                     Provenance provenance, std::string anchor, std::string note) {
  if (!is_registered_anchor(anchor)) throw InvalidInput("unregistered report anchor '" + anchor + "'");
  ReportRow row;
  row.quantity = std::move(quantity);
  row.unit = std::move(unit);
  row.reference = low;
  row.reference_high = high;
  row.computed = computed;
  if (computed < low) {
    row.deviation = (low - computed) / std::abs(low);
  } else if (computed > high) {
    row.deviation = (computed - high) / std::abs(high);
  } else {
    row.deviation = 0.0;
  }
  row.check = Check::interval;
  row.tolerance = tolerance;
  row.provenance = provenance;
  row.anchor = std::move(anchor);
  row.note = std::move(note);
  row.status = (std::isfinite(computed) && row.deviation <= tolerance) ? RowStatus::pass : RowStatus::fail;
  rows_.push_back(std::move(row));
}

const ReportRow* ReportTable::find(std::string_view quantity) const {
  for (const auto& r : rows_) {
    if (r.quantity == quantity) return &r;
  }
  return nullptr;
}

bool ReportTable::all_passed() const { return failure_count() == 0; }

std::size_t ReportTable::failure_count() const {
  return static_cast<std::size_t>(std::count_if(
      rows_.begin(), rows_.end(), [](const ReportRow& r) { return r.status == RowStatus::fail; }));
}

std::string format_full(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string format_short(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", value);
  return std::string(buf.data());
}

namespace {

std::string tolerance_text(const ReportRow& row) {
  switch (row.check) {
    case Check::none: return "-";
    case Check::absolute: return "+-" + format_short(row.tolerance);
    case Check::relative: return format_short(row.tolerance * 100.0) + "%";
    case Check::interval: return "in range +" + format_short(row.tolerance * 100.0) + "%";
    case Check::at_least: return ">= ref";
  }
  return "-";
}

std::string reference_text(const ReportRow& row) {
  if (!row.reference) return "-";
  if (row.reference_high) return format_short(*row.reference) + "-" + format_short(*row.reference_high);
  return format_short(*row.reference);
}

}  // namespace

std::string render_text(const ReportTable& table) {
  struct Line {
    std::array<std::string, 8> cells;
  };
  std::vector<Line> lines;
  lines.push_back({{"quantity", "unit", "reference", "computed", "deviation", "tolerance",
                    "source", "status"}});
  for (const auto& r : table.rows()) {
    lines.push_back({{r.quantity, r.unit, reference_text(r), format_short(r.computed),
                      r.reference ? format_short(r.deviation) : "-", tolerance_text(r),
                      std::string(to_string(r.provenance)), std::string(to_string(r.status))}});
  }
  std::array<std::size_t, 8> width{};
  for (const auto& l : lines) {
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = std::max(width[i], l.cells[i].size());
  }
  std::ostringstream out;
  for (const auto& l : lines) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      out << l.cells[i];
      if (i + 1 < width.size()) out << std::string(width[i] - l.cells[i].size() + 2, ' ');
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json to_json(const ReportTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows()) {
    nlohmann::json j;
    j["quantity"] = r.quantity;
    j["unit"] = r.unit;
    j["reference"] = r.reference ? nlohmann::json(*r.reference) : nlohmann::json(nullptr);
    if (r.reference_high) j["reference_high"] = *r.reference_high;
    j["computed"] = std::isfinite(r.computed) ? nlohmann::json(r.computed) : nlohmann::json(nullptr);
    j["deviation"] = r.reference ? nlohmann::json(r.deviation) : nlohmann::json(nullptr);
    j["tolerance"] = r.check == Check::none ? nlohmann::json(nullptr) : nlohmann::json(r.tolerance);
    j["check"] = tolerance_text(r);
    j["provenance"] = to_string(r.provenance);
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    if (!r.note.empty()) j["note"] = r.note;
    rows.push_back(std::move(j));
  }
  return nlohmann::json{{"rows", rows},
                        {"failures", table.failure_count()},
                        {"all_passed", table.all_passed()}};
}

void Series::validate() const {
  if (columns.size() != data.size()) throw InvalidInput("series: column names and data differ in count");
  for (const auto& col : data) {
    if (col.size() != row_count()) throw InvalidInput("series: ragged columns");
  }
}

std::string to_csv(const Series& series) {
  series.validate();
  std::string out;
  for (std::size_t c = 0; c < series.columns.size(); ++c) {
    if (c) out += ',';
    out += series.columns[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < series.row_count(); ++r) {
    for (std::size_t c = 0; c < series.data.size(); ++c) {
      if (c) out += ',';
      out += format_full(series.data[c][r]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Series parse_csv(std::string_view text) {
  Series series;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (series.columns.empty()) {
      for (auto f : fields) series.columns.emplace_back(f);
      series.data.resize(fields.size());
      continue;
    }
    if (fields.size() != series.columns.size()) {
      throw InvalidInput("csv line " + std::to_string(line_no) + ": expected " +
                         std::to_string(series.columns.size()) + " fields");
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double v = 0.0;
      const auto res = std::from_chars(fields[c].data(), fields[c].data() + fields[c].size(), v);
      if (res.ec != std::errc{} || res.ptr != fields[c].data() + fields[c].size()) {
        throw InvalidInput("csv line " + std::to_string(line_no) + ": bad number '" +
                           std::string(fields[c]) + "'");
      }
      series.data[c].push_back(v);
    }
  }
  if (series.columns.empty()) throw InvalidInput("csv has no header row");
  return series;
}

}  // namespace shbeat
