#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace shbeat {

enum class Provenance { published, derived, identity, computed };

/// How a row's computed value is judged against its reference.
enum class Check {
  none,       // informational
  absolute,   // |computed - ref| <= tol
  relative,   // |computed - ref| / |ref| <= tol
  interval,   // ref..ref_high widened by relative tol on each side
  at_least,   // computed >= ref
};

enum class RowStatus { pass, fail, info };

std::string_view to_string(Provenance p);
std::string_view to_string(RowStatus s);

/// Closed registry of reference anchors. Every row names one of these ids.
struct Anchor {
  std::string_view id;
  std::string_view label;
};
const std::vector<Anchor>& anchor_registry();
bool is_registered_anchor(std::string_view id);

struct ReportRow {
  std::string quantity;
  std::string unit;
  std::optional<double> reference;
  std::optional<double> reference_high;  // interval checks only
  double computed = 0.0;
  double deviation = 0.0;  // |computed - ref| / |ref|, distance to the interval for Check::interval
  Check check = Check::none;
  double tolerance = 0.0;
  Provenance provenance = Provenance::computed;
  std::string anchor;
  RowStatus status = RowStatus::info;
  std::string note;
};

class ReportTable {
 public:
  /// A computed value with no reference.
  void add_value(std::string quantity, std::string unit, double computed, std::string note = {});

  /// A computed value judged against a reference. Throws InvalidInput if
  /// the anchor is not registered.
  void add_check(std::string quantity, std::string unit, double computed, double reference,
                 Check check, double tolerance, Provenance provenance, std::string anchor,
                 std::string note = {});

  void add_interval_check(std::string quantity, std::string unit, double computed, double low,
                          double high, double tolerance, Provenance provenance,
                          std::string anchor, std::string note = {});

  const std::vector<ReportRow>& rows() const { return rows_; }
  const ReportRow* find(std::string_view quantity) const;
  bool all_passed() const;
  std::size_t failure_count() const;

 private:
  std::vector<ReportRow> rows_;
};

/// Fixed-width text table, values at 6 significant digits.
std::string render_text(const ReportTable& table);
nlohmann::json to_json(const ReportTable& table);

/// Column-oriented numeric series with named columns ("z_cm", ...).
struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // data[column][row]

  std::size_t row_count() const { return data.empty() ? 0 : data.front().size(); }
  void validate() const;
};

/// CSV with a header row; values written in shortest round-trip form so a
/// re-read reproduces them bit for bit.
std::string to_csv(const Series& series);
Series parse_csv(std::string_view text);

/// Shortest decimal that round-trips to the same double.
std::string format_full(double value);
/// 6 significant digits, as used in tables.
std::string format_short(double value);

}  // namespace shbeat
