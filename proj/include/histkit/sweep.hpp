#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace histkit {

// Inclusive, evenly spaced range with `steps` >= 2 samples.
struct GridAxis {
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;

  double at(std::size_t k) const;
};

struct OutputSet {
  bool concurrence = true;
  bool gamma = true;
  bool p_bell = true;
  bool boundary = false;

  // Comma-separated subset of: concurrence, gamma, p_bell, boundary.
  static OutputSet parse(std::string_view list);
};

struct SweepSpec {
  GridAxis g{0.0, 1.0, 50};
  GridAxis theta{0.0, 3.141592653589793, 50};
  OutputSet outputs;

  void validate() const;
};

enum class RowKind { Grid, Boundary };

// One evaluated (g, theta) point of the canonical protocol. Numeric fields
// are empty when the postselection probability vanishes; closed forms are
// always finite and always present.
struct PointRecord {
  RowKind kind = RowKind::Grid;
  double g = 0.0;
  double theta = 0.0;
  bool defined = false;

  double c_closed = 0.0;
  std::optional<double> c_numeric;
  double gamma_closed = 0.0;
  std::optional<double> gamma_numeric;
  std::optional<double> b_max;
  std::optional<bool> violating;
  double p_bell = 0.0;
  std::array<double, 4> weights{};
  std::array<std::optional<double>, 4> sector_concurrence{};

  const char* status() const { return defined ? "ok" : "undefined"; }
};

PointRecord evaluate_point(double g, double theta, RowKind kind = RowKind::Grid);

// Rows in g-major, then theta order. With outputs.boundary, each g > 0 is
// followed by one Boundary row evaluated at theta_B(g).
std::vector<PointRecord> evaluate_grid(const SweepSpec& spec, int threads = 0);
// Same rows, evaluated on the calling thread only.
std::vector<PointRecord> evaluate_grid_serial(const SweepSpec& spec);

// HISTKIT_THREADS, 0 or unset meaning "let OpenMP decide".
int thread_count_from_env();

// Floats use 17 significant digits; empty cells (CSV) or null (JSON) mark
// undefined values.
void write_csv(std::ostream& os, const std::vector<PointRecord>& rows, const OutputSet& outputs);
void write_json(std::ostream& os, const std::vector<PointRecord>& rows, const OutputSet& outputs);

// Reads what write_csv produced. Columns absent from the header keep their
// default values.
std::vector<PointRecord> read_csv(std::istream& is);

std::string format_double(double v);

}  // namespace histkit
