#include "histkit/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "histkit/analysis.hpp"
#include "histkit/protocol.hpp"
#include "histkit/tolerances.hpp"

namespace histkit {

namespace {

constexpr const char* kSectorTags[4] = {"pp", "pm", "mp", "mm"};

struct Task {
  double g;
  double theta;
  RowKind kind;
};

std::vector<Task> plan(const SweepSpec& spec) {
  spec.validate();
  std::vector<Task> tasks;
  tasks.reserve(spec.g.steps * (spec.theta.steps + 1));
  for (std::size_t a = 0; a < spec.g.steps; ++a) {
    const double g = spec.g.at(a);
    for (std::size_t b = 0; b < spec.theta.steps; ++b) tasks.push_back({g, spec.theta.at(b), RowKind::Grid});
    if (spec.outputs.boundary && g > 0.0) tasks.push_back({g, bell_boundary(g), RowKind::Boundary});
  }
  return tasks;
}

std::vector<std::string> columns(const OutputSet& out) {
  std::vector<std::string> cols{"kind", "g", "theta", "status"};
  if (out.concurrence) {
    cols.insert(cols.end(), {"C_closed", "C_numeric"});
    for (const char* t : kSectorTags) cols.push_back(std::string("C_") + t);
  }
  if (out.gamma) cols.insert(cols.end(), {"gamma_closed", "gamma_numeric", "b_max", "violating"});
  if (out.p_bell) {
    cols.push_back("p_bell");
    for (const char* t : kSectorTags) cols.push_back(std::string("P_") + t);
  }
  return cols;
}

// Cell text per column; std::nullopt renders as an empty cell / null.
std::optional<std::string> cell(const PointRecord& r, const std::string& col) {
  auto num = [](std::optional<double> v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return format_double(*v);
  };
  if (col == "kind") return std::string(r.kind == RowKind::Grid ? "grid" : "boundary");
  if (col == "g") return format_double(r.g);
  if (col == "theta") return format_double(r.theta);
  if (col == "status") return std::string(r.status());
  if (col == "C_closed") return format_double(r.c_closed);
  if (col == "C_numeric") return num(r.c_numeric);
  if (col == "gamma_closed") return format_double(r.gamma_closed);
  if (col == "gamma_numeric") return num(r.gamma_numeric);
  if (col == "b_max") return num(r.b_max);
  if (col == "violating") {
    if (!r.violating) return std::nullopt;
    return std::string(*r.violating ? "true" : "false");
  }
  if (col == "p_bell") return format_double(r.p_bell);
  for (std::size_t s = 0; s < 4; ++s) {
    if (col == std::string("C_") + kSectorTags[s]) return num(r.sector_concurrence[s]);
    if (col == std::string("P_") + kSectorTags[s]) return format_double(r.weights[s]);
  }
  throw Error("unknown column " + col);
}

bool is_string_column(const std::string& col) { return col == "kind" || col == "status"; }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw Error("read_csv: bad number '" + s + "'");
  return v;
}

}  // namespace

double GridAxis::at(std::size_t k) const {
  if (k + 1 == steps) return max;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

OutputSet OutputSet::parse(std::string_view list) {
  OutputSet out{false, false, false, false};
  std::string item;
  std::istringstream ss{std::string(list)};
  while (std::getline(ss, item, ',')) {
    if (item == "concurrence") out.concurrence = true;
    else if (item == "gamma") out.gamma = true;
    else if (item == "p_bell") out.p_bell = true;
    else if (item == "boundary") out.boundary = true;
    else throw Error("unknown output '" + item + "'");
  }
  return out;
}

void SweepSpec::validate() const {
  if (g.steps < 2 || theta.steps < 2) throw Error("sweep: each axis needs at least 2 steps");
  if (!(g.min >= 0.0 && g.max <= 1.0 && g.min <= g.max)) throw Error("sweep: g range must lie within [0, 1]");
  if (!(theta.min >= 0.0 && theta.max <= 2.0 * M_PI + 1e-12 && theta.min <= theta.max))
    throw Error("sweep: theta range must lie within [0, 2 pi]");
}

PointRecord evaluate_point(double g, double theta, RowKind kind) {
  PointRecord r;
  r.kind = kind;
  r.g = g;
  r.theta = theta;
  r.c_closed = concurrence_avg_closed(g, theta);
  r.gamma_closed = gamma_closed(g, theta);
  r.p_bell = p_bell(g, theta);

  const Sectors sectors = conditional_states_kraus(ProtocolConfig::canonical(g, theta));
  for (std::size_t s = 0; s < 4; ++s) {
    r.weights[s] = sectors[s].weight;
    if (sectors[s].weight > tol::kDegenerateWeight)
      r.sector_concurrence[s] = concurrence(density_of(sectors[s].psi.normalized()));
  }
  try {
    const Op rho = averaged_state(sectors);
    const auto h = horodecki(rho);
    r.defined = true;
    r.c_numeric = concurrence(rho);
    r.gamma_numeric = h.gamma;
    r.b_max = h.b_max;
    r.violating = h.violating;
  } catch (const DegeneratePostselection&) {
    r.defined = false;
  }
  return r;
}

std::vector<PointRecord> evaluate_grid_serial(const SweepSpec& spec) {
  const auto tasks = plan(spec);
  std::vector<PointRecord> rows;
  rows.reserve(tasks.size());
  for (const auto& t : tasks) rows.push_back(evaluate_point(t.g, t.theta, t.kind));
  return rows;
}

std::vector<PointRecord> evaluate_grid(const SweepSpec& spec, int threads) {
  const auto tasks = plan(spec);
  std::vector<PointRecord> rows(tasks.size());
  std::exception_ptr failure;
  const long n = static_cast<long>(tasks.size());
#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
#endif
  for (long k = 0; k < n; ++k) {
    try {
      rows[k] = evaluate_point(tasks[k].g, tasks[k].theta, tasks[k].kind);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(histkit_sweep_failure)
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  (void)threads;
  if (failure) std::rethrow_exception(failure);
  return rows;
}

int thread_count_from_env() {
  const char* env = std::getenv("HISTKIT_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw Error("HISTKIT_THREADS must be a non-negative integer");
  return static_cast<int>(v);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<PointRecord>& rows, const OutputSet& outputs) {
  const auto cols = columns(outputs);
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      if (auto v = cell(r, cols[c])) os << *v;
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<PointRecord>& rows, const OutputSet& outputs) {
  const auto cols = columns(outputs);
  os << "{\"records\":[";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    os << (k ? ",\n" : "\n") << '{';
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      os << '"' << cols[c] << "\":";
      const auto v = cell(rows[k], cols[c]);
      if (!v) os << "null";
      else if (is_string_column(cols[c])) os << '"' << *v << '"';
      else os << *v;
    }
    os << '}';
  }
  os << "\n]}\n";
}

std::vector<PointRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw Error("read_csv: missing header");
  const auto header = split(line, ',');
  std::vector<PointRecord> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw Error("read_csv: row width does not match header");
    PointRecord r;
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string& col = header[c];
      const std::string& v = cells[c];
      if (col == "kind") r.kind = v == "boundary" ? RowKind::Boundary : RowKind::Grid;
      else if (col == "status") r.defined = v == "ok";
      else if (v.empty()) continue;
      else if (col == "g") r.g = parse_double(v);
      else if (col == "theta") r.theta = parse_double(v);
      else if (col == "C_closed") r.c_closed = parse_double(v);
      else if (col == "C_numeric") r.c_numeric = parse_double(v);
      else if (col == "gamma_closed") r.gamma_closed = parse_double(v);
      else if (col == "gamma_numeric") r.gamma_numeric = parse_double(v);
      else if (col == "b_max") r.b_max = parse_double(v);
      else if (col == "violating") r.violating = v == "true";
      else if (col == "p_bell") r.p_bell = parse_double(v);
      else {
        for (std::size_t s = 0; s < 4; ++s) {
          if (col == std::string("C_") + kSectorTags[s]) r.sector_concurrence[s] = parse_double(v);
          if (col == std::string("P_") + kSectorTags[s]) r.weights[s] = parse_double(v);
        }
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace histkit
