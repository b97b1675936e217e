#include "nlsdp/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nlsdp {

#ifndef NLSDP_VERSION
#define NLSDP_VERSION "0.0.0"
#endif

std::string_view version() { return NLSDP_VERSION; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

nlohmann::json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_double(v));
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> preamble,
                     std::vector<Column> columns)
    : out_(path), n_cols_(columns.size()) {
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
  for (const auto& line : preamble) out_ << "# " << line << '\n';
  out_ << "# columns:";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out_ << (i ? ", " : " ") << columns[i].name << " [" << columns[i].unit << "]";
  }
  out_ << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i].name;
  out_ << '\n';
}

void CsvWriter::sep() {
  if (col_ > 0) out_ << ',';
  ++col_;
}

CsvWriter& CsvWriter::cell(double v) {
  sep();
  out_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& v) {
  sep();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::cell(std::size_t v) {
  sep();
  out_ << v;
  return *this;
}

void CsvWriter::end_row() {
  if (col_ != n_cols_) throw std::logic_error("CSV row has the wrong number of cells");
  out_ << '\n';
  col_ = 0;
  if (!out_) throw std::runtime_error("CSV write failed");
}

std::string describe(const ModelParams& params, double omega) {
  std::ostringstream os;
  os << "p=" << format_double(params.p) << " lambda1=" << format_double(params.lambda1)
     << " lambda2=" << format_double(params.lambda2) << " Z=" << format_double(params.Z)
     << " omega=" << format_double(omega);
  return os.str();
}

nlohmann::json to_json(const ModelParams& params) {
  return {{"p", json_number(params.p)},
          {"lambda1", json_number(params.lambda1)},
          {"lambda2", json_number(params.lambda2)},
          {"Z", json_number(params.Z)}};
}

nlohmann::json to_json(const RegimeVerdict& verdict) {
  return {{"tag", std::string(to_string(verdict.tag))}, {"detail", verdict.detail}, {"exists", verdict.exists()}};
}

nlohmann::json to_json(const ResidualReport& report) {
  return {{"max_interior_residual", json_number(report.max_interior_residual)},
          {"jump_residual", json_number(report.jump_residual)},
          {"first_integral_max", json_number(report.first_integral_max)},
          {"grid", {{"L", json_number(report.grid.half_width())},
                    {"n_points", report.grid.size()},
                    {"h", json_number(report.grid.spacing())}}}};
}

nlohmann::json to_json(const StabilityReport& report) {
  return {{"eps", json_number(report.eps)},
          {"kind", std::string(to_string(report.kind))},
          {"max_orbital_dist", json_number(report.max_orbital_dist)},
          {"T", json_number(report.horizon)},
          {"seed", report.seed},
          {"initial_dist", json_number(report.initial_dist)},
          {"max_charge_drift", json_number(report.max_charge_drift)}};
}

nlohmann::json to_json(const FlowResult& result) {
  return {{"value", json_number(result.value)},
          {"iterations", result.iterations},
          {"final_gradient_norm", json_number(result.final_gradient_norm)},
          {"converged", result.converged}};
}

namespace {

std::vector<std::string> preamble(std::string title, const ModelParams& params, double omega) {
  return {"nlsdp " + std::string(version()) + " " + std::move(title), describe(params, omega)};
}

}  // namespace

void write_profile_csv(const std::filesystem::path& path, const Profile& profile, const Grid& grid) {
  CsvWriter csv(path,
                {"nlsdp " + std::string(version()) + " profile", describe(profile.params(), profile.omega()),
                 "dphi at x=0 is the right limit"},
                {{"x", "length"}, {"phi", "amplitude"}, {"dphi", "amplitude/length"}});
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    csv.cell(x).cell(profile.eval(x)).cell(profile.derivative(x, Side::Right));
    csv.end_row();
  }
}

void write_phaseplane_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                          const std::vector<PortraitSample>& samples) {
  CsvWriter csv(path, preamble("phase plane", params, omega),
                {{"phi", "amplitude"}, {"dphi", "amplitude/length"}, {"branch", "label"}});
  for (const auto& s : samples) {
    csv.cell(s.point.phi).cell(s.point.dphi).cell(std::string(to_string(s.branch)));
    csv.end_row();
  }
}

void write_diagnostics_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                           const std::vector<Diagnostics>& rows) {
  CsvWriter csv(path, preamble("diagnostics", params, omega),
                {{"t", "time"},
                 {"charge", "amplitude^2*length"},
                 {"energy", "energy"},
                 {"action", "energy"},
                 {"orbital_dist", "H1 norm"}});
  for (const auto& d : rows) {
    csv.cell(d.t).cell(d.charge).cell(d.energy).cell(d.action).cell(d.orbital_dist);
    csv.end_row();
  }
}

void write_snapshots_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                         const std::vector<Snapshot>& snapshots) {
  CsvWriter csv(path, preamble("snapshots", params, omega),
                {{"t", "time"}, {"x", "length"}, {"re_u", "amplitude"}, {"im_u", "amplitude"}});
  for (const auto& s : snapshots) {
    for (std::size_t j = 0; j < s.u.size(); ++j) {
      csv.cell(s.t).cell(s.u.grid.x(j)).cell(s.u[j].real()).cell(s.u[j].imag());
      csv.end_row();
    }
  }
}

void write_descent_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                       const std::vector<FlowSample>& history) {
  CsvWriter csv(path, preamble("descent", params, omega),
                {{"iter", "count"}, {"value", "energy"}, {"grad_norm", "L2 norm"}});
  for (const auto& s : history) {
    csv.cell(s.iter).cell(s.value).cell(s.grad_norm);
    csv.end_row();
  }
}

void write_field_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                     const ComplexField& field) {
  CsvWriter csv(path, preamble("field", params, omega),
                {{"x", "length"}, {"re_u", "amplitude"}, {"im_u", "amplitude"}});
  for (std::size_t j = 0; j < field.size(); ++j) {
    csv.cell(field.grid.x(j)).cell(field[j].real()).cell(field[j].imag());
    csv.end_row();
  }
}

void write_stability_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                         const std::vector<StabilityReport>& reports) {
  auto pre = preamble("stability curve", params, omega);
  pre.push_back("finite horizon T: distances are maxima over recorded times in [0, T] only");
  CsvWriter csv(path, std::move(pre),
                {{"eps", "H1 norm"},
                 {"kind", "label"},
                 {"max_orbital_dist", "H1 norm"},
                 {"T", "time"},
                 {"seed", "integer"}});
  for (const auto& r : reports) {
    csv.cell(r.eps).cell(std::string(to_string(r.kind))).cell(r.max_orbital_dist).cell(r.horizon);
    csv.cell(static_cast<std::size_t>(r.seed));
    csv.end_row();
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("JSON write failed");
}

nlohmann::json RunManifest::to_json() const {
  return {{"subcommand", subcommand},
          {"params", nlsdp::to_json(params)},
          {"omega", json_number(omega)},
          {"config", config},
          {"seed", seed},
          {"version", std::string(version())},
          {"args", args},
          {"outputs", outputs}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  const auto& p = j.at("params");
  m.params = {p.at("p").get<double>(), p.at("lambda1").get<double>(), p.at("lambda2").get<double>(),
              p.at("Z").get<double>()};
  m.omega = j.at("omega").get<double>();
  m.config = j.value("config", nlohmann::json::object());
  m.seed = j.value("seed", std::uint64_t{0});
  m.args = j.at("args").get<std::vector<std::string>>();
  m.outputs = j.value("outputs", std::vector<std::string>{});
  return m;
}

}  // namespace nlsdp
