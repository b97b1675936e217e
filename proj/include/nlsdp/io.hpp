#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nlsdp/evolution.hpp"
#include "nlsdp/minimize.hpp"
#include "nlsdp/model.hpp"
#include "nlsdp/phaseplane.hpp"
#include "nlsdp/stability.hpp"
#include "nlsdp/stationary.hpp"

namespace nlsdp {

std::string_view version();

/// %.15g; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double v);

/// v rounded to 15 significant digits, or null when not finite.
nlohmann::json json_number(double v);

struct Column {
  std::string name;
  std::string unit;
};

/// CSV with a commented preamble: free-form "# key=value" lines, then a
/// "# columns:" line naming columns with units, then the plain header row.
class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> preamble, std::vector<Column> columns);

  CsvWriter& cell(double v);
  CsvWriter& cell(const std::string& v);
  CsvWriter& cell(std::size_t v);
  void end_row();

private:
  void sep();

  std::ofstream out_;
  std::size_t n_cols_;
  std::size_t col_ = 0;
};

std::string describe(const ModelParams& params, double omega);

nlohmann::json to_json(const ModelParams& params);
nlohmann::json to_json(const RegimeVerdict& verdict);
nlohmann::json to_json(const ResidualReport& report);
nlohmann::json to_json(const StabilityReport& report);
/// Scalar summary only; the minimizer and history are written as CSV.
nlohmann::json to_json(const FlowResult& result);

void write_profile_csv(const std::filesystem::path& path, const Profile& profile, const Grid& grid);
void write_phaseplane_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                          const std::vector<PortraitSample>& samples);
void write_diagnostics_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                           const std::vector<Diagnostics>& rows);
void write_snapshots_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                         const std::vector<Snapshot>& snapshots);
void write_descent_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                       const std::vector<FlowSample>& history);
void write_field_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                     const ComplexField& field);
void write_stability_csv(const std::filesystem::path& path, const ModelParams& params, double omega,
                         const std::vector<StabilityReport>& reports);

/// Pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

struct RunManifest {
  std::string subcommand;
  ModelParams params;
  double omega = 0.0;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  /// Command-line arguments that reproduce the run, without --out.
  std::vector<std::string> args;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

}  // namespace nlsdp
