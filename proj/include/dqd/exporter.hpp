#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dqd/config.hpp"
#include "dqd/runner.hpp"

namespace dqd {

// shared float formatting for all text output (%.6g)
std::string fmt_g(double v);

// per-iteration metrics table; absent MSEs render as empty fields
extern const char* const kMetricsCsvHeader;
std::string metrics_csv(const std::vector<IterationRow>& rows);
std::vector<IterationRow> parse_metrics_csv(const std::string& text);

nlohmann::json archive_snapshot(const Archive& archive, const Environment& env);
nlohmann::json shift_log_json(const std::vector<ShiftLogEntry>& log);
nlohmann::json dynamics_log_json(const std::vector<DynamicsLogEntry>& log);
nlohmann::json emitter_log_json(const std::vector<EmitterLogEntry>& log);

// config echo, per-seed metric arrays (nullable where undefined) and
// mean/ci95 aggregates; the per-seed arrays feed the compare subcommand
nlohmann::json summary_json(const ExperimentConfig& config,
                            const std::vector<RunResult>& results);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// seed_<s>.csv plus logs and the final archive snapshot (when enabled)
void write_run_outputs(const std::string& dir, const ExperimentConfig& config,
                       const RunResult& result);
void write_summary(const std::string& dir, const ExperimentConfig& config,
                   const std::vector<RunResult>& results);

}  // namespace dqd
