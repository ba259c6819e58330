#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netevolve/evolution.hpp"
#include "netevolve/ingest.hpp"
#include "netevolve/metrics.hpp"
#include "netevolve/powerlaw.hpp"

namespace netevolve {

enum class InputKind { Events, Publications };

std::string_view to_string(InputKind kind);
/// "events" or "publications"; throws InvalidArgument otherwise.
InputKind parse_input_kind(std::string_view name);

struct AnalysisConfig {
    std::string input = "-";  // path, or "-" for standard input
    InputKind kind = InputKind::Events;
    /// Inclusive period ends. With neither breakpoints nor `yearly`, the whole
    /// input forms a single period labelled "all".
    std::vector<std::string> breakpoints;
    /// Defaults to T1, T1-T2, T1-T3, ... for explicit breakpoints.
    std::vector<std::string> labels;
    bool yearly = false;
    SmallWorldThresholds thresholds;
    double static_tolerance = kDefaultStaticTolerance;
    EmbeddingMode embedding = EmbeddingMode::MeanStrength;
    /// Worker count only; never echoed into reports.
    ParallelOptions parallel;
};

struct Provenance {
    std::string input;
    std::string sha256;
    std::uint64_t bytes = 0;
    nlohmann::json config;
};

struct ReportBundle {
    std::vector<GraphSnapshot> snapshots;
    std::vector<MetricsRow> rows;
    std::vector<std::optional<PowerLawFit>> fits;
    std::vector<ProxyRow> proxies;
    std::optional<CorrelationReport> correlations;  // needs three or more periods
    std::vector<StaticAttribute> static_attributes;  // needs two or more periods
    std::vector<SmallWorldVerdict> verdicts;
    std::vector<IngestWarning> warnings;
    Provenance provenance;
};

/// Failure of one pipeline stage. exit_code follows the CLI convention:
/// 2 configuration, 3 input parsing, 4 analysis.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, int exit_code, const std::string& message)
        : std::runtime_error(stage + ": " + message), stage_(std::move(stage)), exit_code_(exit_code) {}

    [[nodiscard]] const std::string& stage() const { return stage_; }
    [[nodiscard]] int exit_code() const { return exit_code_; }

private:
    std::string stage_;
    int exit_code_;
};

std::string sha256_hex(std::string_view bytes);

/// Reads the whole input (a file or standard input). Throws StageError.
std::string read_input(const std::string& input);

/// Parses events or publications from raw bytes. Throws StageError.
ParsedEvents load_events(std::string_view content, InputKind kind);

/// Cumulative snapshots for the configured periods. Throws StageError.
std::vector<GraphSnapshot> slice_periods(const ParsedEvents& parsed, const AnalysisConfig& config,
                                         std::vector<IngestWarning>* warnings = nullptr);

/// Full pipeline over already-read input bytes.
ReportBundle analyze_content(std::string_view content, const AnalysisConfig& config);

/// Full pipeline: read, parse, slice, measure, fit, correlate, classify.
ReportBundle run_analysis(const AnalysisConfig& config);

/// One line per period with the classic table columns:
/// period,actors,links,sum_links,density_pct,clustering,diameter,avg_distance,lambda
/// Density is printed in percent with one decimal; undefined values are blank.
void write_table_csv(std::ostream& out, const ReportBundle& bundle);

/// Every section of the bundle as consecutive CSV blocks, each introduced by a
/// "# <section>" line and separated by a blank line.
void write_report_csv(std::ostream& out, const ReportBundle& bundle);

/// Full-precision machine-readable bundle.
nlohmann::json to_json(const ReportBundle& bundle);

}  // namespace netevolve
