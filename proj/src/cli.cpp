#include "netevolve/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "netevolve/generators.hpp"
#include "netevolve/report.hpp"

namespace netevolve {
namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kAnalysisError = 4;

struct InputOptions {
    std::string input = "-";
    std::string kind = "events";
    std::vector<std::string> breakpoints;
    std::vector<std::string> labels;
    bool yearly = false;
    unsigned threads = 0;
    double static_tolerance = kDefaultStaticTolerance;
    SmallWorldThresholds thresholds;
    bool edge_weight_embedding = false;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
    cmd->add_option("-i,--input", o.input, "Input file, or - for standard input")->capture_default_str();
    cmd->add_option("--kind", o.kind, "Input kind: events (CSV) or publications (JSON Lines)")
        ->check(CLI::IsMember({"events", "publications"}))
        ->capture_default_str();
    cmd->add_option("--breakpoints", o.breakpoints, "Inclusive period ends, comma separated")->delimiter(',');
    cmd->add_option("--labels", o.labels, "Period labels, comma separated")->delimiter(',');
    cmd->add_flag("--yearly", o.yearly, "One cumulative period per calendar year");
    cmd->add_option("--threads", o.threads, "Worker threads (capped by NETEVOLVE_THREADS)");
    cmd->add_option("--static-tolerance", o.static_tolerance, "Relative range tolerance for static attributes")
        ->capture_default_str();
    cmd->add_option("--max-density", o.thresholds.max_density, "Small-world: density_simple upper bound")
        ->capture_default_str();
    cmd->add_option("--min-clustering", o.thresholds.min_clustering, "Small-world: clustering lower bound")
        ->capture_default_str();
    cmd->add_option("--min-r2", o.thresholds.min_r_squared, "Small-world: power-law fit R^2 lower bound")
        ->capture_default_str();
    cmd->add_option("--min-lambda", o.thresholds.min_lambda, "Small-world: power-law exponent lower bound")
        ->capture_default_str();
    cmd->add_flag("--embedding-edge-weight", o.edge_weight_embedding,
                  "Use mean edge weight instead of mean strength as the embedding proxy");
}

AnalysisConfig to_config(const InputOptions& o) {
    AnalysisConfig c;
    c.input = o.input;
    c.kind = parse_input_kind(o.kind);
    c.breakpoints = o.breakpoints;
    c.labels = o.labels;
    c.yearly = o.yearly;
    c.thresholds = o.thresholds;
    c.static_tolerance = o.static_tolerance;
    c.embedding = o.edge_weight_embedding ? EmbeddingMode::MeanEdgeWeight : EmbeddingMode::MeanStrength;
    unsigned requested = o.threads != 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    c.parallel.threads = std::min(requested, threads_from_env(requested));
    return c;
}

// Writes to --out when given, else to `fallback`.
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw StageError("output", kConfigError, "cannot write '" + path + "'");
    write(file);
}

std::string file_safe(std::string_view label) {
    std::string out;
    for (char c : label) {
        const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                          c == '_' || c == '.';
        out.push_back(keep ? c : '_');
    }
    return out.empty() ? "period" : out;
}

void write_fit_files(const std::filesystem::path& dir, const ReportBundle& bundle) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw StageError("output", kConfigError, "cannot create '" + dir.string() + "'");

    std::ofstream lines(dir / "fit_lines.csv", std::ios::binary);
    if (!lines) throw StageError("output", kConfigError, "cannot write into '" + dir.string() + "'");
    lines << "period,lambda,intercept,r_squared,n_points,x_min,y_min,x_max,y_max\n";
    char buf[256];
    for (std::size_t i = 0; i < bundle.snapshots.size(); ++i) {
        const auto& label = bundle.snapshots[i].label();
        const auto& fit = bundle.fits[i];
        lines << csv_field(label) << ',';
        if (!fit) {
            lines << ",,,,,,,\n";
            continue;
        }
        const auto points = loglog_points(degree_histogram(bundle.snapshots[i]));
        std::ofstream pts(dir / ("loglog_" + file_safe(label) + ".csv"), std::ios::binary);
        pts << "log_degree,log_frequency\n";
        for (const auto& p : points) {
            std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", p.log_degree, p.log_frequency);
            pts << buf;
        }
        const double x0 = points.front().log_degree;
        const double x1 = points.back().log_degree;
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%zu,%.12g,%.12g,%.12g,%.12g\n", fit->lambda, fit->intercept,
                      fit->r_squared, fit->n_points, x0, fit->intercept - fit->lambda * x0, x1,
                      fit->intercept - fit->lambda * x1);
        lines << buf;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Longitudinal analysis of evolving collaboration networks", "netevolve"};
    app.require_subcommand(1);

    InputOptions analyze_opts;
    std::string analyze_format = "csv";
    std::string analyze_out;
    auto* analyze = app.add_subcommand("analyze", "Per-period network measures (table CSV or full JSON bundle)");
    add_input_options(analyze, analyze_opts);
    analyze->add_option("--format", analyze_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    analyze->add_option("-o,--out", analyze_out, "Output file (default standard output)");

    InputOptions report_opts;
    std::string report_format = "json";
    std::string report_out;
    auto* report = app.add_subcommand("report", "Full bundle: measures, fits, proxies, correlations, verdicts");
    add_input_options(report, report_opts);
    report->add_option("--format", report_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    report->add_option("-o,--out", report_out, "Output file (default standard output)");

    InputOptions fit_opts;
    std::string fit_dir;
    auto* fit = app.add_subcommand("fit", "Write log-log degree points and fitted lines per period");
    add_input_options(fit, fit_opts);
    fit->add_option("--out-dir", fit_dir, "Directory for the CSV files")->required();

    std::string model = "ba";
    std::size_t n = 1000;
    double p = 0.01, beta = 0.1;
    std::size_t k = 4, m = 2;
    std::uint64_t seed = 42;
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Emit a seeded synthetic network as edge-event CSV");
    generate->add_option("--model", model, "er, ws or ba")->check(CLI::IsMember({"er", "ws", "ba"}))->capture_default_str();
    generate->add_option("-n", n, "Number of actors")->capture_default_str();
    generate->add_option("-p", p, "er: edge probability")->capture_default_str();
    generate->add_option("-k", k, "ws: even neighbor count")->capture_default_str();
    generate->add_option("--beta", beta, "ws: rewiring probability")->capture_default_str();
    generate->add_option("-m", m, "ba: edges per arriving actor")->capture_default_str();
    generate->add_option("--seed", seed, "Random seed")->capture_default_str();
    generate->add_option("-o,--out", gen_out, "Output file (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kConfigError;
    }

    try {
        if (*generate) {
            GeneratorSpec spec;
            spec.model = parse_model(model);
            spec.n = n;
            spec.seed = seed;
            switch (spec.model) {
                case Model::ErdosRenyi: spec.param1 = p; break;
                case Model::WattsStrogatz:
                    spec.param1 = static_cast<double>(k);
                    spec.param2 = beta;
                    break;
                case Model::BarabasiAlbert: spec.param1 = static_cast<double>(m); break;
            }
            const auto gen = generate_events(spec);
            emit(gen_out, out, [&](std::ostream& os) { write_edge_events(os, gen.events, gen.arrivals); });
            return kOk;
        }
        if (*analyze) {
            const auto bundle = run_analysis(to_config(analyze_opts));
            emit(analyze_out, out, [&](std::ostream& os) {
                if (analyze_format == "json") {
                    os << to_json(bundle).dump(2) << '\n';
                } else {
                    write_table_csv(os, bundle);
                }
            });
        } else if (*report) {
            const auto bundle = run_analysis(to_config(report_opts));
            emit(report_out, out, [&](std::ostream& os) {
                if (report_format == "json") {
                    os << to_json(bundle).dump(2) << '\n';
                } else {
                    write_report_csv(os, bundle);
                }
            });
        } else if (*fit) {
            const auto bundle = run_analysis(to_config(fit_opts));
            write_fit_files(fit_dir, bundle);
        }
        return kOk;
    } catch (const StageError& e) {
        err << "error [" << e.stage() << "]: " << e.what() << '\n';
        return e.exit_code();
    } catch (const InvalidArgument& e) {
        err << "error [config]: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception& e) {
        err << "error [analysis]: " << e.what() << '\n';
        return kAnalysisError;
    }
}

}  // namespace netevolve
