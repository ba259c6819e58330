#include "netevolve/report.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace netevolve {
namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

template <class T>
std::string cell(const std::optional<T>& value, int decimals = 6) {
    if (!value) return {};
    if constexpr (std::is_integral_v<T>) {
        return std::to_string(*value);
    } else {
        return fixed(*value, decimals);
    }
}

std::string cell(const std::optional<bool>& flag) {
    if (!flag) return {};
    return *flag ? "true" : "false";
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& value) {
    if (!value) return nullptr;
    return *value;
}

nlohmann::json config_echo(const AnalysisConfig& c) {
    nlohmann::json echo;
    echo["kind"] = to_string(c.kind);
    echo["breakpoints"] = c.breakpoints;
    echo["labels"] = c.labels;
    echo["yearly"] = c.yearly;
    echo["static_tolerance"] = c.static_tolerance;
    echo["embedding"] = c.embedding == EmbeddingMode::MeanStrength ? "mean_strength" : "mean_edge_weight";
    const auto& t = c.thresholds;
    echo["small_world"] = {
        {"max_density", t.max_density},
        {"min_clustering", t.min_clustering},
        {"clustering_over_random", t.clustering_over_random},
        {"diameter_log_factor", t.diameter_log_factor},
        {"min_r_squared", t.min_r_squared},
        {"min_lambda", t.min_lambda},
    };
    return echo;
}

std::vector<std::string> default_labels(std::size_t count) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= count; ++i) labels.push_back(i == 1 ? "T1" : "T1-T" + std::to_string(i));
    return labels;
}

}  // namespace

std::string_view to_string(InputKind kind) { return kind == InputKind::Events ? "events" : "publications"; }

InputKind parse_input_kind(std::string_view name) {
    if (name == "events") return InputKind::Events;
    if (name == "publications") return InputKind::Publications;
    throw InvalidArgument("unknown input kind '" + std::string(name) + "' (expected events or publications)");
}

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

std::string read_input(const std::string& input) {
    if (input == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) throw StageError("input", 3, "cannot open '" + input + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

ParsedEvents load_events(std::string_view content, InputKind kind) {
    std::istringstream in{std::string(content)};
    try {
        if (kind == InputKind::Events) return parse_edge_events(in);
        auto pubs = parse_publications(in);
        auto parsed = expand_publications(pubs.records);
        parsed.records = pubs.lines;
        parsed.warnings.insert(parsed.warnings.begin(), pubs.warnings.begin(), pubs.warnings.end());
        return parsed;
    } catch (const ParseError& e) {
        throw StageError("parse", 3, e.what());
    } catch (const IoError& e) {
        throw StageError("input", 3, e.what());
    }
}

std::vector<GraphSnapshot> slice_periods(const ParsedEvents& parsed, const AnalysisConfig& config,
                                         std::vector<IngestWarning>* warnings) {
    std::vector<Timestamp> times;
    times.reserve(parsed.events.size() + parsed.arrivals.size());
    for (const auto& ev : parsed.events) times.push_back(ev.time);
    for (const auto& a : parsed.arrivals) times.push_back(a.time);
    for (const auto& t : times) {
        if (t.kind() != times.front().kind())
            throw StageError("periods", 2, "input mixes period indices and calendar timestamps");
    }

    std::vector<Timestamp> cuts;
    std::vector<std::string> labels;
    if (config.yearly) {
        if (!config.breakpoints.empty()) throw StageError("config", 2, "--yearly and --breakpoints are exclusive");
        if (times.empty()) throw StageError("periods", 2, "--yearly needs at least one timestamped record");
        int first = times.front().year();
        int last = first;
        for (const auto& t : times) {
            first = std::min(first, t.year());
            last = std::max(last, t.year());
        }
        for (int y = first; y <= last; ++y) {
            cuts.push_back(Timestamp::end_of_year(times.front().kind(), y));
            labels.push_back(std::to_string(y));
        }
    } else if (!config.breakpoints.empty()) {
        try {
            for (const auto& text : config.breakpoints) cuts.push_back(Timestamp::parse(text));
        } catch (const ParseError& e) {
            throw StageError("config", 2, e.what());
        }
        if (!times.empty() && cuts.front().kind() != times.front().kind())
            throw StageError("config", 2, "breakpoints and input timestamps are of different kinds");
        labels = default_labels(cuts.size());
    } else {
        Timestamp last = Timestamp::index(0);
        if (!times.empty()) last = *std::max_element(times.begin(), times.end());
        cuts.push_back(last);
        labels.emplace_back("all");
    }
    if (!config.labels.empty()) {
        if (config.labels.size() != cuts.size())
            throw StageError("config", 2, "expected " + std::to_string(cuts.size()) + " period labels");
        labels = config.labels;
    }

    try {
        auto series = build_cumulative_snapshots(parsed.events, cuts, labels, parsed.arrivals);
        if (warnings != nullptr) warnings->insert(warnings->end(), series.warnings.begin(), series.warnings.end());
        return std::move(series.snapshots);
    } catch (const InvalidArgument& e) {
        throw StageError("periods", 2, e.what());
    }
}

ReportBundle analyze_content(std::string_view content, const AnalysisConfig& config) {
    ReportBundle bundle;
    bundle.provenance.input = config.input;
    bundle.provenance.sha256 = sha256_hex(content);
    bundle.provenance.bytes = content.size();
    bundle.provenance.config = config_echo(config);

    const ParsedEvents parsed = load_events(content, config.kind);
    bundle.warnings = parsed.warnings;
    bundle.snapshots = slice_periods(parsed, config, &bundle.warnings);

    try {
        for (const auto& s : bundle.snapshots) {
            bundle.rows.push_back(metrics_row(s, config.parallel));
            std::optional<PowerLawFit> fit;
            try {
                fit = fit_powerlaw(degree_histogram(s));
            } catch (const InsufficientData&) {
            }
            bundle.fits.push_back(fit);
            bundle.verdicts.push_back(classify_small_world(bundle.rows.back(), fit, config.thresholds));
        }
        bundle.proxies = proxy_series(bundle.snapshots, config.embedding);
        if (bundle.rows.size() >= 3) bundle.correlations = correlate_attachment(bundle.proxies, bundle.rows);
        if (bundle.rows.size() >= 2)
            bundle.static_attributes = static_attributes(bundle.rows, bundle.fits, config.static_tolerance);
    } catch (const std::exception& e) {
        throw StageError("analysis", 4, e.what());
    }
    return bundle;
}

ReportBundle run_analysis(const AnalysisConfig& config) {
    if (!(config.static_tolerance > 0.0 && config.static_tolerance <= 1.0))
        throw StageError("config", 2, "static tolerance must lie in (0, 1]");
    if (config.yearly && !config.breakpoints.empty())
        throw StageError("config", 2, "--yearly and --breakpoints are exclusive");
    const std::string content = read_input(config.input);
    return analyze_content(content, config);
}

void write_table_csv(std::ostream& out, const ReportBundle& bundle) {
    out << "period,actors,links,sum_links,density_pct,clustering,diameter,avg_distance,lambda\n";
    for (std::size_t i = 0; i < bundle.rows.size(); ++i) {
        const auto& r = bundle.rows[i];
        std::optional<double> pct;
        if (r.density_weighted) pct = *r.density_weighted * 100.0;
        std::optional<double> lambda;
        if (bundle.fits[i]) lambda = bundle.fits[i]->lambda;
        out << csv_field(r.label) << ',' << r.n_actors << ',' << r.n_links << ',' << r.sum_links << ','
            << cell(pct, 1) << ',' << cell(r.clustering, 2) << ',' << cell(r.diameter) << ','
            << cell(r.avg_distance, 2) << ',' << cell(lambda, 2) << '\n';
    }
}

void write_report_csv(std::ostream& out, const ReportBundle& b) {
    out << "# metrics\n"
           "label,n_actors,n_links,sum_links,density_weighted_pct,density_simple_pct,clustering,transitivity,"
           "diameter,avg_distance,assortativity,avg_neighbor_degree,avg_strength,centralization_degree,"
           "centralization_betweenness,centralization_closeness\n";
    for (const auto& r : b.rows) {
        std::optional<double> dw, ds;
        if (r.density_weighted) dw = *r.density_weighted * 100.0;
        if (r.density_simple) ds = *r.density_simple * 100.0;
        out << csv_field(r.label) << ',' << r.n_actors << ',' << r.n_links << ',' << r.sum_links << ','
            << cell(dw, 1) << ',' << cell(ds, 1) << ',' << cell(r.clustering) << ',' << cell(r.transitivity) << ','
            << cell(r.diameter) << ',' << cell(r.avg_distance) << ',' << cell(r.assortativity) << ','
            << cell(r.avg_neighbor_degree) << ',' << cell(r.avg_strength) << ',' << cell(r.centralization_degree)
            << ',' << cell(r.centralization_betweenness) << ',' << cell(r.centralization_closeness) << '\n';
    }

    out << "\n# powerlaw\nlabel,lambda,intercept,r_squared,n_points\n";
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
        out << csv_field(b.rows[i].label) << ',';
        if (const auto& f = b.fits[i]) {
            out << fixed(f->lambda, 6) << ',' << fixed(f->intercept, 6) << ',' << fixed(f->r_squared, 6) << ','
                << f->n_points;
        } else {
            out << ",,,";
        }
        out << '\n';
    }

    out << "\n# proxies\nlabel,pref_attachment,homophily,embedding,multi_connectivity\n";
    for (const auto& p : b.proxies) {
        out << csv_field(p.label) << ',' << cell(p.pref_attachment) << ',' << cell(p.homophily) << ','
            << cell(p.embedding) << ',' << cell(p.multi_connectivity) << '\n';
    }

    out << "\n# correlations\nproxy,centralization,coefficient,method,n,status\n";
    if (b.correlations) {
        for (const auto& c : b.correlations->pairs) {
            out << to_string(c.proxy) << ',' << to_string(c.kind) << ',' << cell(c.coefficient) << ','
                << to_string(c.method) << ',' << c.n << ',' << to_string(c.status) << '\n';
        }
    }

    out << "\n# drivers\nrank,proxy\n";
    if (b.correlations) {
        for (std::size_t i = 0; i < b.correlations->ranked_drivers.size(); ++i)
            out << i + 1 << ',' << to_string(b.correlations->ranked_drivers[i]) << '\n';
    }

    out << "\n# static_attributes\nmetric,static,min,max,mean,n\n";
    for (const auto& s : b.static_attributes) {
        out << s.metric << ',' << (s.is_static ? "true" : "false") << ',' << fixed(s.min, 6) << ','
            << fixed(s.max, 6) << ',' << fixed(s.mean, 6) << ',' << s.n << '\n';
    }

    out << "\n# small_world\nlabel,density_low,clustering_high,diameter_small,scale_free,verdict,undefined_flags\n";
    for (std::size_t i = 0; i < b.verdicts.size(); ++i) {
        const auto& v = b.verdicts[i];
        std::string undefined;
        for (const auto& f : v.undefined_flags) undefined += (undefined.empty() ? "" : ";") + f;
        out << csv_field(b.rows[i].label) << ',' << cell(v.density_low) << ',' << cell(v.clustering_high) << ','
            << cell(v.diameter_small) << ',' << cell(v.scale_free) << ',' << cell(v.verdict) << ','
            << csv_field(undefined) << '\n';
    }

    out << "\n# warnings\nrecord,message\n";
    for (const auto& w : b.warnings) out << w.record << ',' << csv_field(w.message) << '\n';

    out << "\n# provenance\nkey,value\n"
        << "input," << csv_field(b.provenance.input) << '\n'
        << "sha256," << b.provenance.sha256 << '\n'
        << "bytes," << b.provenance.bytes << '\n'
        << "config," << csv_field(b.provenance.config.dump()) << '\n'
        << "diameter_scope,giant component\n"
        << "avg_distance_scope,reachable pairs\n";
}

nlohmann::json to_json(const ReportBundle& b) {
    using nlohmann::json;
    json doc;
    json rows = json::array();
    for (std::size_t i = 0; i < b.rows.size(); ++i) {
        const auto& r = b.rows[i];
        json fit = nullptr;
        if (const auto& f = b.fits[i]) {
            fit = {{"lambda", f->lambda}, {"intercept", f->intercept}, {"r_squared", f->r_squared},
                   {"n_points", f->n_points}};
        }
        rows.push_back({
            {"label", r.label},
            {"n_actors", r.n_actors},
            {"n_links", r.n_links},
            {"sum_links", r.sum_links},
            {"density_weighted", opt_json(r.density_weighted)},
            {"density_simple", opt_json(r.density_simple)},
            {"clustering", opt_json(r.clustering)},
            {"transitivity", opt_json(r.transitivity)},
            {"diameter", opt_json(r.diameter)},
            {"avg_distance", opt_json(r.avg_distance)},
            {"assortativity", opt_json(r.assortativity)},
            {"avg_neighbor_degree", opt_json(r.avg_neighbor_degree)},
            {"avg_strength", opt_json(r.avg_strength)},
            {"centralization_degree", opt_json(r.centralization_degree)},
            {"centralization_betweenness", opt_json(r.centralization_betweenness)},
            {"centralization_closeness", opt_json(r.centralization_closeness)},
            {"powerlaw", fit},
        });
    }
    doc["rows"] = rows;

    json proxies = json::array();
    for (const auto& p : b.proxies) {
        proxies.push_back({{"label", p.label},
                           {"pref_attachment", opt_json(p.pref_attachment)},
                           {"homophily", opt_json(p.homophily)},
                           {"embedding", opt_json(p.embedding)},
                           {"multi_connectivity", opt_json(p.multi_connectivity)}});
    }
    doc["proxies"] = proxies;

    if (b.correlations) {
        json pairs = json::array();
        for (const auto& c : b.correlations->pairs) {
            pairs.push_back({{"proxy", to_string(c.proxy)},
                             {"centralization", to_string(c.kind)},
                             {"coefficient", opt_json(c.coefficient)},
                             {"method", to_string(c.method)},
                             {"n", c.n},
                             {"status", to_string(c.status)}});
        }
        json drivers = json::array();
        for (Proxy p : b.correlations->ranked_drivers) drivers.push_back(to_string(p));
        doc["correlations"] = {{"pairs", pairs},
                               {"ranking_centralization", to_string(b.correlations->ranking_kind)},
                               {"ranked_drivers", drivers}};
    } else {
        doc["correlations"] = nullptr;
    }

    json statics = json::array();
    for (const auto& s : b.static_attributes) {
        statics.push_back({{"metric", s.metric},
                           {"static", s.is_static},
                           {"min", s.min},
                           {"max", s.max},
                           {"mean", s.mean},
                           {"n", s.n}});
    }
    doc["static_attributes"] = statics;

    json verdicts = json::array();
    for (std::size_t i = 0; i < b.verdicts.size(); ++i) {
        const auto& v = b.verdicts[i];
        verdicts.push_back({{"label", b.rows[i].label},
                            {"density_low", opt_json(v.density_low)},
                            {"clustering_high", opt_json(v.clustering_high)},
                            {"diameter_small", opt_json(v.diameter_small)},
                            {"scale_free", opt_json(v.scale_free)},
                            {"small_world", opt_json(v.verdict)},
                            {"undefined_flags", v.undefined_flags}});
    }
    doc["verdicts"] = verdicts;

    json warnings = json::array();
    for (const auto& w : b.warnings) warnings.push_back({{"record", w.record}, {"message", w.message}});
    doc["warnings"] = warnings;

    doc["provenance"] = {{"input", b.provenance.input},
                         {"sha256", b.provenance.sha256},
                         {"bytes", b.provenance.bytes},
                         {"config", b.provenance.config},
                         {"conventions",
                          {{"diameter_scope", "giant component"},
                           {"avg_distance_scope", "reachable pairs"},
                           {"clustering", "mean local coefficient, degree < 2 counts as 0"},
                           {"density_weighted", "2W/(N(N-1))"}}}};
    return doc;
}

}  // namespace netevolve
