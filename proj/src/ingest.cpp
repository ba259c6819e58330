#include "netevolve/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "json.hpp"

namespace netevolve {
namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

void enforce_skip_limit(std::size_t skipped, std::size_t records, std::string_view what) {
    if (records > 0 && static_cast<double>(skipped) > kMaxSkippedFraction * static_cast<double>(records)) {
        throw ParseError(std::to_string(skipped) + " of " + std::to_string(records) + " " + std::string(what) +
                         " were unusable (limit 10%)");
    }
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (quoted) throw ParseError("unterminated quote");
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n\r") == std::string_view::npos && trim(text).size() == text.size())
        return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

ParsedEvents parse_edge_events(std::istream& in) {
    ParsedEvents out;
    std::string line;
    std::size_t line_no = 0;
    std::map<std::string, std::size_t> column;
    bool have_header = false;
    std::size_t skipped = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

        if (!have_header) {
            const auto names = split_csv_line(line);
            for (std::size_t i = 0; i < names.size(); ++i) column[std::string(trim(names[i]))] = i;
            for (const char* required : {"time", "a", "b"}) {
                if (!column.contains(required))
                    throw ParseError("edge-event CSV header must contain time,a,b (line " + std::to_string(line_no) + ")");
            }
            have_header = true;
            continue;
        }

        ++out.records;
        const auto skip = [&](std::string message) {
            out.warnings.push_back({line_no, std::move(message)});
            ++skipped;
        };
        std::vector<std::string> fields;
        try {
            fields = split_csv_line(line);
        } catch (const ParseError& e) {
            skip(e.what());
            continue;
        }
        const auto field = [&](const char* name) -> std::string_view {
            const auto it = column.find(name);
            if (it == column.end() || it->second >= fields.size()) return {};
            return trim(fields[it->second]);
        };

        Timestamp time;
        try {
            time = Timestamp::parse(field("time"));
        } catch (const ParseError& e) {
            skip(e.what());
            continue;
        }
        const std::string_view a = field("a");
        const std::string_view b = field("b");
        if (a.empty()) {
            skip("missing actor a");
            continue;
        }
        if (b.empty()) {
            out.arrivals.push_back({time, ActorId(a)});
            continue;
        }
        if (a == b) {
            skip("self-loop on actor '" + std::string(a) + "'");
            continue;
        }
        std::uint64_t weight = 1;
        if (const std::string_view w = field("weight"); !w.empty()) {
            auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
            if (ec != std::errc{} || ptr != w.data() + w.size() || weight == 0) {
                skip("weight must be a positive integer, got '" + std::string(w) + "'");
                continue;
            }
        }
        out.events.push_back({time, ActorId(a), ActorId(b), weight});
    }
    if (!have_header) throw ParseError("edge-event CSV is empty (no header)");
    enforce_skip_limit(skipped, out.records, "rows");
    return out;
}

ParsedEvents parse_edge_events(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_edge_events(in);
}

ParsedPublications parse_publications(std::istream& in) {
    ParsedPublications out;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    std::size_t skipped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        ++out.lines;
        const auto skip = [&](std::string message) {
            out.warnings.push_back({line_no, std::move(message)});
            ++skipped;
        };
        try {
            const auto doc = nlohmann::json::parse(line);
            PublicationRecord rec;
            rec.pub_id = std::string(trim(doc.at("pub_id").get<std::string>()));
            if (rec.pub_id.empty()) {
                skip("empty pub_id");
                continue;
            }
            const auto& date = doc.at("date");
            rec.date = Timestamp::parse(date.is_number_integer() ? std::to_string(date.get<std::int64_t>())
                                                                 : date.get<std::string>());
            for (const auto& author : doc.at("authors")) {
                const auto name = trim(author.get<std::string>());
                if (name.empty()) continue;
                if (std::find(rec.authors.begin(), rec.authors.end(), name) == rec.authors.end())
                    rec.authors.emplace_back(name);
            }
            if (rec.authors.empty()) {
                skip("publication '" + rec.pub_id + "' has no authors");
                continue;
            }
            if (!seen_ids.insert(rec.pub_id).second) {
                skip("duplicate pub_id '" + rec.pub_id + "'");
                continue;
            }
            out.records.push_back(std::move(rec));
        } catch (const nlohmann::json::exception& e) {
            skip(std::string("malformed record: ") + e.what());
        } catch (const ParseError& e) {
            skip(e.what());
        }
    }
    enforce_skip_limit(skipped, out.lines, "publication records");
    return out;
}

ParsedPublications parse_publications(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_publications(in);
}

ParsedEvents expand_publications(std::span<const PublicationRecord> records) {
    ParsedEvents out;
    out.records = records.size();
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        std::vector<ActorId> authors;
        for (const auto& raw : rec.authors) {
            const auto name = trim(raw);
            if (!name.empty() && std::find(authors.begin(), authors.end(), name) == authors.end())
                authors.emplace_back(name);
        }
        if (authors.empty()) {
            out.warnings.push_back({r + 1, "publication '" + rec.pub_id + "' has no authors"});
            continue;
        }
        if (authors.size() == 1) {
            out.arrivals.push_back({rec.date, authors.front()});
            continue;
        }
        for (std::size_t i = 0; i < authors.size(); ++i) {
            for (std::size_t j = i + 1; j < authors.size(); ++j) out.events.push_back({rec.date, authors[i], authors[j], 1});
        }
    }
    return out;
}

void write_edge_events(std::ostream& out, std::span<const InteractionEvent> events,
                       std::span<const ActorArrival> arrivals) {
    out << "time,a,b,weight\n";
    for (const auto& ev : events) {
        out << ev.time.to_string() << ',' << csv_field(ev.a) << ',' << csv_field(ev.b) << ',' << ev.weight << '\n';
    }
    for (const auto& arrival : arrivals) out << arrival.time.to_string() << ',' << csv_field(arrival.actor) << ",,\n";
}

void write_snapshot_events(std::ostream& out, const GraphSnapshot& s, const Timestamp& time) {
    std::vector<InteractionEvent> events;
    events.reserve(s.num_links());
    for (const Edge& e : s.edges()) events.push_back({time, s.actor(e.u), s.actor(e.v), e.weight});
    std::vector<ActorArrival> arrivals;
    for (VertexId v = 0; v < s.num_actors(); ++v) {
        if (s.degree(v) == 0) arrivals.push_back({time, s.actor(v)});
    }
    write_edge_events(out, events, arrivals);
}

}  // namespace netevolve
