#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netevolve/errors.hpp"
#include "netevolve/graph.hpp"

namespace netevolve {

/// Edge-event CSV, UTF-8, LF line endings:
///
///     time,a,b,weight
///     2009-02-07T13:05,IC1,PO2,1
///
/// `weight` is optional (default 1) and columns are matched by header name.
/// Fields may be double-quoted. A row with an empty `b` registers `a` as an
/// actor without a tie. Bad rows are skipped with a warning; skipping more than
/// 10% of the data rows is a ParseError.
struct ParsedEvents {
    std::vector<InteractionEvent> events;
    std::vector<ActorArrival> arrivals;
    std::vector<IngestWarning> warnings;
    std::size_t records = 0;  // data rows (or input records) seen
};

inline constexpr double kMaxSkippedFraction = 0.10;

ParsedEvents parse_edge_events(std::istream& in);
/// Throws IoError when the file cannot be opened.
ParsedEvents parse_edge_events(const std::filesystem::path& path);

struct PublicationRecord {
    std::string pub_id;
    Timestamp date;
    std::vector<ActorId> authors;
};

struct ParsedPublications {
    std::vector<PublicationRecord> records;
    std::vector<IngestWarning> warnings;
    std::size_t lines = 0;
};

/// JSON Lines, one {"pub_id": ..., "date": ..., "authors": [...]} object per
/// line. Authors are trimmed and deduplicated case-sensitively; duplicate
/// pub_ids, empty author lists and malformed lines are skipped with a warning.
/// Same 10% rule as the CSV reader.
ParsedPublications parse_publications(std::istream& in);
ParsedPublications parse_publications(const std::filesystem::path& path);

/// Clique expansion: k >= 2 authors give k(k-1)/2 unit events at the
/// publication date; a single author becomes an arrival.
ParsedEvents expand_publications(std::span<const PublicationRecord> records);

/// RFC 4180 quoting where needed.
std::string csv_field(std::string_view text);
/// Splits one CSV line honoring double quotes. Throws ParseError on an unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

void write_edge_events(std::ostream& out, std::span<const InteractionEvent> events,
                       std::span<const ActorArrival> arrivals = {});

/// Every edge of `s` as one event carrying its accumulated weight, isolated
/// actors as arrival rows, all stamped `time`.
void write_snapshot_events(std::ostream& out, const GraphSnapshot& s, const Timestamp& time);

}  // namespace netevolve
