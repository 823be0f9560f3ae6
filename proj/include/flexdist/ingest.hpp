#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "flexdist/classify.hpp"
#include "flexdist/schedule.hpp"
#include "flexdist/types.hpp"

namespace flexdist::ingest {

/// long:    `timestamp,value` rows, or a single `value` column
/// wide:    one named column per series, optionally led by a timestamp column
/// labeled: `label,v1,...,vs`, one pattern per row
enum class Format { Long, Wide, Labeled };

enum class Header { Auto, Present, Absent };

struct SeriesFile {
  std::filesystem::path path;
  Format format = Format::Long;
  char delimiter = ',';
  Header header = Header::Auto;
  /// Used when the file carries no timestamps.
  int interval_minutes = 30;
};

TimeSeries read_series(const SeriesFile& file);
std::vector<NamedSeries> read_wide(const SeriesFile& file);
LabeledSet read_labeled_set(const SeriesFile& file);

/// Stream forms; `source` only names the input in error messages.
TimeSeries parse_series(std::istream& in, const SeriesFile& options, const std::string& source = "<stream>");
std::vector<NamedSeries> parse_wide(std::istream& in, const SeriesFile& options,
                                    const std::string& source = "<stream>");
LabeledSet parse_labeled_set(std::istream& in, const SeriesFile& options, const std::string& source = "<stream>");

/// Writes a series in long format. Values use the shortest representation
/// that reads back bit-exact; timestamps are emitted when the series has them.
void write_series(std::ostream& out, const TimeSeries& series, char delimiter = ',');
void write_wide(std::ostream& out, const std::vector<NamedSeries>& columns, char delimiter = ',');
void write_labeled_set(std::ostream& out, const LabeledSet& set, char delimiter = ',');

/// `YYYY-MM-DD`, `YYYY-MM-DDTHH:MM[:SS]` or the same with a space separator.
std::optional<Timestamp> parse_timestamp(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

}  // namespace flexdist::ingest
