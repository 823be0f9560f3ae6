#include "flexdist/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "flexdist/error.hpp"

namespace flexdist::ingest {

namespace {

struct Row {
  std::size_t line;
  std::vector<std::string> fields;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  s = strip(s);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<Row> read_rows(std::istream& in, char delimiter) {
  std::vector<Row> rows;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (strip(text).empty()) continue;
    Row row{line, {}};
    std::size_t begin = 0;
    for (;;) {
      const std::size_t end = text.find(delimiter, begin);
      row.fields.emplace_back(trim(std::string_view(text).substr(begin, end - begin)));
      if (end == std::string::npos) break;
      begin = end + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

bool looks_numeric(std::string_view s) {
  double v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && ptr == s.data() + s.size();
}

double parse_value(std::string_view s, std::size_t line) {
  if (s.empty()) throw ParseError(line, "missing value");
  double v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) throw NonFiniteSample(line, "line");
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "not a number: '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) throw NonFiniteSample(line, "line");
  return v;
}

bool has_header(const std::vector<Row>& rows, Header mode, auto&& first_row_is_data) {
  switch (mode) {
    case Header::Present:
      return true;
    case Header::Absent:
      return false;
    case Header::Auto:
      break;
  }
  return !rows.empty() && !first_row_is_data(rows.front());
}

bool is_time_column(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  return name == "timestamp" || name == "time" || name == "datetime" || name == "date";
}

// Sets the interval from consecutive timestamps, which must be strictly
// increasing and evenly spaced in whole minutes.
struct IntervalTracker {
  std::optional<Timestamp> start;
  std::optional<Timestamp> previous;
  std::optional<std::chrono::seconds> step;

  void push(const Timestamp& t, std::size_t line) {
    if (previous) {
      const auto diff = t - *previous;
      if (diff <= std::chrono::seconds::zero()) throw IrregularInterval(line, "timestamps must be strictly increasing");
      if (!step) {
        if (diff.count() % 60 != 0) throw IrregularInterval(line, "interval is not a whole number of minutes");
        step = diff;
      } else if (diff != *step) {
        throw IrregularInterval(line, "expected " + std::to_string(step->count() / 60) + "-minute spacing, found " +
                                          std::to_string(diff.count() / 60.0) + " minutes");
      }
    } else {
      start = t;
    }
    previous = t;
  }

  int interval_or(int fallback) const {
    return step ? static_cast<int>(step->count() / 60) : fallback;
  }
};

Timestamp require_timestamp(std::string_view s, std::size_t line) {
  auto t = parse_timestamp(s);
  if (!t) throw ParseError(line, "bad timestamp '" + std::string(s) + "'");
  return *t;
}

}  // namespace

std::optional<Timestamp> parse_timestamp(std::string_view text) {
  const std::string s(text);
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  char sep = 0;
  int consumed = 0;
  int n = std::sscanf(s.c_str(), "%d-%d-%d%n", &y, &mo, &d, &consumed);
  if (n != 3) return std::nullopt;
  if (static_cast<std::size_t>(consumed) != s.size()) {
    int rest = 0;
    n = std::sscanf(s.c_str() + consumed, "%c%d:%d%n", &sep, &h, &mi, &rest);
    if (n != 3 || (sep != 'T' && sep != ' ')) return std::nullopt;
    consumed += rest;
    if (static_cast<std::size_t>(consumed) != s.size()) {
      rest = 0;
      n = std::sscanf(s.c_str() + consumed, ":%d%n", &sec, &rest);
      if (n != 1) return std::nullopt;
      consumed += rest;
    }
    if (static_cast<std::size_t>(consumed) != s.size()) return std::nullopt;
  }
  using namespace std::chrono;
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || sec < 0 || sec > 59) return std::nullopt;
  return Timestamp{sys_days{ymd}} + hours{h} + minutes{mi} + seconds{sec};
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

TimeSeries parse_series(std::istream& in, const SeriesFile& options, const std::string& source) {
  const auto rows = read_rows(in, options.delimiter);
  const bool header =
      has_header(rows, options.header, [](const Row& r) { return looks_numeric(r.fields.back()); });
  const std::size_t first = header ? 1 : 0;
  if (rows.size() <= first) throw EmptyFile(source);

  const std::size_t width = rows[first].fields.size();
  if (width != 1 && width != 2) throw ParseError(rows[first].line, "long format expects 1 or 2 columns");

  std::vector<double> values;
  values.reserve(rows.size() - first);
  IntervalTracker times;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.fields.size() != width) throw RaggedRows(row.line, width, row.fields.size());
    if (width == 2) times.push(require_timestamp(row.fields[0], row.line), row.line);
    values.push_back(parse_value(row.fields.back(), row.line));
  }
  return TimeSeries(std::move(values), times.interval_or(options.interval_minutes), times.start);
}

std::vector<NamedSeries> parse_wide(std::istream& in, const SeriesFile& options, const std::string& source) {
  const auto rows = read_rows(in, options.delimiter);
  const bool header = has_header(rows, options.header, [](const Row& r) {
    return std::all_of(r.fields.begin(), r.fields.end(), [](const std::string& f) { return looks_numeric(f); });
  });
  const std::size_t first = header ? 1 : 0;
  if (rows.size() <= first) throw EmptyFile(source);

  const std::size_t width = rows[first].fields.size();
  std::vector<std::string> names;
  if (header) {
    names = rows.front().fields;
    if (names.size() != width) throw RaggedRows(rows[first].line, names.size(), width);
  } else {
    for (std::size_t c = 0; c < width; ++c) names.push_back("col" + std::to_string(c + 1));
  }
  const bool timed = header && width > 1 && is_time_column(names.front());
  const std::size_t first_col = timed ? 1 : 0;

  std::vector<std::vector<double>> columns(width - first_col);
  IntervalTracker times;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.fields.size() != width) throw RaggedRows(row.line, width, row.fields.size());
    if (timed) times.push(require_timestamp(row.fields[0], row.line), row.line);
    for (std::size_t c = first_col; c < width; ++c) {
      columns[c - first_col].push_back(parse_value(row.fields[c], row.line));
    }
  }

  std::vector<NamedSeries> out;
  for (std::size_t c = first_col; c < width; ++c) {
    out.push_back({names[c], TimeSeries(std::move(columns[c - first_col]), times.interval_or(options.interval_minutes),
                                        times.start)});
  }
  return out;
}

LabeledSet parse_labeled_set(std::istream& in, const SeriesFile& options, const std::string& source) {
  const auto rows = read_rows(in, options.delimiter);
  const bool header = has_header(rows, options.header,
                                 [](const Row& r) { return r.fields.size() < 2 || looks_numeric(r.fields[1]); });
  const std::size_t first = header ? 1 : 0;
  if (rows.size() <= first) throw EmptyFile(source);

  const std::size_t width = rows[first].fields.size();
  if (width < 2) throw ParseError(rows[first].line, "labeled format needs a label and at least one value");

  std::vector<TimeSeries> patterns;
  for (std::size_t r = first; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.fields.size() != width) throw RaggedRows(row.line, width, row.fields.size());
    if (row.fields[0].empty()) throw MissingLabel(row.line);
    std::vector<double> values;
    values.reserve(width - 1);
    for (std::size_t c = 1; c < width; ++c) values.push_back(parse_value(row.fields[c], row.line));
    patterns.emplace_back(std::move(values), options.interval_minutes, std::nullopt, row.fields[0]);
  }
  return LabeledSet(std::move(patterns));
}

TimeSeries read_series(const SeriesFile& file) {
  auto in = open(file.path);
  return parse_series(in, file, file.path.string());
}

std::vector<NamedSeries> read_wide(const SeriesFile& file) {
  auto in = open(file.path);
  return parse_wide(in, file, file.path.string());
}

LabeledSet read_labeled_set(const SeriesFile& file) {
  auto in = open(file.path);
  return parse_labeled_set(in, file, file.path.string());
}

void write_series(std::ostream& out, const TimeSeries& series, char delimiter) {
  if (series.start()) {
    out << "timestamp" << delimiter << "value\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
      out << format_timestamp(*series.time_at(i)) << delimiter << format_number(series[i]) << '\n';
    }
  } else {
    out << "value\n";
    for (double v : series.values()) out << format_number(v) << '\n';
  }
}

void write_wide(std::ostream& out, const std::vector<NamedSeries>& columns, char delimiter) {
  if (columns.empty()) return;
  const TimeSeries& lead = columns.front().series;
  const bool timed = lead.start().has_value();
  if (timed) out << "timestamp" << delimiter;
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? std::string(1, delimiter) : "") << columns[c].name;
  out << '\n';
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (timed) out << format_timestamp(*lead.time_at(i)) << delimiter;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out << (c ? std::string(1, delimiter) : "") << format_number(columns[c].series[i]);
    }
    out << '\n';
  }
}

void write_labeled_set(std::ostream& out, const LabeledSet& set, char delimiter) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << set.label(i);
    for (double v : set.patterns()[i].values()) out << delimiter << format_number(v);
    out << '\n';
  }
}

}  // namespace flexdist::ingest
