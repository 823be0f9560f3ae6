#include "flexdist/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <ostream>

#include "flexdist/bench.hpp"
#include "flexdist/classify.hpp"
#include "flexdist/discord.hpp"
#include "flexdist/error.hpp"
#include "flexdist/ingest.hpp"
#include "flexdist/metrics.hpp"
#include "flexdist/report.hpp"
#include "flexdist/reshaping.hpp"
#include "flexdist/schedule.hpp"

namespace flexdist::cli {

namespace {

using report::Json;
using ingest::format_number;

struct MeasureFlags {
  std::string measure = "fd";
  double amplitude = 1.0;
  std::string temporal = "maxmin";

  Measure build() const {
    if (measure == "ed") return Measure::euclidean();
    if (measure == "dtw") return Measure::dtw();
    if (temporal == "maxmin") return Measure::flexibility(FdWeights::maxmin_scaled(amplitude));
    double w = 0.0;
    try {
      std::size_t used = 0;
      w = std::stod(temporal, &used);
      if (used != temporal.size()) throw std::invalid_argument(temporal);
    } catch (const std::exception&) {
      throw InvalidArgument("--temporal-weight must be 'maxmin' or a non-negative number, got '" + temporal + "'");
    }
    return Measure::flexibility(FdWeights::constant(amplitude, w));
  }
};

struct InputFlags {
  char delimiter = ',';
  std::string header = "auto";
  int interval = 30;

  ingest::SeriesFile file(const std::string& path, ingest::Format format) const {
    ingest::SeriesFile f;
    f.path = path;
    f.format = format;
    f.delimiter = delimiter;
    f.header = header == "yes" ? ingest::Header::Present
               : header == "no" ? ingest::Header::Absent
                                : ingest::Header::Auto;
    f.interval_minutes = interval;
    return f;
  }
};

struct Context {
  std::string output = "json";
  MeasureFlags measure;
  InputFlags input;
};

void add_measure_flags(CLI::App* cmd, MeasureFlags& m) {
  cmd->add_option("--measure", m.measure, "Distance measure")
      ->check(CLI::IsMember({"ed", "dtw", "fd"}))
      ->capture_default_str();
  cmd->add_option("--amplitude-weight", m.amplitude, "FD amplitude weight P")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--temporal-weight", m.temporal, "FD temporal weight T: a non-negative constant or 'maxmin'")
      ->capture_default_str();
}

void add_common_flags(CLI::App* cmd, Context& ctx) {
  cmd->add_option("--output", ctx.output, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--delimiter", ctx.input.delimiter, "CSV field delimiter")->capture_default_str();
  cmd->add_option("--header", ctx.input.header, "Header row: auto-detect, always or never")
      ->check(CLI::IsMember({"auto", "yes", "no"}))
      ->capture_default_str();
  cmd->add_option("--interval", ctx.input.interval, "Sample interval in minutes for files without timestamps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

Json series_summary(const std::string& path, const TimeSeries& s) {
  return Json{{"path", path}, {"length", s.size()}, {"interval_minutes", s.interval_minutes()}};
}

// CSV projection: tables separated by a blank line.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void table(const std::vector<std::string>& header) {
    if (started_) out_ << '\n';
    started_ = true;
    row(header);
  }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << fields[i];
    out_ << '\n';
  }

 private:
  std::ostream& out_;
  bool started_ = false;
};

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(double v) { return format_number(v); }

struct Outcome {
  Json inputs;
  Json results;
  std::function<void(CsvWriter&)> csv;
};

Outcome cmd_dist(const Context& ctx, const std::string& x_path, const std::string& y_path, bool with_plan,
                 bool with_matrix) {
  const TimeSeries x = ingest::read_series(ctx.input.file(x_path, ingest::Format::Long));
  const TimeSeries y = ingest::read_series(ctx.input.file(y_path, ingest::Format::Long));
  validate_pair(x, y);
  const Measure measure = ctx.measure.build();

  Outcome o;
  o.inputs = Json{{"x", series_summary(x_path, x)}, {"y", series_summary(y_path, y)}, {"measure", report::to_json(measure)}};
  const double d = distance(measure, x, y);
  o.results["distance"] = d;

  std::optional<ReshapePlan> p;
  std::optional<CostMatrix> matrix;
  if (measure.kind() == MeasureKind::Flexibility) {
    if (with_plan) {
      p = plan(x, y, measure.weights());
      o.results["plan"] = report::to_json(*p);
    }
    if (with_matrix) {
      matrix = fd_cost_matrix(x, y, measure.weights());
      o.results["cost_matrix"] = report::to_json(*matrix);
    }
  } else if (with_plan || with_matrix) {
    throw InvalidArgument("--plan and --matrix require --measure fd");
  }

  o.csv = [=](CsvWriter& w) {
    w.table({"measure", "distance"});
    w.row({measure.name(), str(d)});
    if (p) {
      w.table({"from_index", "to_index", "source_value", "target_value", "amplitude_cost", "temporal_cost",
               "total_cost"});
      for (const Move& m : p->moves) {
        w.row({str(m.from_index), str(m.to_index), str(m.source_value), str(m.target_value), str(m.amplitude_cost),
               str(m.temporal_cost), str(m.total_cost)});
      }
    }
    if (matrix) {
      std::vector<std::string> header{"row"};
      for (std::size_t j = 0; j < matrix->dimension(); ++j) header.push_back("c" + str(j));
      w.table(header);
      for (std::size_t i = 0; i < matrix->dimension(); ++i) {
        std::vector<std::string> fields{str(i)};
        for (double v : matrix->row(i)) fields.push_back(str(v));
        w.row(fields);
      }
    }
  };
  return o;
}

Outcome cmd_discord(const Context& ctx, const std::string& path, std::size_t samples_per_day) {
  const TimeSeries series = ingest::read_series(ctx.input.file(path, ingest::Format::Long));
  const Measure measure = ctx.measure.build();
  const DayMatrix days = segment_days(series, samples_per_day);
  const MatrixProfile profile = matrix_profile(days, measure);
  const Discord discord = find_discord(profile);

  Outcome o;
  o.inputs = Json{{"series", series_summary(path, series)},
                  {"samples_per_day", samples_per_day},
                  {"measure", report::to_json(measure)}};
  o.results = report::to_json(days, profile, discord);
  o.csv = [=](CsvWriter& w) {
    w.table({"day", "start", "nn_index", "nn_distance", "is_discord"});
    for (std::size_t a = 0; a < days.days.size(); ++a) {
      const auto& start = days.days[a].start();
      w.row({str(a), start ? format_timestamp(*start) : "", str(profile.nn_index[a]), str(profile.nn_distance[a]),
             a == discord.day ? "1" : "0"});
    }
    w.table({"dropped_tail"});
    w.row({str(days.dropped_tail)});
  };
  return o;
}

Outcome cmd_knn(const Context& ctx, const std::string& train_path, const std::string& test_path, std::size_t k,
                bool leave_one_out) {
  const LabeledSet train = ingest::read_labeled_set(ctx.input.file(train_path, ingest::Format::Labeled));
  const Measure measure = ctx.measure.build();

  std::optional<LabeledSet> test;
  Evaluation eval = [&] {
    if (leave_one_out) return evaluate_leave_one_out(train, k, measure);
    if (test_path.empty()) throw InvalidArgument("a test file is required unless --loo is given");
    test = ingest::read_labeled_set(ctx.input.file(test_path, ingest::Format::Labeled));
    return evaluate(*test, train, k, measure);
  }();
  const LabeledSet& queries = test ? *test : train;

  Outcome o;
  o.inputs = Json{{"train", Json{{"path", train_path}, {"patterns", train.size()}, {"length", train.pattern_length()}}},
                  {"k", k},
                  {"leave_one_out", leave_one_out},
                  {"measure", report::to_json(measure)}};
  if (test) o.inputs["test"] = Json{{"path", test_path}, {"patterns", test->size()}};

  Json predictions = Json::array();
  for (std::size_t q = 0; q < queries.size(); ++q) {
    predictions.push_back(Json{{"index", q}, {"truth", queries.label(q)}, {"prediction", eval.predictions[q]}});
  }
  o.results["predictions"] = std::move(predictions);
  o.results["confusion_matrix"] = report::to_json(eval.confusion);
  o.results["accuracy"] = eval.confusion.accuracy();

  std::vector<std::string> truths;
  for (std::size_t q = 0; q < queries.size(); ++q) truths.push_back(queries.label(q));
  o.csv = [eval = std::move(eval), truths = std::move(truths)](CsvWriter& w) {
    const auto& classes = eval.confusion.classes();
    std::vector<std::string> header{"truth\\prediction"};
    header.insert(header.end(), classes.begin(), classes.end());
    w.table(header);
    for (std::size_t t = 0; t < classes.size(); ++t) {
      std::vector<std::string> fields{classes[t]};
      for (std::size_t p = 0; p < classes.size(); ++p) fields.push_back(str(eval.confusion.count(t, p)));
      w.row(fields);
    }
    w.table({"accuracy"});
    w.row({str(eval.confusion.accuracy())});
    w.table({"index", "truth", "prediction"});
    for (std::size_t q = 0; q < truths.size(); ++q) w.row({str(q), truths[q], eval.predictions[q]});
  };
  return o;
}

std::vector<NamedSeries> read_bundle(const Context& ctx, const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(path)) return ingest::read_wide(ctx.input.file(path, ingest::Format::Wide));
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<NamedSeries> out;
  for (const auto& f : files) {
    out.push_back({f.stem().string(), ingest::read_series(ctx.input.file(f.string(), ingest::Format::Long))});
  }
  return out;
}

Outcome cmd_rank(const Context& ctx, const std::string& bundle_path, const std::string& ideal_name,
                 const std::string& original_name) {
  std::vector<NamedSeries> bundle = read_bundle(ctx, bundle_path);
  auto take = [&](const std::string& name, const char* flag) {
    auto it = std::find_if(bundle.begin(), bundle.end(), [&](const NamedSeries& s) { return s.name == name; });
    if (it == bundle.end()) throw InvalidArgument(std::string(flag) + " profile '" + name + "' not found in bundle");
    TimeSeries s = it->series;
    bundle.erase(it);
    return s;
  };
  TimeSeries ideal = take(ideal_name, "--ideal");
  TimeSeries original = take(original_name, "--original");
  const Measure measure = ctx.measure.build();
  const ScenarioSet set(std::move(original), std::move(ideal), std::move(bundle));
  const RankedReport ranked = rank_scenarios(set, measure);

  Outcome o;
  o.inputs = Json{{"bundle", bundle_path},
                  {"ideal", ideal_name},
                  {"original", original_name},
                  {"scenarios", set.scenarios().size()},
                  {"length", set.ideal().size()},
                  {"measure", report::to_json(measure)}};
  o.results = report::to_json(ranked);
  o.csv = [=](CsvWriter& w) {
    w.table({"baseline"});
    w.row({str(ranked.baseline)});
    w.table({"rank", "name", "distance", "improvement", "worse_than_baseline"});
    for (const auto& r : ranked.rows) {
      w.row({str(r.rank), r.name, str(r.distance), str(r.improvement), r.worse_than_baseline ? "1" : "0"});
    }
  };
  return o;
}

Outcome cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t seed,
                  const std::vector<std::string>& measure_names) {
  if (reps < bench::kMinRepetitions) {
    throw InvalidArgument("--reps must be at least " + std::to_string(bench::kMinRepetitions));
  }
  std::vector<Measure> measures;
  for (const auto& name : measure_names) {
    MeasureFlags f;
    f.measure = name;
    measures.push_back(f.build());
  }
  const bench::Report r = bench::run(measures, sizes, reps, seed);

  Outcome o;
  o.inputs = Json{{"sizes", sizes}, {"repetitions", reps}, {"seed", seed}, {"measures", measure_names}};
  o.results = report::to_json(r);
  o.csv = [=](CsvWriter& w) {
    w.table({"measure", "size", "repetitions", "median_ms"});
    for (const auto& t : r.timings) w.row({t.measure, str(t.size), str(t.repetitions), str(t.median_ms)});
    w.table({"measure", "loglog_slope"});
    for (const auto& s : r.slopes) w.row({s.measure, str(s.value)});
  };
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flexibility Distance, ED and DTW for load profiles"};
  app.require_subcommand(1);
  Context ctx;

  std::string x_path, y_path;
  bool with_plan = false, with_matrix = false;
  auto* dist = app.add_subcommand("dist", "Distance between two series");
  dist->add_option("x", x_path, "Source series (long CSV)")->required();
  dist->add_option("y", y_path, "Target series (long CSV)")->required();
  dist->add_flag("--plan", with_plan, "Include the optimal reshape plan (FD only)");
  dist->add_flag("--matrix", with_matrix, "Include the FD cost matrix");

  std::string series_path;
  std::size_t samples_per_day = 0;
  auto* discord = app.add_subcommand("discord", "Matrix profile over days and the most anomalous day");
  discord->add_option("series", series_path, "Series (long CSV)")->required();
  discord->add_option("--samples-per-day", samples_per_day, "Samples in one day")->required()->check(CLI::PositiveNumber);

  std::string train_path, test_path;
  std::size_t k = 5;
  bool leave_one_out = false;
  auto* knn = app.add_subcommand("knn", "KNN classification with a confusion matrix");
  knn->add_option("train", train_path, "Training patterns (labeled CSV)")->required();
  knn->add_option("test", test_path, "Test patterns (labeled CSV)");
  knn->add_option("--k", k, "Number of neighbours")->check(CLI::PositiveNumber)->capture_default_str();
  knn->add_flag("--loo", leave_one_out, "Leave-one-out over the training set");

  std::string bundle_path, ideal_name, original_name;
  auto* rank = app.add_subcommand("rank", "Rank rescheduling scenarios by distance to an ideal profile");
  rank->add_option("bundle", bundle_path, "Wide CSV with one column per profile, or a directory of long CSVs")
      ->required();
  rank->add_option("--ideal", ideal_name, "Name of the ideal profile")->required();
  rank->add_option("--original", original_name, "Name of the original profile")->required();

  std::vector<std::size_t> sizes = bench::kDefaultSizes;
  std::size_t reps = bench::kMinRepetitions;
  std::uint64_t seed = 42;
  std::vector<std::string> bench_measures{"ed", "dtw", "fd"};
  auto* bench_cmd = app.add_subcommand("bench", "Median run time of each measure on random series");
  bench_cmd->add_option("--sizes", sizes, "Series lengths")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--reps", reps, "Repetitions per size")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  bench_cmd->add_option("--measures", bench_measures, "Measures to time")
      ->delimiter(',')
      ->check(CLI::IsMember({"ed", "dtw", "fd"}))
      ->capture_default_str();

  for (auto* cmd : {dist, discord, knn, rank}) {
    add_common_flags(cmd, ctx);
    add_measure_flags(cmd, ctx.measure);
  }
  bench_cmd->add_option("--output", ctx.output, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::string command;
    if (*dist) {
      command = "dist";
      o = cmd_dist(ctx, x_path, y_path, with_plan, with_matrix);
    } else if (*discord) {
      command = "discord";
      o = cmd_discord(ctx, series_path, samples_per_day);
    } else if (*knn) {
      command = "knn";
      o = cmd_knn(ctx, train_path, test_path, k, leave_one_out);
    } else if (*rank) {
      command = "rank";
      o = cmd_rank(ctx, bundle_path, ideal_name, original_name);
    } else {
      command = "bench";
      o = cmd_bench(sizes, reps, seed, bench_measures);
    }
    const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (ctx.output == "csv") {
      CsvWriter w(out);
      o.csv(w);
    } else {
      Json doc;
      doc["command"] = command;
      doc["argv"] = std::vector<std::string>(argv + 1, argv + argc);
      doc["inputs"] = std::move(o.inputs);
      doc["results"] = std::move(o.results);
      doc["timing_ms"] = elapsed;
      out << doc.dump(2) << '\n';
    }
    return kSuccess;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace flexdist::cli
