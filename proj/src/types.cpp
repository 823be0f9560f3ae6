#include "flexdist/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flexdist/error.hpp"

namespace flexdist {

TimeSeries::TimeSeries(std::vector<double> values, int interval_minutes, std::optional<Timestamp> start,
                       std::optional<std::string> label)
    : values_(std::move(values)),
      interval_minutes_(interval_minutes),
      start_(start),
      label_(std::move(label)) {
  if (values_.empty()) throw EmptySeries();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw NonFiniteSample(i);
  }
  if (interval_minutes_ <= 0) throw InvalidArgument("interval_minutes must be positive");
}

std::optional<Timestamp> TimeSeries::time_at(std::size_t i) const {
  if (!start_) return std::nullopt;
  return *start_ + std::chrono::minutes(static_cast<long long>(i) * interval_minutes_);
}

TimeSeries TimeSeries::with_label(std::string label) const {
  TimeSeries copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

void validate_pair(const TimeSeries& x, const TimeSeries& y) {
  if (x.size() != y.size()) throw LengthMismatch(x.size(), y.size());
}

namespace {

void check_weight(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw InvalidArgument(std::string(what) + " weight must be finite and non-negative");
  }
}

}  // namespace

FdWeights FdWeights::maxmin_scaled(double amplitude) {
  check_weight(amplitude, "amplitude");
  FdWeights w;
  w.amplitude_ = amplitude;
  return w;
}

FdWeights FdWeights::constant(double amplitude, double temporal) {
  check_weight(amplitude, "amplitude");
  check_weight(temporal, "temporal");
  FdWeights w;
  w.amplitude_ = amplitude;
  w.mode_ = TemporalMode::Constant;
  w.temporal_ = temporal;
  return w;
}

double FdWeights::temporal_for(std::span<const double> x, std::span<const double> y) const {
  if (mode_ == TemporalMode::Constant) return temporal_;
  auto [xlo, xhi] = std::minmax_element(x.begin(), x.end());
  auto [ylo, yhi] = std::minmax_element(y.begin(), y.end());
  const double hi = std::max(*xhi, *yhi);
  const double lo = std::min(*xlo, *ylo);
  return (hi - lo) / static_cast<double>(x.size());
}

CostMatrix::CostMatrix(std::size_t dimension, std::vector<double> entries)
    : m_(dimension), entries_(std::move(entries)) {
  if (m_ == 0) throw InvalidArgument("cost matrix must be at least 1x1");
  if (entries_.size() != m_ * m_) throw NonSquare(m_, entries_.size() / m_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k])) throw NonFiniteEntry(k / m_, k % m_);
    if (entries_[k] < 0.0) throw NegativeEntry(k / m_, k % m_);
  }
}

CostMatrix CostMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t m = rows.size();
  std::vector<double> flat;
  flat.reserve(m * m);
  for (const auto& r : rows) {
    if (r.size() != m) throw NonSquare(m, r.size());
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return CostMatrix(m, std::move(flat));
}

Assignment::Assignment(std::vector<std::size_t> target_of, double total_cost)
    : target_of_(std::move(target_of)), total_cost_(total_cost) {
  std::vector<bool> seen(target_of_.size(), false);
  for (std::size_t j : target_of_) {
    if (j >= target_of_.size() || seen[j]) throw InvalidAssignment("target_of is not a permutation");
    seen[j] = true;
  }
  if (!std::isfinite(total_cost_) || total_cost_ < 0.0) {
    throw InvalidAssignment("assignment cost must be finite and non-negative");
  }
}

Assignment Assignment::identity(std::size_t m, double total_cost) {
  std::vector<std::size_t> t(m);
  for (std::size_t i = 0; i < m; ++i) t[i] = i;
  return Assignment(std::move(t), total_cost);
}

double canonical_sum(std::vector<double> selected) {
  std::sort(selected.begin(), selected.end());
  double total = 0.0;
  for (double v : selected) total += v;
  return total;
}

std::string format_timestamp(const Timestamp& t) {
  using namespace std::chrono;
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss hms{t - day};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

}  // namespace flexdist
