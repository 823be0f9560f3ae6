#pragma once

// Synthetic data sets shared by the unit, CLI and acceptance tests.

#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "flexdist/classify.hpp"
#include "flexdist/ingest.hpp"
#include "flexdist/schedule.hpp"
#include "flexdist/types.hpp"

namespace fixtures {

// A single impulse at slot 1 versus the same impulse one slot later.
inline const std::vector<double> kImpulseX{0, 12, 0, 0};
inline const std::vector<double> kImpulseY{0, 0, 12, 0};

struct DuckMonth {
  flexdist::TimeSeries series;
  std::size_t samples_per_day;
  std::size_t flat_day;
  std::size_t duplicate_day;
  std::size_t duplicated_from;
};

/// Net load of one half-hourly day with a morning bump, an evening peak and
/// a deep midday solar trough.
inline std::vector<double> duck_day(std::mt19937_64& rng, double jitter) {
  std::uniform_real_distribution<double> noise(-jitter, jitter);
  std::uniform_real_distribution<double> scale(0.9, 1.1);
  const double s = scale(rng);
  std::vector<double> day(48);
  for (std::size_t k = 0; k < day.size(); ++k) {
    const double h = static_cast<double>(k) / 2.0;
    const double morning = 1.2 * std::exp(-0.5 * std::pow((h - 7.5) / 1.0, 2));
    const double evening = 2.5 * std::exp(-0.5 * std::pow((h - 19.0) / 1.5, 2));
    const double solar = 2.5 * std::exp(-0.5 * std::pow((h - 12.5) / 2.5, 2));
    day[k] = 0.4 + s * (morning + evening - solar) + noise(rng);
  }
  return day;
}

/// 31 days: 29 jittered duck days, one flat day and one near-copy of an
/// earlier duck day.
inline DuckMonth duck_month(std::uint64_t seed = 2021) {
  std::mt19937_64 rng(seed);
  const std::size_t flat_day = 20, duplicate_day = 30, source = 5;
  std::vector<std::vector<double>> days;
  for (std::size_t d = 0; d < 31; ++d) {
    if (d == flat_day) {
      days.emplace_back(48, 0.8);
    } else if (d == duplicate_day) {
      std::uniform_real_distribution<double> tiny(-0.01, 0.01);
      std::vector<double> copy = days[source];
      for (double& v : copy) v += tiny(rng);
      days.push_back(std::move(copy));
    } else {
      days.push_back(duck_day(rng, 0.15));
    }
  }
  std::vector<double> flat;
  for (const auto& d : days) flat.insert(flat.end(), d.begin(), d.end());
  return {flexdist::TimeSeries(std::move(flat), 30, flexdist::ingest::parse_timestamp("2021-08-01T00:00")), 48,
          flat_day, duplicate_day, source};
}

/// Three classes of 24-slot days holding the same 2-slot pulse at different
/// times of day. Each pattern shifts its pulse by up to two slots and adds
/// a small non-negative base load.
inline flexdist::LabeledSet shifted_pulse_set(std::mt19937_64& rng, std::size_t per_class) {
  const std::vector<std::size_t> centres{3, 10, 17};
  const std::vector<std::string> names{"early", "midday", "late"};
  std::uniform_int_distribution<int> shift(-2, 2);
  std::uniform_real_distribution<double> base(0.0, 0.3);
  std::vector<flexdist::TimeSeries> patterns;
  for (std::size_t n = 0; n < per_class; ++n) {
    for (std::size_t c = 0; c < centres.size(); ++c) {
      std::vector<double> v(24);
      for (double& x : v) x = base(rng);
      const auto at = static_cast<std::size_t>(static_cast<int>(centres[c]) + shift(rng));
      v[at] += 4.0;
      v[at + 1] += 4.0;
      patterns.emplace_back(std::move(v), 60, std::nullopt, names[c]);
    }
  }
  return flexdist::LabeledSet(std::move(patterns), names);
}

inline std::vector<double> pulses(std::initializer_list<std::size_t> slots) {
  std::vector<double> v(24, 0.0);
  for (std::size_t s : slots) v[s] = 5.0;
  return v;
}

/// Original load has pulses in slots 3 and 15 (0-based); the ideal moves the
/// slot-15 pulse to slot 7. Three scenarios each leave exactly one slot of
/// the ideal uncovered:
///   wrong_pulse      moves the slot-3 pulse to 7 instead (slot 15 stays)
///   toward_ideal     moves the slot-15 pulse to 11, halfway to the ideal
///   wrong_direction  moves the slot-15 pulse to 19
struct TwoPulse {
  std::vector<double> original = pulses({3, 15});
  std::vector<double> ideal = pulses({3, 7});
  std::vector<double> wrong_pulse = pulses({7, 15});
  std::vector<double> toward_ideal = pulses({3, 11});
  std::vector<double> wrong_direction = pulses({3, 19});

  flexdist::ScenarioSet scenario_set() const {
    using flexdist::TimeSeries;
    return flexdist::ScenarioSet(TimeSeries(original, 60), TimeSeries(ideal, 60),
                                 {{"wrong_pulse", TimeSeries(wrong_pulse, 60)},
                                  {"toward_ideal", TimeSeries(toward_ideal, 60)},
                                  {"wrong_direction", TimeSeries(wrong_direction, 60)}});
  }
};

}  // namespace fixtures
