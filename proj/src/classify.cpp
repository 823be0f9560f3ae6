#include "flexdist/classify.hpp"

#include <algorithm>
#include <numeric>

#include "flexdist/error.hpp"

namespace flexdist {

namespace {

std::vector<std::string> classes_in_order(const std::vector<TimeSeries>& patterns) {
  std::vector<std::string> classes;
  for (const auto& p : patterns) {
    if (std::find(classes.begin(), classes.end(), *p.label()) == classes.end()) classes.push_back(*p.label());
  }
  return classes;
}

std::size_t class_index(const std::vector<std::string>& classes, const std::string& label) {
  return static_cast<std::size_t>(std::find(classes.begin(), classes.end(), label) - classes.begin());
}

}  // namespace

LabeledSet::LabeledSet(std::vector<TimeSeries> patterns) : patterns_(std::move(patterns)) {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (!patterns_[i].label() || patterns_[i].label()->empty()) {
      throw InvalidArgument("pattern " + std::to_string(i) + " has no label");
    }
    if (patterns_[i].size() != patterns_.front().size()) {
      throw LengthMismatch(patterns_.front().size(), patterns_[i].size());
    }
  }
  classes_ = classes_in_order(patterns_);
}

LabeledSet::LabeledSet(std::vector<TimeSeries> patterns, std::vector<std::string> classes)
    : LabeledSet(std::move(patterns)) {
  for (const auto& c : classes_) {
    if (class_index(classes, c) == classes.size()) throw InvalidArgument("label '" + c + "' missing from class list");
  }
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      if (classes[a] == classes[b]) throw InvalidArgument("duplicate class '" + classes[a] + "'");
    }
  }
  classes_ = std::move(classes);
}

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> classes)
    : classes_(std::move(classes)), k_(classes_.size()), counts_(k_ * k_, 0) {}

void ConfusionMatrix::add(std::size_t truth, std::size_t predicted) { ++counts_[truth * k_ + predicted]; }

std::size_t ConfusionMatrix::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t ConfusionMatrix::row_sum(std::size_t truth) const {
  std::size_t s = 0;
  for (std::size_t p = 0; p < k_; ++p) s += count(truth, p);
  return s;
}

std::size_t ConfusionMatrix::column_sum(std::size_t predicted) const {
  std::size_t s = 0;
  for (std::size_t t = 0; t < k_; ++t) s += count(t, predicted);
  return s;
}

double ConfusionMatrix::accuracy() const noexcept {
  const std::size_t n = total();
  if (n == 0) return 0.0;
  std::size_t trace = 0;
  for (std::size_t c = 0; c < k_; ++c) trace += count(c, c);
  return static_cast<double>(trace) / static_cast<double>(n);
}

std::optional<double> ConfusionMatrix::precision(std::size_t predicted) const {
  const std::size_t col = column_sum(predicted);
  if (col == 0) return std::nullopt;
  return static_cast<double>(count(predicted, predicted)) / static_cast<double>(col);
}

KnnResult knn_classify(const TimeSeries& query, const LabeledSet& train, std::size_t k, const Measure& measure,
                       std::optional<std::size_t> exclude) {
  if (k == 0) throw InvalidArgument("k must be positive");
  const std::size_t available = train.size() - (exclude && *exclude < train.size() ? 1 : 0);
  if (k > available) throw KTooLarge(k, available);
  if (query.size() != train.pattern_length()) throw LengthMismatch(query.size(), train.pattern_length());

  std::vector<Neighbor> all;
  all.reserve(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (exclude && *exclude == i) continue;
    all.push_back({i, distance(measure, query, train.patterns()[i])});
  }
  auto closer = [](const Neighbor& a, const Neighbor& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
  };
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end(), closer);
  all.resize(k);

  const auto& classes = train.classes();
  std::vector<std::size_t> votes(classes.size(), 0);
  std::vector<double> summed(classes.size(), 0.0);
  for (const Neighbor& n : all) {
    const std::size_t c = class_index(classes, train.label(n.index));
    ++votes[c];
    summed[c] += n.distance;
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (votes[c] > votes[best] || (votes[c] == votes[best] && votes[c] > 0 && summed[c] < summed[best])) best = c;
  }
  return {classes[best], std::move(all)};
}

namespace {

Evaluation tally(const LabeledSet& test, std::vector<std::string> classes, auto&& classify_one) {
  for (const auto& c : test.classes()) {
    if (class_index(classes, c) == classes.size()) classes.push_back(c);
  }
  Evaluation out{ConfusionMatrix(classes), {}};
  out.predictions.reserve(test.size());
  for (std::size_t q = 0; q < test.size(); ++q) {
    std::string predicted = classify_one(q);
    out.confusion.add(class_index(classes, test.label(q)), class_index(classes, predicted));
    out.predictions.push_back(std::move(predicted));
  }
  return out;
}

}  // namespace

Evaluation evaluate(const LabeledSet& test, const LabeledSet& train, std::size_t k, const Measure& measure) {
  if (test.size() > 0 && test.pattern_length() != train.pattern_length()) {
    throw LengthMismatch(test.pattern_length(), train.pattern_length());
  }
  if (k > train.size()) throw KTooLarge(k, train.size());
  return tally(test, train.classes(),
               [&](std::size_t q) { return knn_classify(test.patterns()[q], train, k, measure).label; });
}

Evaluation evaluate_leave_one_out(const LabeledSet& set, std::size_t k, const Measure& measure) {
  if (set.size() > 0 && k + 1 > set.size()) throw KTooLarge(k, set.size() - 1);
  return tally(set, set.classes(),
               [&](std::size_t q) { return knn_classify(set.patterns()[q], set, k, measure, q).label; });
}

}  // namespace flexdist
