#pragma once

#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qm/cayley.hpp"
#include "qm/quasimorphism.hpp"

namespace qm {

/// The uniform bound on |delta h_w| for both group families.
inline constexpr int kDefectBound = 78;

/// All pairs (x, y) with |x|, |y| <= radius.
struct ExhaustiveStrategy {
  int radius = 3;
};

/// count pairs of random words, each of uniformly drawn length in
/// [0, max_length] with uniformly drawn letters.
struct RandomStrategy {
  long long count = 10'000;
  int max_length = 50;
  std::uint64_t seed = 42;
};

using DefectStrategy = std::variant<ExhaustiveStrategy, RandomStrategy>;

enum class Execution { kSerial, kParallel };

struct DefectRow {
  int x_len = 0;
  int y_len = 0;
  int delta_abs = 0;
  friend bool operator==(const DefectRow&, const DefectRow&) = default;
};

struct DefectReport {
  std::string pattern_id;
  std::string strategy;
  std::uint64_t seed = 0;
  long long samples = 0;
  int observed_max = 0;
  int bound = kDefectBound;
  std::map<int, long long> histogram;  // |delta| -> count
  std::vector<DefectRow> rows;         // in sample order
  /// First sample (in sample order) exceeding the bound, formatted.
  std::optional<std::pair<std::string, std::string>> witness;

  bool passed() const { return observed_max <= bound; }
  /// Columns x_len,y_len,delta_abs, then a summary header and line
  /// observed_max,bound,samples,seed.
  void write_csv(std::ostream& os) const;

  friend bool operator==(const DefectReport&, const DefectReport&) = default;
};

std::string describe(const DefectStrategy& s);

/// Reproducible draw in [0, n) from a 64-bit engine, independent of the
/// standard library's distribution implementations.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

template <GroupModel M>
typename M::Word random_word(const M& m, std::mt19937_64& rng, int max_length) {
  typename M::Word w;
  const int len = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_length) + 1));
  for (int i = 0; i < len; ++i)
    w.push_back(m.letter(static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(m.alphabet_size())))));
  return w;
}

/// Sample pairs in a fixed order determined only by the strategy (and seed).
template <GroupModel M>
std::vector<std::pair<typename M::Element, typename M::Element>> defect_samples(const M& m,
                                                                               const DefectStrategy& strategy) {
  std::vector<std::pair<typename M::Element, typename M::Element>> out;
  if (const auto* ex = std::get_if<ExhaustiveStrategy>(&strategy)) {
    const auto ball = cayley_ball(m, ex->radius);
    out.reserve(ball.size() * ball.size());
    for (const auto& x : ball)
      for (const auto& y : ball) out.emplace_back(x.first, y.first);
  } else {
    const auto& r = std::get<RandomStrategy>(strategy);
    std::mt19937_64 rng(r.seed);
    out.reserve(static_cast<std::size_t>(r.count));
    for (long long i = 0; i < r.count; ++i) {
      auto x = m.element(random_word(m, rng, r.max_length));
      auto y = m.element(random_word(m, rng, r.max_length));
      out.emplace_back(std::move(x), std::move(y));
    }
  }
  return out;
}

namespace detail {

template <GroupModel M>
DefectReport start_report(const Pattern<M>& w, const DefectStrategy& strategy, std::string id) {
  DefectReport rep;
  rep.pattern_id = std::move(id);
  rep.strategy = describe(strategy);
  if (const auto* r = std::get_if<RandomStrategy>(&strategy)) rep.seed = r->seed;
  (void)w;
  return rep;
}

inline void record(DefectReport& rep, const DefectRow& row) {
  rep.rows.push_back(row);
  rep.histogram[row.delta_abs] += 1;
  rep.observed_max = std::max(rep.observed_max, row.delta_abs);
  ++rep.samples;
}

}  // namespace detail

/// Reference implementation: one pair at a time, in sample order.
template <GroupModel M>
DefectReport defect_scan_serial(const M& m, const Pattern<M>& w, const DefectStrategy& strategy,
                                std::string id = "") {
  detail::require_square_reduced(m, w);
  DefectReport rep = detail::start_report(w, strategy, std::move(id));
  for (const auto& [x, y] : defect_samples(m, strategy)) {
    const int d = delta_h(m, w, x, y);
    const DefectRow row{m.length(x), m.length(y), d < 0 ? -d : d};
    if (row.delta_abs > rep.bound && !rep.witness)
      rep.witness.emplace(m.format(m.word(x)), m.format(m.word(y)));
    detail::record(rep, row);
  }
  return rep;
}

/// OpenMP evaluation of the same samples. Per-sample results land in
/// sample-indexed slots and are aggregated in order, so the report is
/// identical to defect_scan_serial.
template <GroupModel M>
DefectReport defect_scan_parallel(const M& m, const Pattern<M>& w, const DefectStrategy& strategy,
                                  std::string id = "") {
  detail::require_square_reduced(m, w);
  DefectReport rep = detail::start_report(w, strategy, std::move(id));
  const auto samples = defect_samples(m, strategy);
  const long long n = static_cast<long long>(samples.size());
  std::vector<DefectRow> rows(samples.size());
  std::vector<std::exception_ptr> errors(samples.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    try {
      const auto& [x, y] = samples[i];
      const int d = delta_h(m, w, x, y);
      rows[i] = {m.length(x), m.length(y), d < 0 ? -d : d};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (long long i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (rows[i].delta_abs > rep.bound && !rep.witness)
      rep.witness.emplace(m.format(m.word(samples[i].first)), m.format(m.word(samples[i].second)));
    detail::record(rep, rows[i]);
  }
  return rep;
}

template <GroupModel M>
DefectReport defect_scan(const M& m, const Pattern<M>& w, const DefectStrategy& strategy,
                         Execution exec = Execution::kParallel, std::string id = "") {
  return exec == Execution::kSerial ? defect_scan_serial(m, w, strategy, std::move(id))
                                    : defect_scan_parallel(m, w, strategy, std::move(id));
}

/// h_w over a batch of elements; OpenMP over elements.
template <GroupModel M>
std::vector<QmValue> qm_values(const M& m, const std::vector<typename M::Element>& elements, const Pattern<M>& w,
                               Execution exec = Execution::kParallel) {
  detail::require_square_reduced(m, w);
  std::vector<QmValue> out(elements.size());
  const long long n = static_cast<long long>(elements.size());
  if (exec == Execution::kSerial) {
    for (long long i = 0; i < n; ++i) out[i] = qm_value(m, elements[i], w);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < n; ++i) out[i] = qm_value(m, elements[i], w);
  return out;
}

}  // namespace qm
