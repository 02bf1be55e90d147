#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "odflow/common.hpp"
#include "odflow/odmatrix.hpp"

namespace odflow {

inline void check_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw ShapeError("metric inputs differ in size: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  if (a.empty()) throw DomainError("metric inputs are empty");
}

// Root mean square error over all ordered pairs.
inline double rmse(std::span<const double> ref, std::span<const double> gen) {
  check_same_size(ref, gen);
  double acc = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = ref[i] - gen[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(ref.size()));
}

// RMSE normalized by the population standard deviation of the reference.
inline double nrmse(std::span<const double> ref, std::span<const double> gen) {
  check_same_size(ref, gen);
  const double n = static_cast<double>(ref.size());
  double mean = 0.0;
  for (const double v : ref) mean += v;
  mean /= n;
  double var = 0.0;
  for (const double v : ref) var += (v - mean) * (v - mean);
  var /= n;
  if (var <= 0.0)
    throw DomainError("nrmse undefined: reference flows are constant");
  return rmse(ref, gen) / std::sqrt(var);
}

// Common part of commuting: 2*sum(min)/(sum(ref)+sum(gen)), in [0, 1].
inline double cpc(std::span<const double> ref, std::span<const double> gen) {
  check_same_size(ref, gen);
  double common = 0.0, total = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (ref[i] < 0.0 || gen[i] < 0.0)
      throw DomainError("cpc requires non-negative flows");
    common += std::min(ref[i], gen[i]);
    total += ref[i] + gen[i];
  }
  if (total <= 0.0) throw DomainError("cpc undefined: both matrices are all-zero");
  return 2.0 * common / total;
}

namespace detail {

// Fractional ranks with ties assigned the average rank (1-based).
inline std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
    i = j + 1;
  }
  return rank;
}

inline double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa <= 0.0 || sbb <= 0.0)
    throw DomainError("spearman undefined: an input is constant");
  return sab / std::sqrt(saa * sbb);
}

}  // namespace detail

// Spearman rank correlation with average-rank tie handling.
inline double spearman(std::span<const double> ref, std::span<const double> gen) {
  check_same_size(ref, gen);
  if (ref.size() < 2) throw DomainError("spearman needs at least 2 pairs");
  const auto ra = detail::average_ranks(ref);
  const auto rb = detail::average_ranks(gen);
  return detail::pearson(ra, rb);
}

struct RankCurve {
  std::vector<double> reference;
  std::vector<double> generated;
};

namespace detail {

inline std::vector<double> minmax_normalize(std::vector<double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double span = *hi - *lo;
  for (double& x : v) x = span > 0.0 ? (x - *lo) / span : 0.0;
  return v;
}

inline std::vector<double> moving_average(const std::vector<double>& v, std::size_t window) {
  if (window <= 1) return v;
  const std::size_t half = (window - 1) / 2;
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(v.size() - 1, i + half);
    double acc = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) acc += v[k];
    out[i] = acc / static_cast<double>(hi - lo + 1);
  }
  return out;
}

}  // namespace detail

// Sorts the reference ascending, reorders the generated flows by the same
// permutation, min-max normalizes both to [0,1] and smooths with a centered
// moving average.
inline RankCurve rank_curve(std::span<const double> ref, std::span<const double> gen,
                            std::size_t smoothing_window) {
  check_same_size(ref, gen);
  if (smoothing_window == 0 || smoothing_window > ref.size())
    throw UsageError("rank_curve: smoothing window must be in [1, n]");
  std::vector<std::size_t> order(ref.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ref[a] < ref[b]; });
  std::vector<double> r(ref.size()), g(gen.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    r[k] = ref[order[k]];
    g[k] = gen[order[k]];
  }
  RankCurve curve;
  curve.reference = detail::moving_average(detail::minmax_normalize(std::move(r)), smoothing_window);
  curve.generated = detail::moving_average(detail::minmax_normalize(std::move(g)), smoothing_window);
  return curve;
}

inline std::size_t default_smoothing_window(std::size_t n_pairs) {
  return std::max<std::size_t>(3, n_pairs / 200);
}

struct EvalReport {
  double rmse = 0.0;
  double nrmse = 0.0;
  double cpc = 0.0;
  double spearman = 0.0;
  std::size_t n_pairs = 0;
  std::vector<std::string> notes;  // undefined metrics are recorded here
};

namespace detail {

inline std::vector<double> strip_diagonal(std::span<const double> m, std::size_t n) {
  std::vector<double> out;
  out.reserve(n * n - n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(m[i * n + j]);
  return out;
}

}  // namespace detail

// Full metric suite over two aligned matrices. Metrics that are undefined
// for the given inputs are reported as NaN with a note instead of aborting
// the whole evaluation.
inline EvalReport evaluate(const ODMatrix& ref, const ODMatrix& gen,
                           bool exclude_diagonal = false) {
  const ODMatrix aligned = gen.aligned_to(ref.region_ids());
  std::vector<double> r(ref.flows().begin(), ref.flows().end());
  std::vector<double> g(aligned.flows().begin(), aligned.flows().end());
  if (exclude_diagonal) {
    r = detail::strip_diagonal(r, ref.size());
    g = detail::strip_diagonal(g, ref.size());
  }
  EvalReport rep;
  rep.n_pairs = r.size();
  rep.rmse = rmse(r, g);
  try {
    rep.nrmse = nrmse(r, g);
  } catch (const DomainError& e) {
    rep.nrmse = std::nan("");
    rep.notes.emplace_back(e.what());
  }
  try {
    rep.cpc = cpc(r, g);
  } catch (const DomainError& e) {
    rep.cpc = std::nan("");
    rep.notes.emplace_back(e.what());
  }
  try {
    rep.spearman = spearman(r, g);
  } catch (const DomainError& e) {
    rep.spearman = std::nan("");
    rep.notes.emplace_back(e.what());
  }
  return rep;
}

}  // namespace odflow
