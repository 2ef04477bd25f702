#include "nevkit/divided_differences.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "nevkit/errors.hpp"
#include "nevkit/random.hpp"

namespace nevkit {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_tuple_distinct(std::span<const DiskPoint> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) throw InvalidInput("tuple not in Lambda^n: repeated point");
    }
  }
}

// Best tuple seen by one worker. Tuples arrive in lexicographic order, so a
// strict comparison keeps the first argmax.
struct Best {
  bool set = false;
  double log_value = kNegInf;
  double abs_mantissa = 0.0;  // value = abs_mantissa * e^{log_rest}
  double log_rest = 0.0;
  std::vector<std::size_t> tuple;
};

class TupleEnumerator {
 public:
  TupleEnumerator(const std::vector<DiskPoint>& points, const std::vector<Complex>& values,
                  const HarmonicMajorant& h, int n)
      : m_(points.size()), n_(static_cast<std::size_t>(n)), values_(values), h_(m_), b_(m_ * m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      h_[i] = h.eval(points[i]);
      for (std::size_t j = 0; j < m_; ++j) b_[i * m_ + j] = blaschke_factor(points[i], points[j]);
    }
  }

  // All tuples starting with `first`.
  Best run(std::size_t first, std::uint64_t& count) const {
    Best best;
    std::vector<std::size_t> tuple(n_);
    std::vector<char> used(m_, 0);
    // diag[d][i] = D^i(tuple[d-i] .. tuple[d])
    std::vector<std::vector<ScaledComplex>> diag(n_);
    for (std::size_t d = 0; d < n_; ++d) diag[d].resize(d + 1);
    tuple[0] = first;
    used[first] = 1;
    diag[0][0] = ScaledComplex(values_[first]);
    descend(1, h_[first], tuple, used, diag, best, count);
    return best;
  }

 private:
  void descend(std::size_t depth, double h_sum, std::vector<std::size_t>& tuple,
               std::vector<char>& used, std::vector<std::vector<ScaledComplex>>& diag, Best& best,
               std::uint64_t& count) const {
    if (depth == n_) {
      ++count;
      const ScaledComplex& d = diag[n_ - 1][n_ - 1];
      const double v = d.log_abs() - h_sum;
      if (!best.set || v > best.log_value) {
        best.set = true;
        best.log_value = v;
        best.abs_mantissa = std::abs(d.mantissa);
        best.log_rest = d.log_scale - h_sum;
        best.tuple = tuple;
      }
      return;
    }
    for (std::size_t p = 0; p < m_; ++p) {
      if (used[p]) continue;
      tuple[depth] = p;
      auto& cur = diag[depth];
      const auto& prev = diag[depth - 1];
      cur[0] = ScaledComplex(values_[p]);
      for (std::size_t i = 1; i <= depth; ++i) {
        cur[i] = divide(cur[i - 1] - prev[i - 1], b_[tuple[depth - i] * m_ + p]);
      }
      used[p] = 1;
      descend(depth + 1, h_sum + h_[p], tuple, used, diag, best, count);
      used[p] = 0;
    }
  }

  std::size_t m_;
  std::size_t n_;
  const std::vector<Complex>& values_;
  std::vector<double> h_;
  std::vector<Complex> b_;
};

double power_or_inf(std::size_t base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= static_cast<double>(base);
  return r;
}

}  // namespace

ScaledComplex divided_difference_scaled(std::span<const DiskPoint> tuple,
                                        std::span<const Complex> values) {
  if (tuple.empty()) throw InvalidInput("divided difference of an empty tuple");
  if (values.size() != tuple.size()) throw InvalidInput("missing value for a tuple point");
  require_tuple_distinct(tuple);
  const std::size_t k = tuple.size();
  std::vector<ScaledComplex> col(k);
  for (std::size_t i = 0; i < k; ++i) col[i] = ScaledComplex(values[i]);
  for (std::size_t j = 1; j < k; ++j) {
    for (std::size_t i = 0; i + j < k; ++i) {
      col[i] = divide(col[i + 1] - col[i], blaschke_factor(tuple[i], tuple[i + j]));
    }
  }
  return col[0];
}

Complex divided_difference(std::span<const DiskPoint> tuple, std::span<const Complex> values) {
  return divided_difference_scaled(tuple, values).value();
}

Complex divided_difference(const LabeledSequence& seq, std::span<const std::size_t> indices) {
  const auto& values = seq.require_values();
  std::vector<DiskPoint> pts;
  std::vector<Complex> vals;
  for (auto i : indices) {
    if (i >= seq.size()) throw InvalidInput("tuple index outside the sequence");
    pts.push_back(seq.points()[i]);
    vals.push_back(values[i]);
  }
  return divided_difference(pts, vals);
}

Complex divided_difference(const LabeledSequence& seq, std::span<const DiskPoint> tuple) {
  std::vector<std::size_t> idx;
  for (const auto& p : tuple) {
    auto i = seq.index_of(p);
    if (!i) throw InvalidInput("missing value: tuple point is not in the sequence");
    idx.push_back(*i);
  }
  return divided_difference(seq, idx);
}

DividedDifferenceStat xn_statistic(const LabeledSequence& seq, int n, const HarmonicMajorant& h,
                                   const XnOptions& options) {
  if (n < 1 || n > options.max_n) {
    throw InvalidInput("tuple length n=" + std::to_string(n) + " outside [1, " +
                       std::to_string(options.max_n) + "]");
  }
  const auto& values = seq.require_values();
  const std::size_t m = seq.size();
  const double work = power_or_inf(m, n);
  if (work > static_cast<double>(options.budget)) {
    throw BudgetExceeded("enumerating |Lambda|^n = " + std::to_string(m) + "^" +
                         std::to_string(n) + " tuples exceeds the budget of " +
                         std::to_string(options.budget) + "; raise --budget or subsample");
  }

  DividedDifferenceStat stat;
  stat.order = n - 1;
  stat.majorant = h;
  stat.log_sup = kNegInf;
  if (m < static_cast<std::size_t>(n)) return stat;

  const TupleEnumerator enumerator(seq.points(), values, h, n);
  std::vector<Best> per_first(m);
  std::vector<std::uint64_t> counts(m, 0);

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m)));
  if (threads == 1 || work < 4096.0) {
    for (std::size_t f = 0; f < m; ++f) per_first[f] = enumerator.run(f, counts[f]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t f = next++; f < m; f = next++) per_first[f] = enumerator.run(f, counts[f]);
      });
    }
    for (auto& th : pool) th.join();
  }

  Best best;
  for (std::size_t f = 0; f < m; ++f) {
    stat.tuples += counts[f];
    const Best& b = per_first[f];
    if (b.set && (!best.set || b.log_value > best.log_value)) best = b;
  }
  stat.log_sup = best.log_value;
  // The linear form keeps exact rescalings exact; the log form covers the
  // ranges where it over- or underflows.
  stat.sup_value = best.abs_mantissa * std::exp(best.log_rest);
  if (!std::isfinite(stat.sup_value) || (stat.sup_value == 0.0 && best.abs_mantissa != 0.0)) {
    stat.sup_value = std::exp(best.log_value);
  }
  stat.witness = best.tuple;
  for (auto i : stat.witness) stat.witness_points.push_back(seq.points()[i]);
  return stat;
}

InclusionBound lemma_inclusions_bound(const LabeledSequence& seq, int n,
                                      const HarmonicMajorant& h, const XnOptions& options) {
  if (n < 1) throw InvalidInput("lemma_inclusions_bound requires n >= 1");
  const std::size_t nn = static_cast<std::size_t>(n);
  if (seq.size() < 2 * nn) {
    throw InvalidInput("too few points: need |Lambda| >= 2n for base points");
  }
  const auto& values = seq.require_values();
  const auto order_n = xn_statistic(seq, n + 1, h, options);

  InclusionBound out;
  out.majorant = h;
  out.order_n_sup = order_n.sup_value;

  // The tuple meets the first 2n points in at most n of them; each such
  // intersection fixes the base set (first n points outside the tuple).
  const std::size_t window = 2 * nn;
  std::set<std::vector<std::size_t>> bases;
  for (std::uint32_t mask = 0; mask < (1u << window); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > nn) continue;
    std::vector<std::size_t> base;
    for (std::size_t i = 0; i < window && base.size() < nn; ++i) {
      if (!(mask & (1u << i))) base.push_back(i);
    }
    bases.insert(base);
  }

  out.constant = -1.0;
  for (const auto& base : bases) {
    double sum = 0.0;
    double h_prefix = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
      h_prefix += h.eval(seq.points()[base[i]]);
      sum += std::exp(h_prefix);
    }
    std::vector<DiskPoint> rev_pts;
    std::vector<Complex> rev_vals;
    for (std::size_t i = nn; i-- > 0;) {
      rev_pts.push_back(seq.points()[base[i]]);
      rev_vals.push_back(values[base[i]]);
    }
    const double anchor = std::abs(divided_difference(rev_pts, rev_vals));
    const double k = order_n.sup_value * sum + anchor;
    if (k > out.constant) {
      out.constant = k;
      out.worst_base = base;
    }
  }
  return out;
}

TraceInclusionReport verify_trace_inclusion(const std::function<Complex(const DiskPoint&)>& f,
                                            int n, const HarmonicMajorant& witness,
                                            std::size_t samples, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("verify_trace_inclusion requires n >= 1");
  TraceInclusionReport report;
  report.order = n - 1;
  report.samples = samples;
  HarmonicMajorant h = witness;
  for (int j = 1; j < n; ++j) h = combine(h, 2.0, std::log(4.0));
  report.majorant = h;

  Rng rng(seed);
  std::vector<DiskPoint> tuple(static_cast<std::size_t>(n));
  std::vector<Complex> vals(tuple.size());
  double worst = kNegInf;
  for (std::size_t s = 0; s < samples; ++s) {
    double h_sum = 0.0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      // Alternate area-uniform and radially-uniform draws to reach the boundary.
      tuple[i] = (s % 2 == 0) ? rng.point_in_disk(0.999) : rng.point_radial(0.999);
      vals[i] = f(tuple[i]);
      h_sum += h.eval(tuple[i]);
    }
    const double log_ratio = divided_difference_scaled(tuple, vals).log_abs() - h_sum;
    if (log_ratio > worst || report.worst_tuple.empty()) {
      worst = log_ratio;
      report.worst_tuple = tuple;
    }
  }
  report.max_ratio = std::exp(worst);
  report.holds = report.max_ratio <= 1.0;
  return report;
}

}  // namespace nevkit
