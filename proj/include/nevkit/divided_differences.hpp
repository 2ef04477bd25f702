#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nevkit/geometry.hpp"
#include "nevkit/majorant.hpp"
#include "nevkit/scaled_complex.hpp"
#include "nevkit/sequence.hpp"

namespace nevkit {

/// Pseudohyperbolic divided difference of order tuple.size() - 1:
///
///   D^0(l1)          = omega(l1)
///   D^j(l1..l_{j+1}) = (D^{j-1}(l2..l_{j+1}) - D^{j-1}(l1..lj)) / b_{l1}(l_{j+1})
///
/// `values[i]` is omega(tuple[i]). Repeated points throw InvalidInput
/// ("tuple not in Lambda^n"). Divisions by factors below 1e-12 in modulus are
/// carried out in log-magnitude form, so the scaled result never overflows.
ScaledComplex divided_difference_scaled(std::span<const DiskPoint> tuple,
                                        std::span<const Complex> values);

/// Linear value of divided_difference_scaled (may be inf for extreme inputs).
Complex divided_difference(std::span<const DiskPoint> tuple, std::span<const Complex> values);

/// Divided difference of the sequence's values along a tuple of indices.
Complex divided_difference(const LabeledSequence& seq, std::span<const std::size_t> indices);

/// Divided difference along points of the sequence; throws InvalidInput if a
/// point is not in the sequence or the sequence carries no values.
Complex divided_difference(const LabeledSequence& seq, std::span<const DiskPoint> tuple);

struct XnOptions {
  int max_n = 4;                        // cap on tuple length
  std::uint64_t budget = 10'000'000;    // cap on |Lambda|^n
  unsigned threads = 0;                 // 0 = hardware concurrency
};

/// sup over ordered tuples of distinct points (lambda_1..lambda_n) of
///   |D^{n-1} omega(lambda_1..lambda_n)| * exp(-(H(lambda_1) + ... + H(lambda_n))).
struct DividedDifferenceStat {
  int order = 0;                          // n - 1
  double sup_value = 0.0;
  double log_sup = 0.0;                   // -inf when the sup is 0
  std::vector<std::size_t> witness;       // lexicographically first argmax
  std::vector<DiskPoint> witness_points;
  HarmonicMajorant majorant;
  std::uint64_t tuples = 0;               // tuples evaluated
};

/// Exact enumeration of the order-(n-1) statistic. The reduction over tuples
/// is a max with lexicographic tie-breaking, so the witness is independent of
/// thread scheduling. Throws InvalidInput for n outside [1, max_n] or missing
/// values, BudgetExceeded when |Lambda|^n > budget.
DividedDifferenceStat xn_statistic(const LabeledSequence& seq, int n, const HarmonicMajorant& h,
                                   const XnOptions& options = {});

/// Constructive bound for the chain X^n subset X^{n-1}: given the order-n
/// statistic S under H, every tuple in Lambda^n satisfies
///   |D^{n-1} omega| <= K e^{H(lambda_1) + ... + H(lambda_n)}
/// where K is the worst case over base-point sets of
///   S * sum_i e^{H(l^0_1) + ... + H(l^0_i)} + |D^{n-1} omega(l^0_n, ..., l^0_1)|
/// and the base points l^0 are the first n sequence points not in the tuple.
struct InclusionBound {
  HarmonicMajorant majorant;            // H~ (equal to H for this telescoping)
  double constant = 0.0;                // K
  double order_n_sup = 0.0;             // S
  std::vector<std::size_t> worst_base;  // base points attaining K
};

/// Throws InvalidInput when |Lambda| < 2n.
InclusionBound lemma_inclusions_bound(const LabeledSequence& seq, int n,
                                      const HarmonicMajorant& h, const XnOptions& options = {});

struct TraceInclusionReport {
  int order = 0;
  HarmonicMajorant majorant;             // H~ after the doubling updates
  double max_ratio = 0.0;                // max |D^{n-1} f| e^{-sum H~}
  std::vector<DiskPoint> worst_tuple;
  std::size_t samples = 0;
  bool holds = true;                     // max_ratio <= 1
};

/// Samples random tuples in D^n and compares |D^{n-1} f| with e^{sum H~(z_i)},
/// where H~ starts from `witness` (|f| <= e^{witness}) and is updated n-1
/// times by H -> 2H + log 4.
TraceInclusionReport verify_trace_inclusion(const std::function<Complex(const DiskPoint&)>& f,
                                            int n, const HarmonicMajorant& witness,
                                            std::size_t samples, std::uint64_t seed);

}  // namespace nevkit
