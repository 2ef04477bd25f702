#pragma once
// Reference implementations written directly from the definitions, using only
// std::complex. Nothing here calls into the library.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline double rho(C z, C w) { return std::abs(z - w) / std::abs(1.0 - std::conj(z) * w); }

inline C b(C lambda, C z) { return (z - lambda) / (1.0 - std::conj(lambda) * z); }

// Direct top-down recursion, exponential in the tuple length.
inline C divdiff(const std::vector<C>& pts, const std::vector<C>& vals, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return vals[lo];
  C tail = divdiff(pts, vals, lo + 1, hi);
  C head = divdiff(pts, vals, lo, hi - 1);
  return (tail - head) / b(pts[lo], pts[hi - 1]);
}

inline C divdiff(const std::vector<C>& pts, const std::vector<C>& vals) {
  return divdiff(pts, vals, 0, pts.size());
}

struct Atom {
  double theta;
  double weight;
};

inline double harmonic(double constant, const std::vector<Atom>& atoms, C z) {
  double v = constant;
  for (const auto& a : atoms) {
    C zeta = std::polar(1.0, a.theta);
    v += a.weight * (1.0 - std::norm(z)) / std::norm(zeta - z);
  }
  return v;
}

struct XnResult {
  double sup = 0.0;
  std::vector<std::size_t> argmax;
};

// Odometer over all ordered n-tuples of distinct indices.
inline XnResult xn(const std::vector<C>& pts, const std::vector<C>& vals, int n,
                   const std::function<double(C)>& h) {
  XnResult out;
  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    bool distinct = true;
    for (int a = 0; a < n; ++a) {
      for (int c = a + 1; c < n; ++c) distinct = distinct && idx[a] != idx[c];
    }
    if (distinct) {
      std::vector<C> tp, tv;
      double hs = 0.0;
      for (auto i : idx) {
        tp.push_back(pts[i]);
        tv.push_back(vals[i]);
        hs += h(pts[i]);
      }
      double v = std::abs(divdiff(tp, tv)) * std::exp(-hs);
      if (v > out.sup) {
        out.sup = v;
        out.argmax = idx;
      }
    }
    int pos = n - 1;
    while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == m) {
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

// Largest number of points in an open disk D(lambda, e^{-h(lambda)}), lambda in the set.
inline std::size_t max_count(const std::vector<C>& pts, const std::function<double(C)>& h) {
  std::size_t best = 0;
  for (const auto& l : pts) {
    std::size_t c = 0;
    for (const auto& w : pts) c += rho(l, w) < std::exp(-h(l)) ? 1 : 0;
    best = std::max(best, c);
  }
  return best;
}

}  // namespace oracle
