#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace shapeslab {

// Pre-Schwarzian h''/h' of the developing map of a Euclidean cone metric on
// the sphere with cone points y_i of curvature alpha_i (radians):
//     S(z) = sum_i -(alpha_i / 2pi) / (z - y_i).
// Each pole carries residue -alpha_i/2pi, and since the curvatures sum to
// 4pi, z*S(z) -> -2 at infinity (S is holomorphic in the chart at infinity).
inline std::complex<double> pre_schwarzian(const std::vector<std::complex<double>>& points,
                                           const std::vector<double>& curvatures,
                                           std::complex<double> z) {
  if (points.size() != curvatures.size())
    throw std::invalid_argument("points/curvatures size mismatch");
  constexpr double two_pi = 6.283185307179586476925;
  double sum = 0;
  for (double a : curvatures) sum += a;
  if (std::abs(sum - 2 * two_pi) > 1e-9 * two_pi)
    throw std::domain_error("curvatures must sum to 4pi");
  std::complex<double> s = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    std::complex<double> d = z - points[i];
    if (std::abs(d) < 1e-300) throw std::domain_error("evaluation at a pole");
    s += -(curvatures[i] / two_pi) / d;
  }
  return s;
}

// Contour residue of S at points[i] by an N-point trapezoid rule on a small
// circle; the trapezoid rule is exponentially accurate on periodic
// integrands, so this pins the residue to ~1e-8 easily.
inline std::complex<double> residue_at(const std::vector<std::complex<double>>& points,
                                       const std::vector<double>& curvatures, size_t i,
                                       double radius = 0.0, int n_samples = 256) {
  if (radius <= 0) {
    radius = 1e100;
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) radius = std::min(radius, 0.25 * std::abs(points[j] - points[i]));
    if (radius > 1e99) radius = 0.5;
  }
  std::complex<double> acc = 0;
  constexpr double two_pi = 6.283185307179586476925;
  for (int k = 0; k < n_samples; ++k) {
    double t = two_pi * k / n_samples;
    std::complex<double> w = radius * std::complex<double>(std::cos(t), std::sin(t));
    acc += pre_schwarzian(points, curvatures, points[i] + w) * w;
  }
  return acc / double(n_samples);  // (1/2pi i) * integral S dz, discretized
}

}  // namespace shapeslab
