// Test-only oracles, deliberately independent of the library's numerics:
// time evolution by RK4 integration of the Schrodinger equation, eigenvalues
// by cyclic Jacobi rotations, erfc by long-double series / continued
// fraction. Used to cross-check the spectral propagator and frozen values.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

/// psi(t) from d psi/dt = -i H psi via classic RK4 with n_steps steps.
inline Eigen::VectorXcd rk4_evolve(const Eigen::MatrixXcd& h,
                                   const Eigen::VectorXcd& psi0, double t,
                                   int n_steps) {
  const std::complex<double> mi(0.0, -1.0);
  const double dt = t / n_steps;
  Eigen::VectorXcd psi = psi0;
  for (int s = 0; s < n_steps; ++s) {
    Eigen::VectorXcd k1 = mi * (h * psi);
    Eigen::VectorXcd k2 = mi * (h * (psi + 0.5 * dt * k1));
    Eigen::VectorXcd k3 = mi * (h * (psi + 0.5 * dt * k2));
    Eigen::VectorXcd k4 = mi * (h * (psi + dt * k3));
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

/// Ascending eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-28 * n * n) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = a(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

/// erfc to ~1e-17 absolute: alternating series for |x| < 2, Lentz continued
/// fraction for larger arguments, reflection for negative x.
inline long double erfc_ld(long double x) {
  const long double sqrt_pi = 1.7724538509055160272981674833411L;
  if (x < 0.0L) return 2.0L - erfc_ld(-x);
  if (x < 2.0L) {
    // erf(x) = 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1))
    long double term = x;
    long double sum = x;
    for (int n = 1; n < 200; ++n) {
      term *= -x * x / n;
      const long double inc = term / (2 * n + 1);
      sum += inc;
      if (std::abs(inc) < 1e-25L * std::abs(sum)) break;
    }
    return 1.0L - 2.0L / sqrt_pi * sum;
  }
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  // evaluated with modified Lentz; f converges to the bracketed denominator
  const long double tiny = 1e-40L;
  long double f = x;
  long double c = x;
  long double d = 0.0L;
  for (int n = 1; n < 400; ++n) {
    const long double a_n = n / 2.0L;
    d = x + a_n * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a_n / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0L) < 1e-22L) break;
  }
  return std::exp(-x * x) / (sqrt_pi * f);
}

/// Direct binomial sum for a majority vote, long double accumulation.
inline long double majority_vote_sum(long double p, int m) {
  long double total = 0.0L;
  for (int k = (m + 1) / 2; k <= m; ++k) {
    long double binom = 1.0L;
    for (int i = 0; i < k; ++i) binom = binom * (m - i) / (i + 1);
    total += binom * std::pow(p, k) * std::pow(1.0L - p, m - k);
  }
  return total;
}

/// Random dense Hermitian matrix with entries of order 1.
inline Eigen::MatrixXcd random_hermitian(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
  return h;
}

/// Random unit vector.
inline Eigen::VectorXcd random_state(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i)
    v(i) = std::complex<double>(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

}  // namespace oracle
