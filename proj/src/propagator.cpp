#include "dotbus/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace dotbus {

namespace {

constexpr double kGoldenInv = 0.6180339887498949;

/// Golden-section refinement of a maximum bracketed by [lo, hi].
Peak golden_refine(const std::function<double(double)>& f, double lo,
                   double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kGoldenInv * (b - a);
  double d = a + kGoldenInv * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenInv * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenInv * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

void check_index(const SpectralDecomposition& decomp, int index,
                 const char* name) {
  if (index < 0 || index >= decomp.dim())
    throw std::invalid_argument(std::string(name) + " index out of range");
}

}  // namespace

double SpectralDecomposition::spectral_radius() const {
  if (eigenvalues.size() == 0) return 0.0;
  return std::max(std::abs(eigenvalues(0)),
                  std::abs(eigenvalues(eigenvalues.size() - 1)));
}

SpectralDecomposition eigendecompose(const HermitianMatrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("matrix must be square");
  if (h.rows() < 1 || h.rows() > 10000)
    throw std::invalid_argument("dimension out of range [1, 1e4]");
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

StateVector evolve(const SpectralDecomposition& decomp,
                   const StateVector& psi0, double t) {
  if (psi0.size() != decomp.dim())
    throw std::invalid_argument("state dimension mismatch");
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
  if (t == 0.0) return psi0;
  Eigen::VectorXcd coeffs = decomp.eigenvectors.adjoint() * psi0;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs(k) *= std::polar(1.0, -decomp.eigenvalues(k) * t);
  return decomp.eigenvectors * coeffs;
}

double transfer_fidelity(const SpectralDecomposition& decomp, int source,
                         int target, double t) {
  check_index(decomp, source, "source");
  check_index(decomp, target, "target");
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
  // row products first: swapping source and target then conjugates every
  // term, which leaves |amp| bitwise unchanged
  std::complex<double> amp(0.0, 0.0);
  for (Eigen::Index k = 0; k < decomp.dim(); ++k) {
    const std::complex<double> weight =
        decomp.eigenvectors(target, k) * std::conj(decomp.eigenvectors(source, k));
    amp += weight * std::polar(1.0, -decomp.eigenvalues(k) * t);
  }
  return std::clamp(std::norm(amp), 0.0, 1.0);
}

FidelityTrace fidelity_scan(const SpectralDecomposition& decomp, int source,
                            int target, double t_max, int n_points) {
  if (n_points < 2) throw std::invalid_argument("need at least 2 scan points");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("t_max must be positive");
  FidelityTrace trace;
  trace.times.reserve(n_points);
  trace.fidelities.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double t = t_max * i / (n_points - 1);
    trace.times.push_back(t);
    trace.fidelities.push_back(transfer_fidelity(decomp, source, target, t));
  }
  return trace;
}

Peak maximize_over_window(const std::function<double(double)>& f, double t_lo,
                          double t_hi, int grid_points, bool first_local_max) {
  if (!(t_hi > t_lo)) throw std::invalid_argument("empty search window");
  if (grid_points < 3) throw std::invalid_argument("need at least 3 grid points");

  std::vector<double> ts(grid_points);
  std::vector<double> vals(grid_points);
  for (int i = 0; i < grid_points; ++i) {
    ts[i] = t_lo + (t_hi - t_lo) * i / (grid_points - 1);
    vals[i] = f(ts[i]);
  }

  const double tol = 1e-6 * (t_hi - t_lo);
  Peak best{ts[0], vals[0]};
  for (int i = 0; i < grid_points; ++i)
    if (vals[i] > best.f_star) best = {ts[i], vals[i]};

  auto refine_around = [&](int i) {
    const int lo = std::max(0, i - 1);
    const int hi = std::min(grid_points - 1, i + 1);
    const Peak refined = golden_refine(f, ts[lo], ts[hi], tol);
    if (refined.f_star > best.f_star) best = refined;
    return refined;
  };

  if (first_local_max) {
    for (int i = 1; i + 1 < grid_points; ++i) {
      if (vals[i] >= vals[i - 1] && vals[i] > vals[i + 1]) {
        const Peak refined = golden_refine(f, ts[i - 1], ts[i + 1], tol);
        const Peak grid_peak{ts[i], vals[i]};
        return refined.f_star >= grid_peak.f_star ? refined : grid_peak;
      }
    }
    // monotone on the whole window: fall through to the global answer
  }

  for (int i = 1; i + 1 < grid_points; ++i)
    if (vals[i] >= vals[i - 1] && vals[i] > vals[i + 1]) refine_around(i);
  // the ends can hold the maximum too
  if (vals[0] > vals[1]) refine_around(0);
  if (vals[grid_points - 1] > vals[grid_points - 2])
    refine_around(grid_points - 1);
  return best;
}

Peak peak_fidelity(const SpectralDecomposition& decomp, int source, int target,
                   double t_window) {
  check_index(decomp, source, "source");
  check_index(decomp, target, "target");
  if (!(t_window > 0.0) || !std::isfinite(t_window))
    throw std::invalid_argument("t_window must be positive");

  // at least 40 grid points per spectral period 2 pi / lambda_max
  const double radius = decomp.spectral_radius();
  double points = 65.0;
  if (radius > 0.0)
    points = std::max(points, std::ceil(40.0 * t_window * radius / (2.0 * M_PI)));
  if (points > 2e7)
    throw std::runtime_error("peak search grid would be unreasonably large");

  auto f = [&](double t) { return transfer_fidelity(decomp, source, target, t); };
  return maximize_over_window(f, 0.0, t_window, static_cast<int>(points) + 1,
                              false);
}

}  // namespace dotbus
