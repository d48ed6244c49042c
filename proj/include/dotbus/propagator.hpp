#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "dotbus/chain.hpp"

namespace dotbus {

using StateVector = Eigen::VectorXcd;

/// Eigenvalues (ascending) and orthonormal eigenvectors (columns) of a
/// Hermitian matrix; drives the exact propagator U(t) = V e^{-i Lambda t} V^dag.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;

  Eigen::Index dim() const { return eigenvalues.size(); }
  /// Largest eigenvalue magnitude.
  double spectral_radius() const;
};

struct FidelityTrace {
  std::vector<double> times;       // strictly increasing
  std::vector<double> fidelities;  // in [0, 1]
};

struct Peak {
  double t_star = 0.0;
  double f_star = 0.0;
};

/// Throws std::invalid_argument for non-Hermitian input or dimensions
/// outside [1, 1e4]; std::runtime_error if the solver fails to converge.
SpectralDecomposition eigendecompose(const HermitianMatrix& h);

/// V e^{-i Lambda t} V^dag psi0. Negative t evolves backwards; t = 0 returns
/// psi0 unchanged.
StateVector evolve(const SpectralDecomposition& decomp, const StateVector& psi0,
                   double t);

/// |<target| e^{-iHt} |source>|^2 between basis states (0-based indices).
/// Computed from eigenvector row products, so swapping source and target
/// gives bitwise-identical results for real-symmetric matrices.
double transfer_fidelity(const SpectralDecomposition& decomp, int source,
                         int target, double t);

/// transfer_fidelity on a uniform n_points grid over [0, t_max].
FidelityTrace fidelity_scan(const SpectralDecomposition& decomp, int source,
                            int target, double t_max, int n_points);

/// Global maximum of the source->target fidelity on [0, t_window]: a coarse
/// grid with at least 40 points per spectral period, then golden-section
/// refinement of each local maximum to 1e-6 * t_window.
Peak peak_fidelity(const SpectralDecomposition& decomp, int source, int target,
                   double t_window);

/// Grid + golden-section maximiser behind peak_fidelity, usable for any
/// scalar function of time. With first_local_max the search stops at the
/// first interior local maximum of the grid instead of the global one.
Peak maximize_over_window(const std::function<double(double)>& f, double t_lo,
                          double t_hi, int grid_points,
                          bool first_local_max = false);

}  // namespace dotbus
