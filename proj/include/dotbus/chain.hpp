#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace dotbus {

using HermitianMatrix = Eigen::MatrixXcd;

/// Largest entry of |H - H^dagger|.
double hermiticity_defect(const HermitianMatrix& h);

/// Throws std::invalid_argument unless the defect is <= 1e-12 relative to
/// the largest entry of H.
void require_hermitian(const HermitianMatrix& h);

/// Declarative description of an N-dot chain. Rates are in units of a
/// caller-chosen reference coupling with hbar = 1: nearest-neighbour tunnel
/// couplings Gamma_{i,i+1}, local fields eps_i, uniform onsite interaction U
/// and capacitive coupling V.
struct ChainSpec {
  int n_dots = 0;
  std::vector<double> tunnel_couplings;  // N-1 entries, nonnegative
  std::vector<double> onsite_fields;     // N entries
  double onsite_interaction = 0.0;       // U >= 0
  double capacitive_coupling = 0.0;      // V >= 0

  void validate() const;  // throws std::invalid_argument on any violation
};

struct UniformProfile {
  double gamma = 1.0;
};
struct EngineeredPstProfile {
  double gamma_max = 1.0;
};
struct SuperexchangeProfile {
  double epsilon = 0.1;
  double gamma_bulk = 1.0;
};
using CouplingProfile =
    std::variant<UniformProfile, EngineeredPstProfile, SuperexchangeProfile>;

/// Bond list for an n-dot chain under the given profile.
std::vector<double> couplings(const CouplingProfile& profile, int n_dots);

/// Two-electron basis label |i,j>: up spin on dot i, down spin on dot j
/// (1-based). The flat index is p = (i-1)*N + (j-1); the creation-operator
/// order is fixed so no fermionic sign bookkeeping is needed.
struct TwoElectronIndex {
  int up_site = 1;
  int down_site = 1;

  int flat(int n_dots) const;
  static TwoElectronIndex from_flat(int p, int n_dots);
};

/// Engineered couplings gamma_max * sqrt(i(n-i)) / sqrt(floor(n/2)*ceil(n/2)),
/// normalised so the central bond equals gamma_max exactly. End-to-end
/// transfer then completes at pst_transfer_time(n, gamma_max).
std::vector<double> pst_couplings(int n, double gamma_max);

/// [epsilon, gamma_bulk, ..., gamma_bulk, epsilon]: weakly coupled end dots
/// around a strongly coupled bulk. Warns on stderr unless
/// epsilon <= gamma_bulk / 10.
std::vector<double> superexchange_couplings(int n, double epsilon,
                                            double gamma_bulk);

/// (pi/2) * sqrt(floor(n/2)*ceil(n/2)) / gamma_max.
double pst_transfer_time(int n, double gamma_max);

/// Single-electron Hamiltonian: tridiagonal with onsite fields on the
/// diagonal and tunnel couplings off it.
HermitianMatrix build_h1(const ChainSpec& spec);

/// Two-electron Hamiltonian on the |i,j> basis (dimension N^2). Each spin
/// hops with the shared bond couplings; the diagonal is
/// U*[i==j] + V*[|i-j|==1] + eps_i + eps_j.
HermitianMatrix build_h2(const ChainSpec& spec);

/// True iff the diagonal of build_h2(spec) is constant (1e-12 relative),
/// which requires U = V = 0 and a uniform field. This is the condition for
/// running both electrons through an engineered chain simultaneously.
bool pst_diagonal_constant(const ChainSpec& spec);

}  // namespace dotbus
