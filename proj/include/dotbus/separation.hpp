#pragma once

#include "dotbus/chain.hpp"
#include "dotbus/propagator.hpp"

namespace dotbus {

/// Double quantum dot holding one up and one down electron; rates in units
/// of a reference coupling (hbar = 1).
struct DoubleDotSpec {
  double gamma = 1.0;
  double onsite_u = 0.0;      // U
  double capacitive_v = 0.0;  // V
  double eps1 = 0.0;
  double eps2 = 0.0;

  void validate() const;
};

struct SeparationResult {
  double t_opt = 0.0;     // first fidelity maximum, the protocol operating point
  double fidelity = 0.0;  // separated-subspace population at t_opt
  FidelityTrace trace;
  double detuning_delta = 0.0;  // E(|2,2>) - E(|1,2>) of the built Hamiltonian
  double suppression_m = 0.0;   // detuning_delta / gamma
};

/// Four-state dynamics from |1,1>. The separation fidelity is the population
/// of the separated subspace, F(t) = |<1,2|psi>|^2 + |<2,1|psi>|^2; the two
/// amplitudes stay equal by symmetry, so this matches the overlap with
/// (|1,2> + |2,1>)/sqrt2 for this initial state. The optimum reported is the
/// first local maximum within one period of the reduced model,
/// [0, 2*pi/(sqrt2 gamma)]; the trace covers [0, t_max] with n_points.
SeparationResult separation_fidelity_trace(const DoubleDotSpec& spec,
                                           double t_max, int n_points);

/// Field on dot 2 keeping |1,1>, |1,2>, |2,1> degenerate: eps1 + U - V.
/// The leftover detuning of |2,2> is then 2*(eps2 - eps1).
double optimal_detuning_field(double onsite_u, double capacitive_v, double eps1);

/// Symmetric-subspace reduction on (|1,1>, (|1,2>+|2,1>)/sqrt2, |2,2>):
/// both bonds sqrt(2)*gamma, third node detuned by delta.
HermitianMatrix reduced_three_node_hamiltonian(double gamma, double delta);

/// Transition probability of a two-level system with coupling gamma and
/// detuning delta: (gamma^2/n^2) sin^2(n t), n = sqrt(gamma^2 + (delta/2)^2).
double two_level_transition_probability(double gamma, double delta, double t);

/// Peak of the above over t: 1 / (1 + m^2/4) with m = delta/gamma.
double max_suppressed_transfer(double m);

}  // namespace dotbus
