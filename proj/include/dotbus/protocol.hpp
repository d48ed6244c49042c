#pragma once

#include <array>

#include "dotbus/energetics.hpp"
#include "dotbus/separation.hpp"

namespace dotbus {

/// Charge-qubit coherence times against the planned transfer duration.
struct CoherenceBudget {
  double t1_s = 30e-9;
  double t2_s = 7e-9;
  double transfer_time_s = 0.0;
};

/// Report of one four-step bus run: separate, transfer the up spin, transfer
/// the down spin, recombine.
struct ProtocolReport {
  std::array<double, 4> stage_fidelities{};
  double total_fidelity = 0.0;
  double total_time_s = 0.0;
  double separation_time_s = 0.0;  // one separation stage
  double chain_time_s = 0.0;       // one chain transfer stage
  CostReport energy;
  bool feasible_within_t2 = false;
};

/// Two-electron logical encoding across an n-dot engineered chain with
/// physical peak coupling hbar_gamma_ev (eV). Stages 1 and 4 use the
/// double-dot separation optimum, stages 2 and 3 the exact chain transfer;
/// stages compose multiplicatively (interactions are frozen in between).
ProtocolReport run_two_electron_bus(
    int n_dots, double hbar_gamma_ev, const DoubleDotSpec& separation_spec,
    const MaterialParams& material = MaterialParams::gaas());

/// Single-electron encoding: one chain transfer, no separation stages.
ProtocolReport run_single_electron_bus(
    int n_dots, double hbar_gamma_ev,
    const MaterialParams& material = MaterialParams::gaas());

/// Peak fidelity near t = pi/2 for both electrons crossing an n-dot chain
/// with unnormalised engineered couplings sqrt(i(n-i)) and onsite
/// interaction U = u_over_gamma_min * Gamma_{1,2}, starting from |1,1> and
/// targeting |n,n>. Guarded to n^2 <= 4096.
double pretty_good_two_electron_transfer(int n_dots, double u_over_gamma_min);

/// True iff the transfer completes within the dephasing time.
bool coherence_feasibility(const CoherenceBudget& budget);

struct SegmentedResult {
  int n_segments = 0;
  double fidelity = 0.0;
  double energy_mev = 0.0;
};

/// Sequential application over ceil(n_total / segment_length) segments:
/// fidelities multiply, energies add.
SegmentedResult segmented_transfer(int n_total, int segment_length,
                                   double per_segment_fidelity,
                                   double per_segment_energy_mev);

/// Probability that the majority of m independent runs (m odd) succeeds when
/// each succeeds with probability p_single.
double majority_vote_success(double p_single, int m_repetitions);

/// Back-of-envelope linear transfer-time estimate
/// (pi/2) * n * hbar / (hbar Gamma); about 3N ps at 360 ueV. The exact
/// engineered-chain time is shorter, approaching half of this for large n.
double linear_transfer_time_estimate_s(int n_dots, double hbar_gamma_ev);

}  // namespace dotbus
