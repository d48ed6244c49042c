#include "dotbus/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "dotbus/propagator.hpp"

namespace dotbus {

namespace {

constexpr double kSeparationWindowFactor = 2.0 * M_PI / M_SQRT2;

double physical_rate_rad_s(double hbar_gamma_ev) {
  if (!(hbar_gamma_ev > 0.0) || !std::isfinite(hbar_gamma_ev))
    throw std::invalid_argument("hbar*Gamma must be positive");
  return hbar_gamma_ev * constants::elementary_charge_c / constants::hbar_js;
}

/// End-to-end fidelity of an engineered n-dot chain at its transfer time.
double chain_transfer_fidelity(int n_dots) {
  ChainSpec spec;
  spec.n_dots = n_dots;
  spec.tunnel_couplings = pst_couplings(n_dots, 1.0);
  spec.onsite_fields.assign(n_dots, 0.0);
  const auto dec = eigendecompose(build_h1(spec));
  return transfer_fidelity(dec, 0, n_dots - 1, pst_transfer_time(n_dots, 1.0));
}

}  // namespace

ProtocolReport run_two_electron_bus(int n_dots, double hbar_gamma_ev,
                                    const DoubleDotSpec& separation_spec,
                                    const MaterialParams& material) {
  if (n_dots < 2) throw std::invalid_argument("chain needs at least 2 dots");
  const double rate = physical_rate_rad_s(hbar_gamma_ev);

  const double window = kSeparationWindowFactor / separation_spec.gamma;
  const SeparationResult sep =
      separation_fidelity_trace(separation_spec, window, 129);
  const double f_chain = chain_transfer_fidelity(n_dots);

  ProtocolReport report;
  report.stage_fidelities = {sep.fidelity, f_chain, f_chain, sep.fidelity};
  report.total_fidelity = report.stage_fidelities[0] *
                          report.stage_fidelities[1] *
                          report.stage_fidelities[2] *
                          report.stage_fidelities[3];
  // the double dot and the chain run at the same physical peak coupling
  report.separation_time_s = sep.t_opt / (separation_spec.gamma * rate);
  report.chain_time_s = pst_transfer_time(n_dots, 1.0) / rate;
  report.total_time_s = 2.0 * report.separation_time_s + 2.0 * report.chain_time_s;
  report.energy = pst_cost(material, 2, sep.suppression_m);
  report.feasible_within_t2 =
      coherence_feasibility({.transfer_time_s = report.total_time_s});
  return report;
}

ProtocolReport run_single_electron_bus(int n_dots, double hbar_gamma_ev,
                                       const MaterialParams& material) {
  if (n_dots < 2) throw std::invalid_argument("chain needs at least 2 dots");
  const double rate = physical_rate_rad_s(hbar_gamma_ev);

  ProtocolReport report;
  const double f_chain = chain_transfer_fidelity(n_dots);
  report.stage_fidelities = {1.0, f_chain, 1.0, 1.0};
  report.total_fidelity = f_chain;
  report.separation_time_s = 0.0;
  report.chain_time_s = pst_transfer_time(n_dots, 1.0) / rate;
  report.total_time_s = report.chain_time_s;
  report.energy = pst_cost(material, 1, 40.0);
  report.feasible_within_t2 =
      coherence_feasibility({.transfer_time_s = report.total_time_s});
  return report;
}

double pretty_good_two_electron_transfer(int n_dots, double u_over_gamma_min) {
  if (n_dots < 2) throw std::invalid_argument("chain needs at least 2 dots");
  if (n_dots * n_dots > 4096)
    throw std::invalid_argument("two-electron space capped at 4096 states");
  if (u_over_gamma_min < 0.0)
    throw std::invalid_argument("U/Gamma_min must be >= 0");

  // unnormalised engineered couplings sqrt(i(n-i)); the weakest bond is the
  // first one and sets the interaction scale
  ChainSpec spec;
  spec.n_dots = n_dots;
  spec.tunnel_couplings.resize(n_dots - 1);
  for (int i = 1; i < n_dots; ++i)
    spec.tunnel_couplings[i - 1] = std::sqrt(double(i) * double(n_dots - i));
  spec.onsite_fields.assign(n_dots, 0.0);
  spec.onsite_interaction = u_over_gamma_min * spec.tunnel_couplings.front();

  const auto dec = eigendecompose(build_h2(spec));
  const int last = n_dots * n_dots - 1;
  auto f = [&](double t) { return transfer_fidelity(dec, 0, last, t); };

  // both electrons arrive near t = pi/2; search the surrounding half period
  const double radius = dec.spectral_radius();
  const int points =
      std::max(129, static_cast<int>(std::ceil(40.0 * (M_PI / 2.0) * radius /
                                               (2.0 * M_PI))) + 1);
  return maximize_over_window(f, M_PI / 4.0, 3.0 * M_PI / 4.0, points, false)
      .f_star;
}

bool coherence_feasibility(const CoherenceBudget& budget) {
  if (!(budget.t1_s > 0.0) || !(budget.t2_s > 0.0) ||
      !(budget.transfer_time_s >= 0.0))
    throw std::invalid_argument("durations must be positive");
  return budget.transfer_time_s < budget.t2_s;
}

SegmentedResult segmented_transfer(int n_total, int segment_length,
                                   double per_segment_fidelity,
                                   double per_segment_energy_mev) {
  if (segment_length < 2)
    throw std::invalid_argument("segments need at least 2 dots");
  if (n_total < segment_length)
    throw std::invalid_argument("total length shorter than one segment");
  if (per_segment_fidelity < 0.0 || per_segment_fidelity > 1.0)
    throw std::invalid_argument("per-segment fidelity must be in [0, 1]");
  if (per_segment_energy_mev < 0.0)
    throw std::invalid_argument("per-segment energy must be >= 0");
  SegmentedResult result;
  result.n_segments = (n_total + segment_length - 1) / segment_length;
  result.fidelity = std::pow(per_segment_fidelity, result.n_segments);
  result.energy_mev = result.n_segments * per_segment_energy_mev;
  return result;
}

double majority_vote_success(double p_single, int m_repetitions) {
  if (p_single < 0.0 || p_single > 1.0)
    throw std::invalid_argument("probability must be in [0, 1]");
  if (m_repetitions < 1 || m_repetitions % 2 == 0)
    throw std::invalid_argument("repetitions must be odd (ties undefined)");
  double total = 0.0;
  for (int k = (m_repetitions + 1) / 2; k <= m_repetitions; ++k) {
    double binom = 1.0;
    for (int i = 0; i < k; ++i)
      binom = binom * (m_repetitions - i) / (i + 1);
    total += binom * std::pow(p_single, k) *
             std::pow(1.0 - p_single, m_repetitions - k);
  }
  return std::min(total, 1.0);
}

double linear_transfer_time_estimate_s(int n_dots, double hbar_gamma_ev) {
  if (n_dots < 1) throw std::invalid_argument("chain needs at least 1 dot");
  return M_PI_2 * n_dots / physical_rate_rad_s(hbar_gamma_ev);
}

}  // namespace dotbus
