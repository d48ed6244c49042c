#pragma once

namespace dotbus {

namespace constants {
inline constexpr double electron_mass_kg = 9.1093837015e-31;
inline constexpr double vacuum_permittivity_f_m = 8.8541878128e-12;
inline constexpr double boltzmann_j_k = 1.380649e-23;
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double hbar_js = 1.054571817e-34;
}  // namespace constants

/// Biquadratic double-dot material model: two radially symmetric harmonic
/// wells a fixed distance apart. Geometry enters through the dimensionless
/// eta = m* omega0 l^2 / hbar (barrier height over half the single-well
/// ground energy); the half-distance l is recoverable as
/// sqrt(eta hbar / m* omega0). Valid for eta > 1, where the wells are
/// separated enough for a localised-orbital treatment.
struct MaterialParams {
  double m_eff_kg = 0.0;
  double eps_r = 0.0;
  double hbar_omega0_mev = 0.0;
  double eta = 0.0;

  /// GaAs dots: m* = 0.067 m_e, eps_r = 12.9, hbar*omega0 = 3 meV.
  static MaterialParams gaas(double eta = 1.86);

  void validate() const;
  double omega0_rad_s() const;
  double bohr_radius_m() const;       // a = sqrt(hbar / m* omega0)
  double half_distance_m() const;     // l = a * sqrt(eta)
};

/// Localised-orbital quantities for one value of eta. s is the bare orbital
/// overlap, g the orthogonalisation mixing, norm_sq the orthogonalised
/// norm. w and u are the off-site and on-site single-particle matrix
/// elements and gamma_bare the tunnel matrix element
/// [(1+g^2) w - 2 g u] / norm_sq, all in units of hbar*omega0. gamma_bare
/// keeps its sign (it is negative for eta beyond the w sign change); rate
/// comparisons use |gamma_bare|.
struct HmQuantities {
  double s = 0.0;
  double g = 0.0;
  double norm_sq = 0.0;
  double w = 0.0;
  double u = 0.0;
  double gamma_bare = 0.0;
};

struct CostReport {
  enum class Mechanism { pst_1e, pst_2e, shuttle_1e, shuttle_2e, classical };
  enum class Scaling { constant, linear };

  Mechanism mechanism = Mechanism::pst_1e;
  int chain_length = 0;  // 0 for length-independent mechanisms
  double energy_mev = 0.0;
  Scaling scaling = Scaling::constant;
};

const char* to_string(CostReport::Mechanism mechanism);

HmQuantities hm_quantities(double eta);

/// Complementary error function (absolute error <= 1e-12 on [-6, 27]).
double erfc(double x);

/// Ratio of the on-site Coulomb energy e^2/(4 pi eps_r eps0 a~) with
/// a~ = sqrt(2/pi) a to the confinement energy hbar*omega0. Scales as
/// omega0^{-1/2}; about 2.40 for GaAs defaults.
double coulomb_ratio_c(const MaterialParams& params);

/// c * sqrt(omega0) in Hz^(1/2); material-only prefactor of the ratio above.
double coulomb_c0(const MaterialParams& params);

/// On-site Coulomb repulsion U0 = c * hbar*omega0 (meV).
double onsite_u0_mev(const MaterialParams& params);

/// Energy to add the n-th electron to a dot: hbar*omega0 for the first,
/// (1 + c) * hbar*omega0 for the second (meV).
double charging_energy_mev(const MaterialParams& params, int n_electrons);

/// Two-electron single-dot ground energy without the U ~ U0 and
/// <h> ~ hbar*omega0 shortcuts: 2[(1+g^2)u - 2gw]/N^2 * hbar*omega0 + U0.
double exact_pair_onsite_energy_mev(const MaterialParams& params);

/// Barrier height between the wells, V0 l^2 = eta * hbar*omega0 / 2 (meV).
/// Diagnostic only.
double barrier_height_mev(const MaterialParams& params);

/// Solves U0 / (hbar |Gamma(eta)|) = ratio by bisection on eta in [1, 6]
/// to |d eta| <= 1e-8. Throws std::runtime_error if the bracket does not
/// straddle the root.
double solve_eta_for_interaction_ratio(const MaterialParams& params,
                                       double ratio);

/// Tunnel-coupling suppression from raising the confinement energy by
/// delta_e: the well frequency becomes omega0 * (1 + delta_e/hbar*omega0),
/// eta scales by the same factor, and the ratio compares the tunnel matrix
/// elements |gamma_bare| before and after. Equals 1 at delta_e = 0 and
/// decreases monotonically.
double freeze_ratio(double eta, const MaterialParams& params,
                    double delta_e_mev);

/// Inverts freeze_ratio by bisection (relative tolerance 1e-6) over
/// delta_e in [0, 20 * E_C(2e)]. Throws std::runtime_error when the target
/// is not reachable in the bracket.
double required_freeze_energy_mev(double eta, const MaterialParams& params,
                                  double target_ratio);

/// Confinement energy a single-electron dot must reach (delta_e plus the
/// original hbar*omega0) to match the tunnel suppression of a dot frozen by
/// one two-electron charging energy. About 13.2 meV for GaAs.
double single_electron_freeze_confinement_mev(const MaterialParams& params);

/// Per-freeze-event energy of the default transfer cost model (meV),
/// calibrated to the single-electron freeze scale.
inline constexpr double kFreezeEventEnergyMev = 13.5;

/// Loading/unloading every dot along the chain: 2 E_C(2e) N for the
/// two-electron encoding, kFreezeEventEnergyMev * N for single-electron.
CostReport shuttling_cost(int n_dots, const MaterialParams& params,
                          int encoding_electrons);

/// calibrated_events: 4 freeze events x kFreezeEventEnergyMev per transfer
/// stage (one stage for 1e, two for 2e), independent of chain length.
/// literal_formula: 4 E_C + 2 E_delta with E_delta = delta_over_gamma *
/// hbar|Gamma| (halved for 1e). The two models disagree by ~50%; both are
/// reported by the CLI.
enum class PstCostModel { calibrated_events, literal_formula };
CostReport pst_cost(const MaterialParams& params, int encoding_electrons,
                    double delta_over_gamma,
                    PstCostModel model = PstCostModel::calibrated_events);

/// Charging a wire of length N * dot_size treated as a capacitor
/// C ~ eps0 L to the minimal distinguishable voltage kB T / e.
CostReport classical_wire_cost(int n_dots, double temperature_k = 300.0,
                               double dot_size_m = 100e-9);

}  // namespace dotbus
