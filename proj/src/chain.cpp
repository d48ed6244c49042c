#include "dotbus/chain.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace dotbus {

namespace {

bool all_finite(const std::vector<double>& xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace

double hermiticity_defect(const HermitianMatrix& h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

void require_hermitian(const HermitianMatrix& h) {
  const double scale = h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff();
  if (hermiticity_defect(h) > 1e-12 * scale)
    throw std::invalid_argument("matrix is not Hermitian");
}

void ChainSpec::validate() const {
  if (n_dots < 2) throw std::invalid_argument("chain needs at least 2 dots");
  if (static_cast<int>(tunnel_couplings.size()) != n_dots - 1)
    throw std::invalid_argument("expected " + std::to_string(n_dots - 1) +
                                " tunnel couplings");
  if (static_cast<int>(onsite_fields.size()) != n_dots)
    throw std::invalid_argument("expected " + std::to_string(n_dots) +
                                " onsite fields");
  if (!all_finite(tunnel_couplings) || !all_finite(onsite_fields))
    throw std::invalid_argument("chain parameters must be finite");
  for (double g : tunnel_couplings)
    if (g < 0.0)
      throw std::invalid_argument("tunnel couplings must be nonnegative");
  if (!std::isfinite(onsite_interaction) || onsite_interaction < 0.0)
    throw std::invalid_argument("onsite interaction must be >= 0");
  if (!std::isfinite(capacitive_coupling) || capacitive_coupling < 0.0)
    throw std::invalid_argument("capacitive coupling must be >= 0");
}

int TwoElectronIndex::flat(int n_dots) const {
  if (up_site < 1 || up_site > n_dots || down_site < 1 || down_site > n_dots)
    throw std::invalid_argument("two-electron site out of range");
  return (up_site - 1) * n_dots + (down_site - 1);
}

TwoElectronIndex TwoElectronIndex::from_flat(int p, int n_dots) {
  if (p < 0 || p >= n_dots * n_dots)
    throw std::invalid_argument("flat index out of range");
  return {p / n_dots + 1, p % n_dots + 1};
}

std::vector<double> pst_couplings(int n, double gamma_max) {
  if (n < 2) throw std::invalid_argument("invalid chain: n < 2");
  if (!(gamma_max > 0.0))
    throw std::invalid_argument("gamma_max must be positive");
  // central bond is sqrt(floor(n/2) * ceil(n/2)): normalising by the same
  // integer keeps it at gamma_max exactly
  const double norm = std::sqrt(double(n / 2) * double((n + 1) / 2));
  std::vector<double> out(n - 1);
  for (int i = 1; i < n; ++i)
    out[i - 1] = gamma_max * (std::sqrt(double(i) * double(n - i)) / norm);
  return out;
}

std::vector<double> superexchange_couplings(int n, double epsilon,
                                            double gamma_bulk) {
  if (n < 3) throw std::invalid_argument("invalid chain: n < 3");
  if (!(epsilon > 0.0) || !(gamma_bulk > 0.0))
    throw std::invalid_argument("couplings must be positive");
  if (epsilon > gamma_bulk / 10.0)
    std::cerr << "warning: superexchange end bond " << epsilon
              << " is not small against the bulk coupling " << gamma_bulk
              << "\n";
  std::vector<double> out(n - 1, gamma_bulk);
  out.front() = epsilon;
  out.back() = epsilon;
  return out;
}

std::vector<double> couplings(const CouplingProfile& profile, int n_dots) {
  return std::visit(
      [n_dots](const auto& p) -> std::vector<double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, UniformProfile>) {
          if (n_dots < 2) throw std::invalid_argument("invalid chain: n < 2");
          if (!(p.gamma > 0.0))
            throw std::invalid_argument("gamma must be positive");
          return std::vector<double>(n_dots - 1, p.gamma);
        } else if constexpr (std::is_same_v<T, EngineeredPstProfile>) {
          return pst_couplings(n_dots, p.gamma_max);
        } else {
          return superexchange_couplings(n_dots, p.epsilon, p.gamma_bulk);
        }
      },
      profile);
}

double pst_transfer_time(int n, double gamma_max) {
  if (n < 2) throw std::invalid_argument("invalid chain: n < 2");
  if (!(gamma_max > 0.0))
    throw std::invalid_argument("gamma_max must be positive");
  return M_PI_2 * std::sqrt(double(n / 2) * double((n + 1) / 2)) / gamma_max;
}

HermitianMatrix build_h1(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_dots;
  HermitianMatrix h = HermitianMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = spec.onsite_fields[i];
  for (int i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = spec.tunnel_couplings[i];
    h(i + 1, i) = spec.tunnel_couplings[i];
  }
  return h;
}

HermitianMatrix build_h2(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_dots;
  const int dim = n * n;
  const double u = spec.onsite_interaction;
  const double v = spec.capacitive_coupling;
  HermitianMatrix h = HermitianMatrix::Zero(dim, dim);
  auto flat = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int p = flat(i, j);
      double diag = spec.onsite_fields[i - 1] + spec.onsite_fields[j - 1];
      if (i == j) diag += u;
      if (i == j + 1 || i + 1 == j) diag += v;
      h(p, p) = diag;
      if (i < n) {
        const double g = spec.tunnel_couplings[i - 1];
        h(p, flat(i + 1, j)) = g;
        h(flat(i + 1, j), p) = g;
      }
      if (j < n) {
        const double g = spec.tunnel_couplings[j - 1];
        h(p, flat(i, j + 1)) = g;
        h(flat(i, j + 1), p) = g;
      }
    }
  }
  return h;
}

bool pst_diagonal_constant(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_dots;
  double lo = 0.0;
  double hi = 0.0;
  double scale = 0.0;
  bool first = true;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      double diag = spec.onsite_fields[i - 1] + spec.onsite_fields[j - 1];
      if (i == j) diag += spec.onsite_interaction;
      if (i == j + 1 || i + 1 == j) diag += spec.capacitive_coupling;
      lo = first ? diag : std::min(lo, diag);
      hi = first ? diag : std::max(hi, diag);
      scale = std::max(scale, std::abs(diag));
      first = false;
    }
  }
  return (hi - lo) <= 1e-12 * std::max(1.0, scale);
}

}  // namespace dotbus
