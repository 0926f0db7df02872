#pragma once

#include "thetaratio/bisection.hpp"
#include "thetaratio/catalog.hpp"
#include "thetaratio/lattice.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thetaratio {

/// eps_Lambda(tau) = V tau^(n/2) Theta(i tau) - 1 = V (sqrt(tau) theta3)^n Delta - 1.
inline PrecisionReal flatness_factor(const LatticeSpec& spec, const Real& tau, const Real& tol) {
  ThetaArgument arg(tau);
  const auto n = static_cast<unsigned>(spec.n());
  const PrecisionReal vol = PrecisionReal::from(spec.volume());
  return detail::refine_to(
      [&](const Real& inner) {
        PrecisionReal base = pow(sqrt_tau_theta3(arg.tau(), inner), n);
        PrecisionReal delta(1);
        if (auto* sc = std::get_if<ScaledConstructionA>(&spec.kind())) {
          // s itself, not sqrt(t): t underflows toward 0 for small tau
          delta = detail::scaled_ratio_at_s(sc->dist, s_of_tau(arg.tau(), inner));
        } else if (!std::holds_alternative<IntegerLattice>(spec.kind())) {
          delta = ratio_at_t(spec, t_of_tau(arg.tau(), inner));
        }
        return vol * base * delta - PrecisionReal(1);
      },
      tol);
}

struct SolverOptions {
  Real tau_tol = Real("1e-9");
  Real eval_tol = Real("1e-30");
};

/// tau_eps = max{tau > 0 : eps_Lambda(tau) <= eps}, by bisection on a
/// bracket that starts at [1e-6, 4] and widens geometrically.
inline Real tau_eps_solve(const LatticeSpec& spec, const Real& eps, const SolverOptions& opt = {}) {
  if (!(eps > 0)) throw DomainError("tau_eps: eps must be > 0");
  const PrecisionReal target = PrecisionReal::exact(eps);
  auto below = [&](const Real& tau) -> std::optional<bool> {
    // eval_tol is relative once V (sqrt(tau) theta3)^n gets large, e.g. 2^72 at tau = 4
    PrecisionReal base = pow(sqrt_tau_theta3(tau, Real("1e-10")), static_cast<unsigned>(spec.n()));
    Real scale = base.upper() * to_real(spec.volume());
    auto c = flatness_factor(spec, tau, opt.eval_tol * (scale > 1 ? scale : Real(1))).try_compare(target);
    if (!c) return std::nullopt;
    return *c <= 0;
  };
  Real lo("1e-6"), hi(4);
  for (int i = 0; i < 40 && below(lo) != std::optional<bool>(true); ++i) {
    lo /= 4;
    if (lo < Real("1e-30")) throw NonBracketing("tau_eps: eps_Lambda exceeds eps even for tiny tau");
  }
  for (int i = 0; below(hi) != std::optional<bool>(false); ++i) {
    if (i >= 20) throw NonBracketing("tau_eps: eps_Lambda never exceeds eps below tau = " + hi.str(6));
    hi *= 2;
  }
  return bisect_boundary(below, lo, hi, opt.tau_tol);
}

/// eta_eps = 1 / sqrt(2 pi tau_eps)
inline Real eta_from_tau(const Real& tau_eps) { return 1 / sqrt(2 * pi_value() * tau_eps); }

inline Real smoothing_parameter(const LatticeSpec& spec, const Real& eps, const SolverOptions& opt = {}) {
  return eta_from_tau(tau_eps_solve(spec, eps, opt));
}

/// Root in (0, 1) of tau^(1/2) exp(-(pi - 1)/tau) = (1 + 1/n)^(1/n) - 1, the
/// tau at which the closed-form upper bound on eps_{Z^n} reaches 1/n. The
/// left side rises from 0 to exp(1 - pi) ~ 0.117 on (0, 1], so a root exists
/// only for n >= 3.
inline Real tau_lower_bound_solve(std::size_t n, const Real& tol = Real("1e-9")) {
  if (n == 0) throw DomainError("tau lower bound: n must be >= 1");
  const Real pm1 = pi_value() - 1;
  const Real rhs = pow(1 + Real(1) / Real(n), Real(1) / Real(n)) - 1;
  auto lhs = [&](const Real& tau) { return sqrt(tau) * exp(-pm1 / tau); };
  if (!(lhs(Real(1)) > rhs)) {
    throw DomainError("tau lower bound: no root in (0, 1) for n = " + std::to_string(n) + " (needs n >= 3)");
  }
  return bisect_boundary([&](const Real& tau) -> std::optional<bool> { return lhs(tau) < rhs; }, Real(0),
                         Real(1), tol);
}

enum class SecrecyMethod { exact_theta, upper_bound_theta };

struct SecrecyReport {
  LatticeSpec lattice;
  Rational eps_n;
  Real tau_eps;
  Real eta_eps;
  SecrecyMethod method = SecrecyMethod::exact_theta;
  std::vector<std::pair<Real, PrecisionReal>> samples;  // (tau, eps_Lambda(tau))
};

/// tau_eps and eta_eps at eps = 1/n (or eps_n if given), with optional curve samples.
inline SecrecyReport secrecy_report(const LatticeSpec& spec, std::optional<Rational> eps_n = std::nullopt,
                                    const std::vector<Real>& sample_taus = {}, const SolverOptions& opt = {}) {
  Rational eps = eps_n ? *eps_n : Rational(1, Integer(spec.n()));
  Real tau = tau_eps_solve(spec, to_real(eps), opt);
  SecrecyReport r{spec, eps, tau, eta_from_tau(tau), SecrecyMethod::exact_theta, {}};
  for (const auto& t : sample_taus) r.samples.emplace_back(t, flatness_factor(spec, t, opt.eval_tol));
  return r;
}

/// The closed-form bound route for Z^n: tau from tau_lower_bound_solve.
inline SecrecyReport secrecy_report_upper_bound(std::size_t n, const SolverOptions& opt = {}) {
  Real tau = tau_lower_bound_solve(n, opt.tau_tol);
  return {LatticeSpec::integer_lattice(n), Rational(1, Integer(n)), tau, eta_from_tau(tau),
          SecrecyMethod::upper_bound_theta, {}};
}

struct Figure1Row {
  std::string code_id;  // first row of the circulant, or "Z12"
  std::size_t n = 12;
  Real tau_eps;
  Real eta;
  bool z_equivalent = false;  // lattice isometric to Z^12 (UB distribution)
  std::string distribution;
};

/// Every self-dual [12,6] pure double circulant code plus Z^12, with eta_eps.
/// Z^12 comes first, then codes in lexicographic order of their first row.
inline std::vector<Figure1Row> figure1_sweep(const Real& eps, const SolverOptions& opt = {}) {
  constexpr std::size_t m = 6;
  std::vector<Figure1Row> rows;
  Real z_tau = tau_eps_solve(LatticeSpec::integer_lattice(2 * m), eps, opt);
  rows.push_back({"Z12", 2 * m, z_tau, eta_from_tau(z_tau), true, ub_distribution(2 * m).str()});

  std::map<std::string, Real> tau_by_dist;  // equal enumerators give equal lattices' theta series
  std::vector<Figure1Row> codes;
  for (unsigned bits = 0; bits < (1u << m); ++bits) {
    std::string first(m, '0');
    for (std::size_t i = 0; i < m; ++i) first[i] = (bits >> i & 1) ? '1' : '0';
    auto code = pure_double_circulant(first);
    if (!is_self_dual(code)) continue;
    auto dist = weight_distribution(code);
    auto key = dist.str();
    auto it = tau_by_dist.find(key);
    if (it == tau_by_dist.end()) {
      it = tau_by_dist.emplace(key, tau_eps_solve(LatticeSpec::construction_a(first, dist), eps, opt)).first;
    }
    codes.push_back({first, 2 * m, it->second, eta_from_tau(it->second), dist == ub_distribution(2 * m), key});
  }
  if (codes.empty()) throw Error("double circulant sweep: no self-dual pure double circulant [12,6] code found");
  std::sort(codes.begin(), codes.end(), [](const auto& a, const auto& b) { return a.code_id < b.code_id; });
  rows.insert(rows.end(), codes.begin(), codes.end());
  return rows;
}

/// Catalog name of the self-dual code used for each reference dimension.
inline std::optional<std::string> reference_code_name(std::size_t n) {
  switch (n) {
    case 8: return "hamming8";
    case 16: return "dc16";
    case 24: return "golay24";
    case 32: return "rm-2-5";
    case 72: return "extremal72";
    case 128: return "extremal128";
    case 168: return "qr168";
    case 256: return "extremal256";
    default: return std::nullopt;
  }
}

inline const std::vector<std::size_t>& table1_dimensions() {
  static const std::vector<std::size_t> dims{8, 16, 24, 32, 72, 128, 168, 256};
  return dims;
}

struct Table1Row {
  std::size_t n = 0;
  Real tau_zn;
  Real tau_lower;
  std::optional<Real> tau_code;  // empty when no catalog entry is available
  std::string code_name;
  Real tau_ensemble;
};

inline Table1Row table1_row(std::size_t n, const std::filesystem::path& catalog_dir = {},
                            const SolverOptions& opt = {}) {
  const Real eps = to_real(Rational(1, Integer(n)));
  Table1Row row;
  row.n = n;
  row.tau_zn = tau_eps_solve(LatticeSpec::integer_lattice(n), eps, opt);
  row.tau_lower = tau_lower_bound_solve(n, opt.tau_tol);
  row.tau_ensemble = tau_eps_solve(LatticeSpec::ensemble(n), eps, opt);
  if (auto name = reference_code_name(n)) {
    row.code_name = *name;
    if (auto e = find_entry(*name, catalog_dir)) {
      row.tau_code = tau_eps_solve(LatticeSpec::construction_a(e->name, e->distribution), eps, opt);
    }
  }
  return row;
}

}  // namespace thetaratio
