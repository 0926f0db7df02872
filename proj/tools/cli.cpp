#include "cli.hpp"

#include "thetaratio/thetaratio.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace thetaratio::cli {
namespace {

// Misuse of flags that CLI11 cannot see on its own (e.g. two lattice sources).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned digits = kDefaultDigits;
  std::string tol = "1e-30";
  std::string catalog_dir = "./catalog";
  bool csv = false;
  unsigned grid = 1001;
};

struct LatticeArgs {
  std::optional<std::size_t> zn;
  std::string code_file;
  std::string catalog_name;
  std::vector<std::string> h_coeffs;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> ensemble;
  bool scaled = false;
};

// ---- output ----------------------------------------------------------------

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool csv) const {
    if (csv) {
      print_csv_row(out, header_);
      for (const auto& r : rows_) print_csv_row(out, r);
      return;
    }
    std::vector<std::size_t> width(header_.size());
    for (std::size_t j = 0; j < header_.size(); ++j) width[j] = header_[j].size();
    for (const auto& r : rows_) {
      for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j) s += "  ";
        s += r[j];
        if (j + 1 < r.size()) s.append(width[j] - r[j].size(), ' ');
      }
      s.erase(s.find_last_not_of(' ') + 1);
      out << s << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  static void print_csv_row(std::ostream& out, const std::vector<std::string>& r) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out << ',';
      if (r[j].find_first_of(",\"") != std::string::npos) {
        out << '"';
        for (char c : r[j]) out << (c == '"' ? "\"\"" : std::string(1, c));
        out << '"';
      } else {
        out << r[j];
      }
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// significant digits shown for computed values
unsigned shown_digits(const RunConfig& cfg) { return std::min(30u, cfg.digits - 5); }

std::string fmt(const Real& x, unsigned sig) { return x.str(sig, std::ios_base::fmtflags(0)); }
std::string fmt_err(const Real& x) { return x.str(3, std::ios_base::scientific); }
std::string fmt_tau(const Real& x) { return x.str(10, std::ios_base::fixed); }

// ---- argument conversion (after the working precision is set) ---------------

Real parse_real(const std::string& s, const char* what) {
  try {
    Real x(s);
    return x;
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot read ") + what + " '" + s + "'");
  }
}

Rational parse_rational(const std::string& s, const char* what) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot read ") + what + " '" + s + "' as a rational");
  }
}

// "1/24" stays exact, "0.05" goes through Real
Real parse_eps(const std::string& s) {
  if (s.find('/') != std::string::npos) return to_real(parse_rational(s, "--eps"));
  return parse_real(s, "--eps");
}

// ---- lattice sources ----------------------------------------------------------

void add_lattice_options(CLI::App* sub, LatticeArgs& a) {
  sub->add_option("--zn", a.zn, "integer lattice Z^N")->check(CLI::PositiveNumber);
  sub->add_option("--code", a.code_file, "generator matrix or catalog file")->check(CLI::ExistingFile);
  sub->add_option("--catalog", a.catalog_name, "built-in or catalog-dir code name");
  sub->add_option("--h-coeffs", a.h_coeffs, "a_0,a_1,...,a_l (rationals)")->delimiter(',');
  sub->add_option("--dim", a.dim, "dimension for --h-coeffs")->check(CLI::PositiveNumber);
  sub->add_option("--ensemble", a.ensemble, "self-dual code ensemble of length N");
  sub->add_flag("--scaled", a.scaled, "use C + 2Z^n (any [n,k] code) instead of the unimodular form");
}

int source_count(const LatticeArgs& a) {
  return int(a.zn.has_value()) + int(!a.code_file.empty()) + int(!a.catalog_name.empty()) +
         int(!a.h_coeffs.empty()) + int(a.ensemble.has_value());
}

bool only_bits(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool any = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (char c : line) {
      if (c == '0' || c == '1') {
        any = true;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        return false;
      }
    }
  }
  return any;
}

CodeCatalogEntry load_code_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  if (only_bits(text)) {
    auto code = parse_bit_matrix(text, path);
    auto stem = std::filesystem::path(path).stem().string();
    return entry_from_code(stem, path, std::move(code));
  }
  auto entries = parse_catalog(text, path);
  if (entries.size() != 1) {
    throw UsageError(path + " holds " + std::to_string(entries.size()) +
                     " entries; put it in --catalog-dir and pick one with --catalog");
  }
  return entries.front();
}

std::optional<CodeCatalogEntry> code_entry(const LatticeArgs& a, const RunConfig& cfg) {
  if (!a.code_file.empty()) return load_code_file(a.code_file);
  if (!a.catalog_name.empty()) {
    auto e = find_entry(a.catalog_name, cfg.catalog_dir);
    if (!e) throw Error("no catalog entry named '" + a.catalog_name + "' (searched built-ins and " +
                        cfg.catalog_dir + ")");
    return e;
  }
  return std::nullopt;
}

std::vector<Rational> h_coeffs_of(const LatticeArgs& a) {
  std::vector<Rational> m;
  for (const auto& s : a.h_coeffs) m.push_back(parse_rational(s, "--h-coeffs entry"));
  return m;
}

LatticeSpec lattice_of(const LatticeArgs& a, const RunConfig& cfg) {
  if (source_count(a) != 1) {
    throw UsageError("give exactly one of --zn, --code, --catalog, --h-coeffs, --ensemble");
  }
  if (a.dim && a.h_coeffs.empty()) throw UsageError("--dim only goes with --h-coeffs");
  if (auto e = code_entry(a, cfg)) {
    if (a.scaled) return LatticeSpec::scaled_construction_a(e->name, e->distribution, e->k);
    if (!e->self_dual()) {
      throw UsageError("code '" + e->name + "' is not self-dual; use --scaled for C + 2Z^n");
    }
    return LatticeSpec::construction_a(e->name, e->distribution);
  }
  if (a.scaled) throw UsageError("--scaled needs --code or --catalog");
  if (a.zn) return LatticeSpec::integer_lattice(*a.zn);
  if (a.ensemble) return LatticeSpec::ensemble(*a.ensemble);
  if (!a.dim) throw UsageError("--h-coeffs needs --dim");
  return LatticeSpec::explicit_h(*a.dim, h_coeffs_of(a));
}

// Exact ratio polynomial with its h-basis coefficients, plus the code's
// enumerator when there is one.
struct Decomposition {
  RatioPolynomial poly;
  std::optional<WeightDistribution> dist;
  std::string label;
};

Decomposition decompose_source(const LatticeArgs& a, const RunConfig& cfg) {
  if (source_count(a) != 1) {
    throw UsageError("give exactly one of --zn, --code, --catalog, --h-coeffs, --ensemble");
  }
  if (a.scaled) throw UsageError("--scaled lattices have no h-basis decomposition");
  if (auto e = code_entry(a, cfg)) {
    if (!e->self_dual()) throw UsageError("code '" + e->name + "' is not self-dual");
    return {decompose_h_basis(ratio_poly_from_code(e->distribution)), e->distribution, e->name};
  }
  if (a.zn) {
    RatioPolynomial p;
    p.coeffs_t = RationalPolynomial::constant(Rational(1));
    p.n = *a.zn;
    p.k = *a.zn / 2;
    std::optional<WeightDistribution> d;
    if (*a.zn % 2 == 0) d = ub_distribution(*a.zn);
    return {decompose_h_basis(p), d, "Z" + std::to_string(*a.zn)};
  }
  if (a.ensemble) {
    EnsembleSpec spec(*a.ensemble);
    RatioPolynomial p;
    p.coeffs_t = ensemble_ratio_polynomial(spec);
    p.n = spec.n;
    p.k = spec.k();
    return {decompose_h_basis(p), std::nullopt, "ensemble" + std::to_string(spec.n)};
  }
  if (!a.dim) throw UsageError("--h-coeffs needs --dim");
  return {ratio_poly_from_h(*a.dim, h_coeffs_of(a)), std::nullopt, "h-basis" + std::to_string(*a.dim)};
}

// ---- commands -------------------------------------------------------------------

struct EvalArgs {
  LatticeArgs lattice;
  std::string tau;
};

void cmd_value(const char* column, const EvalArgs& ea, const RunConfig& cfg, std::ostream& out,
               PrecisionReal (*fn)(const LatticeSpec&, const Real&, const Real&)) {
  auto spec = lattice_of(ea.lattice, cfg);
  Real tau = parse_real(ea.tau, "--tau");
  PrecisionReal v = fn(spec, tau, parse_real(cfg.tol, "--tol"));
  Table t({"lattice", "tau", column, "err_bound"});
  t.add({spec.label(), ea.tau, fmt(v.value(), shown_digits(cfg)), fmt_err(v.err_bound())});
  t.print(out, cfg.csv);
}

SolverOptions solver_options(const RunConfig& cfg) {
  SolverOptions opt;
  opt.eval_tol = parse_real(cfg.tol, "--tol");
  opt.tau_tol = Real("1e-12");
  return opt;
}

struct SolveArgs {
  LatticeArgs lattice;
  std::string eps;
  bool upper_bound = false;
};

void cmd_solve(bool with_eta, const SolveArgs& sa, const RunConfig& cfg, std::ostream& out) {
  auto spec = lattice_of(sa.lattice, cfg);
  std::string eps_text = sa.eps.empty() ? "1/" + std::to_string(spec.n()) : sa.eps;
  Real eps = parse_eps(eps_text);
  Real tau;
  if (sa.upper_bound) {
    if (!std::holds_alternative<IntegerLattice>(spec.kind())) throw UsageError("--upper-bound is for --zn only");
    if (!sa.eps.empty()) throw UsageError("--upper-bound always uses eps = 1/n");
    tau = tau_lower_bound_solve(spec.n(), Real("1e-12"));
  } else {
    tau = tau_eps_solve(spec, eps, solver_options(cfg));
  }
  std::vector<std::string> head{"lattice", "eps", "tau_eps"};
  std::vector<std::string> row{spec.label(), eps_text, fmt_tau(tau)};
  if (with_eta) {
    head.push_back("eta_eps");
    row.push_back(fmt_tau(eta_from_tau(tau)));
  }
  Table t(head);
  t.add(row);
  t.print(out, cfg.csv);
}

void cmd_decompose(const LatticeArgs& la, const RunConfig& cfg, std::ostream& out) {
  auto d = decompose_source(la, cfg);
  out << format_h_coeffs(*d.poly.h_coeffs) << '\n';
}

std::string verdict_word(bool b) { return b ? "pass" : "fail"; }

void cmd_check(const LatticeArgs& la, bool sampled, const RunConfig& cfg, std::ostream& out) {
  auto d = decompose_source(la, cfg);
  const auto& a = *d.poly.h_coeffs;
  Table t({"check", "result", "detail"});
  t.add({"h_coeffs", "", format_h_coeffs(a)});

  auto suf = sufficient_condition(a);
  t.add({"sufficient", verdict_word(suf.overall), suf.degenerate ? "no j range; decided by a1 > 0" : ""});
  for (const auto& term : suf.per_j) {
    t.add({"sufficient_j" + std::to_string(term.j), verdict_word(term.passes),
           "alpha=" + term.alpha.str() + " beta=" + term.beta.str()});
  }

  if (d.dist) {
    auto nec = necessary_condition(*d.dist);
    t.add({"necessary", verdict_word(nec.passes), "value=" + nec.value.str()});
  } else {
    t.add({"necessary", "n/a", "needs a weight enumerator"});
  }

  UShapeCertificate cert;
  if (sampled) {
    const auto f = d.poly.coeffs_t;
    cert = ushape_sampled([&f](const Real& x) { return f.eval(x); }, cfg.grid, parse_real(cfg.tol, "--tol"));
  } else {
    cert = ushape_exact(a);
  }
  std::string detail = std::string("method=") + to_string(cert.method);
  if (cert.proof) detail += " roots_in_(0,1)=" + std::to_string(cert.proof->roots_in_open_interval);
  if (cert.exact_witness) {
    detail += " witness=" + cert.exact_witness->str();
  } else if (cert.witness) {
    detail += " witness=" + fmt(*cert.witness, 12);
  }
  t.add({"u_shape", to_string(cert.verdict), detail});

  if (!sampled && cert.verdict == Verdict::u_shaped) {
    auto m = global_min_check(a, parse_real(cfg.tol, "--tol"));
    t.add({"global_min", m.value <= 1 ? "pass" : "fail",
           "t=1/sqrt2 value=" + m.value.str() + " ~ " + fmt(to_real(m.value), 12)});
  } else {
    t.add({"global_min", "n/a", "no exact u_shaped certificate"});
  }
  t.print(out, cfg.csv);
}

struct Table1Args {
  std::vector<std::size_t> dims;
};

void cmd_table1(const Table1Args& ta, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto opt = solver_options(cfg);
  const auto dims = ta.dims.empty() ? table1_dimensions() : ta.dims;
  Table t({"n", "tau_zn", "tau_lower", "code", "tau_code", "tau_ensemble"});
  for (auto n : dims) {
    auto row = table1_row(n, cfg.catalog_dir, opt);
    std::string code_cell = row.tau_code ? fmt_tau(*row.tau_code) : "catalog-missing";
    if (!row.tau_code && !row.code_name.empty()) {
      err << "note: no catalog entry '" << row.code_name << "' in " << cfg.catalog_dir << '\n';
    }
    t.add({std::to_string(n), fmt_tau(row.tau_zn), fmt_tau(row.tau_lower),
           row.code_name.empty() ? "-" : row.code_name, code_cell, fmt_tau(row.tau_ensemble)});
  }
  t.print(out, cfg.csv);
}

void cmd_figure1(const std::string& eps_text, const RunConfig& cfg, std::ostream& out) {
  Real eps = parse_eps(eps_text);
  auto rows = figure1_sweep(eps, solver_options(cfg));
  Table t({"lattice", "tau_eps", "eta_eps", "z_equivalent", "distribution"});
  for (const auto& r : rows) {
    t.add({r.code_id, fmt_tau(r.tau_eps), fmt_tau(r.eta), r.z_equivalent ? "yes" : "no", r.distribution});
  }
  t.print(out, cfg.csv);
}

struct CurveArgs {
  LatticeArgs lattice;
  std::string tau_min = "0.1";
  std::string tau_max = "10";
  unsigned points = 201;
};

void cmd_ratio_curve(const CurveArgs& ca, const RunConfig& cfg, std::ostream& out) {
  auto spec = lattice_of(ca.lattice, cfg);
  Real lo = parse_real(ca.tau_min, "--tau-min"), hi = parse_real(ca.tau_max, "--tau-max");
  if (!(lo > 0) || !(hi > lo)) throw UsageError("need 0 < --tau-min < --tau-max");
  if (ca.points < 2) throw UsageError("--points must be >= 2");
  const Real tol = parse_real(cfg.tol, "--tol");
  Table t({"tau", "delta", "err_bound"});
  const Real step = log(hi / lo) / (ca.points - 1);
  for (unsigned i = 0; i < ca.points; ++i) {
    Real tau = i + 1 == ca.points ? hi : Real(lo * exp(step * i));
    auto v = ratio_eval(spec, tau, tol);
    t.add({fmt(tau, 12), fmt(v.value(), shown_digits(cfg)), fmt_err(v.err_bound())});
  }
  t.print(out, cfg.csv);
}

void cmd_ensemble(std::size_t n, const RunConfig& cfg, std::ostream& out) {
  EnsembleSpec spec(n);
  Table t({"quantity", "value"});
  t.add({"n", std::to_string(spec.n)});
  t.add({"k", std::to_string(spec.k())});
  const auto a = expected_weight_enumerator(spec);
  std::string enumerator;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] == 0) continue;
    if (!enumerator.empty()) enumerator += ' ';
    enumerator += std::to_string(w) + ":" + a[w].str();
  }
  t.add({"expected_enumerator", enumerator});
  Rational minimum = ensemble_minimum_exact(spec);
  QSqrt2 closed = ensemble_minimum_closed_form(spec);
  t.add({"min_t", "1/sqrt2"});
  t.add({"min_value", minimum.str()});
  t.add({"min_value_decimal", fmt(to_real(minimum), shown_digits(cfg))});
  t.add({"closed_form_agrees", closed.b == 0 && closed.a == minimum ? "yes" : "no"});
  auto cert = ensemble_ushape_check(spec, std::max(cfg.grid, 1001u), parse_real(cfg.tol, "--tol"));
  t.add({"u_shape_sampled", to_string(cert.verdict)});
  t.print(out, cfg.csv);
}

void cmd_theta_plain(const EvalArgs& ea, const RunConfig& cfg, std::ostream& out) {
  cmd_value("theta", ea, cfg, out, &theta_eval);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Theta series, theta-series ratios and flatness factors of lattices"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--digits", cfg.digits, "working precision in decimal digits")
      ->check(CLI::Range(15u, 5000u))
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "error tolerance")->capture_default_str();
  app.add_option("--catalog-dir", cfg.catalog_dir, "directory of catalog files")->capture_default_str();
  app.add_flag("--csv", cfg.csv, "CSV instead of an aligned table");
  app.add_option("--grid", cfg.grid, "sample points for sampled checks")
      ->check(CLI::Range(kMinSampledGrid, 100000000u))
      ->capture_default_str();
  // global options are accepted after the subcommand name as well
  app.fallthrough();

  EvalArgs theta_a, ratio_a, flat_a;
  auto* theta = app.add_subcommand("theta", "Theta_Lambda(i tau)");
  add_lattice_options(theta, theta_a.lattice);
  theta->add_option("--tau", theta_a.tau)->required();
  auto* ratio = app.add_subcommand("ratio", "Delta_Lambda(tau) = Theta_Lambda / theta3^n");
  add_lattice_options(ratio, ratio_a.lattice);
  ratio->add_option("--tau", ratio_a.tau)->required();
  auto* flat = app.add_subcommand("flatness", "eps_Lambda(tau)");
  add_lattice_options(flat, flat_a.lattice);
  flat->add_option("--tau", flat_a.tau)->required();

  LatticeArgs dec_a, check_a;
  bool sampled = false;
  auto* dec = app.add_subcommand("decompose", "exact h-basis coefficients");
  add_lattice_options(dec, dec_a);
  auto* check = app.add_subcommand("check", "sufficient, necessary, U-shape and minimum checks");
  add_lattice_options(check, check_a);
  check->add_flag("--sampled", sampled, "sample the ratio on --grid points instead of Sturm");

  SolveArgs smooth_a, taueps_a;
  auto* smooth = app.add_subcommand("smoothing", "eta_eps = 1/sqrt(2 pi tau_eps)");
  add_lattice_options(smooth, smooth_a.lattice);
  smooth->add_option("--eps", smooth_a.eps, "flatness target, default 1/n");
  smooth->add_flag("--upper-bound", smooth_a.upper_bound, "Z^n via the closed-form theta3 bound");
  auto* taueps = app.add_subcommand("tau-eps", "largest tau with eps_Lambda(tau) <= eps");
  add_lattice_options(taueps, taueps_a.lattice);
  taueps->add_option("--eps", taueps_a.eps, "flatness target, default 1/n");
  taueps->add_flag("--upper-bound", taueps_a.upper_bound, "Z^n via the closed-form theta3 bound");

  Table1Args t1_a;
  auto* table1 = app.add_subcommand("table1", "tau_eps at eps = 1/n for Z^n, the bound, a code and the ensemble");
  table1->add_option("--dims", t1_a.dims, "dimensions (default 8,16,24,32,72,128,168,256)")->delimiter(',');

  std::string fig_eps = "1/12";
  auto* fig1 = app.add_subcommand("figure1", "eta_eps of Z^12 and every self-dual [12,6] pure double circulant");
  fig1->add_option("--eps", fig_eps)->capture_default_str();

  CurveArgs curve_a;
  auto* curve = app.add_subcommand("ratio-curve", "Delta_Lambda on log-spaced tau");
  add_lattice_options(curve, curve_a.lattice);
  curve->add_option("--tau-min", curve_a.tau_min)->capture_default_str();
  curve->add_option("--tau-max", curve_a.tau_max)->capture_default_str();
  curve->add_option("--points", curve_a.points)->capture_default_str();

  std::size_t ens_n = 0;
  auto* ens = app.add_subcommand("ensemble", "expected enumerator and minimum of the self-dual ensemble");
  ens->add_option("--ensemble,-n", ens_n, "code length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    WorkingPrecision wp(cfg.digits);
    if (!(parse_real(cfg.tol, "--tol") > 0)) throw UsageError("--tol must be > 0");
    if (theta->parsed()) cmd_theta_plain(theta_a, cfg, out);
    else if (ratio->parsed()) cmd_value("delta", ratio_a, cfg, out, &ratio_eval);
    else if (flat->parsed()) cmd_value("eps", flat_a, cfg, out, &flatness_factor);
    else if (dec->parsed()) cmd_decompose(dec_a, cfg, out);
    else if (check->parsed()) cmd_check(check_a, sampled, cfg, out);
    else if (smooth->parsed()) cmd_solve(true, smooth_a, cfg, out);
    else if (taueps->parsed()) cmd_solve(false, taueps_a, cfg, out);
    else if (table1->parsed()) cmd_table1(t1_a, cfg, out, err);
    else if (fig1->parsed()) cmd_figure1(fig_eps, cfg, out);
    else if (curve->parsed()) cmd_ratio_curve(curve_a, cfg, out);
    else if (ens->parsed()) cmd_ensemble(ens_n, cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace thetaratio::cli
