#include "qscatter/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "qscatter/dirichlet_limit.hpp"
#include "qscatter/errors.hpp"
#include "qscatter/kink_scattering.hpp"
#include "qscatter/pole_analysis.hpp"
#include "qscatter/scattering_core.hpp"
#include "qscatter/table.hpp"
#include "qscatter/vacuum_energy.hpp"
#include "qscatter/verify.hpp"

namespace qscatter {

std::size_t sweep_threads() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QSCATTER_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
  }
  return n;
}

std::vector<std::vector<double>> parallel_rows(
    std::size_t n, const std::function<std::vector<double>(std::size_t)>& fn) {
  std::vector<std::vector<double>> rows(n);
  const std::size_t workers = std::min(sweep_threads(), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = fn(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          rows[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(failure_lock);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

namespace {

struct Config {
  std::string system = "two-delta";
  double alpha = 0.0;
  double beta = 0.0;
  double a = 1.0;
  std::string format = "csv";
  std::string output;

  // amplitudes / integrand grid
  std::optional<double> k;
  double k_min = 0.01;
  double k_max = 10.0;
  int samples = 200;

  // spectrum
  int count = 6;
  bool critical = false;

  // poles
  std::vector<double> region;
  int contour_grid = 0;

  // casimir
  bool dirichlet = false;
  bool zeta = false;
  bool integrand = false;
  bool mode_sum = false;
  double s = 0.0;
  double s_imag = 0.0;
  int n_max = 50;
  std::string dispersion;

  // verify
  bool figures = false;
  double tolerance_scale = 1.0;
};

std::vector<double> k_grid(const Config& c) {
  if (c.k) {
    if (!(*c.k > 0.0)) throw InvalidArgument("--k must be > 0");
    return {*c.k};
  }
  if (c.samples < 2) throw InvalidArgument("--samples must be >= 2");
  if (!(c.k_min > 0.0)) throw InvalidArgument("--k-min must be > 0");
  if (!(c.k_max > c.k_min)) throw InvalidArgument("--k-max must exceed --k-min");
  std::vector<double> ks(static_cast<std::size_t>(c.samples));
  for (int i = 0; i < c.samples; ++i)
    ks[i] = i + 1 == c.samples ? c.k_max : c.k_min + i * (c.k_max - c.k_min) / (c.samples - 1);
  return ks;
}

nlohmann::ordered_json base_params(const Config& c) {
  nlohmann::ordered_json p;
  p["version"] = kVersion;
  p["system"] = c.system;
  p["alpha"] = c.alpha;
  p["beta"] = c.beta;
  p["a"] = c.a;
  return p;
}

bool is_kink(const Config& c) { return c.system == "kink"; }

Amplitudes amplitudes_at(const Config& c, double k) {
  if (is_kink(c)) return kink_amplitudes(KinkDeltaParams(c.alpha, c.beta, c.a), k);
  return double_delta_amplitudes(DeltaPairParams(c.alpha, c.beta, c.a), k);
}

Table cmd_amplitudes(const Config& c) {
  Table t;
  t.command = "amplitudes";
  t.params = base_params(c);
  t.columns = {"k"};
  for (const char* name : {"sigma_r", "sigma_l", "rho_r", "rho_l", "A_r", "B_r", "A_l", "B_l"}) {
    t.columns.push_back(std::string("re_") + name);
    t.columns.push_back(std::string("im_") + name);
  }
  t.columns.insert(t.columns.end(), {"abs_sigma_sq", "abs_rho_r_sq", "unitarity_defect"});
  // Validate once on the calling thread so argument errors are reported cleanly.
  if (is_kink(c))
    KinkDeltaParams(c.alpha, c.beta, c.a);
  else
    DeltaPairParams(c.alpha, c.beta, c.a);
  const std::vector<double> ks = k_grid(c);
  t.rows = parallel_rows(ks.size(), [&](std::size_t i) {
    const double k = ks[i];
    const Amplitudes m = amplitudes_at(c, k);
    std::vector<double> row{k};
    for (const cplx& z : {m.sigma_r, m.sigma_l, m.rho_r, m.rho_l, m.A_r, m.B_r, m.A_l, m.B_l}) {
      row.push_back(z.real());
      row.push_back(z.imag());
    }
    row.push_back(std::norm(m.sigma_r));
    row.push_back(std::norm(m.rho_r));
    row.push_back(s_matrix(m).unitarity_defect());
    return row;
  });
  return t;
}

Table cmd_spectrum(const Config& c, bool a_given) {
  Table t;
  t.command = "spectrum";
  t.params["version"] = kVersion;
  if (c.critical) {
    const double ac = critical_separation();
    t.params["a_c"] = ac;
    if (!a_given) {
      t.columns = {"a_c", "residual"};
      t.add_row({ac, ac * std::tanh(ac) - 1.0});
      return t;
    }
  }
  if (c.count < 1) throw InvalidArgument("--count must be >= 1");
  t.params["system"] = c.system;
  t.params["a"] = c.a;
  t.params["count"] = c.count;
  t.params["parity_codes"] = "0=even,1=odd";
  t.columns = {"n", "re_k", "im_k", "parity", "omega"};
  const auto code = [](Parity p) { return p == Parity::Even ? 0.0 : 1.0; };
  if (!is_kink(c)) {
    for (const DirichletMode& m : delta_dirichlet_momenta(c.a, c.count))
      t.add_row({double(m.n), m.k, 0.0, code(m.parity), m.k});
    return t;
  }
  if (const auto g = kink_ground_state(c.a)) {
    t.params["kappa_b"] = g->kappa_b;
    t.add_row({0.0, 0.0, g->kappa_b, 0.0, g->omega});
  }
  for (const DirichletMode& m : kink_dirichlet_spectrum(c.a, c.count))
    t.add_row({double(m.n), m.k, 0.0, code(m.parity), std::sqrt(m.k * m.k + 1.0)});
  return t;
}

SearchRegion region_of(const Config& c) {
  SearchRegion r = figure_region();
  if (!c.region.empty()) {
    r.re_min = c.region[0];
    r.re_max = c.region[1];
    r.im_min = c.region[2];
    r.im_max = c.region[3];
  }
  if (!(r.re_max > r.re_min) || !(r.im_max > r.im_min))
    throw InvalidArgument("--region needs re_min < re_max and im_min < im_max");
  return r;
}

Table cmd_poles(const Config& c) {
  Table t;
  t.command = "poles";
  t.params = base_params(c);
  t.params["assumed_a"] = c.a;
  const SearchRegion r = region_of(c);
  t.params["region"] = {r.re_min, r.re_max, r.im_min, r.im_max};

  const bool kink = is_kink(c);
  std::function<cplx(cplx)> denominator;
  if (kink) {
    const KinkDeltaParams p(c.alpha, c.beta, c.a);
    denominator = [p](cplx k) { return kink_denominator(p, k); };
  } else {
    const DeltaPairParams p(c.alpha, c.beta, c.a);
    denominator = [p](cplx k) { return delta_denominator(p, k); };
  }

  if (c.contour_grid > 0) {
    if (c.contour_grid < 2) throw InvalidArgument("--contour-grid must be >= 2");
    t.params["content"] = "denominator samples for the Re = 0 / Im = 0 zero contours";
    t.columns = {"re_k", "im_k", "re_denominator", "im_denominator"};
    const int n = c.contour_grid;
    t.rows = parallel_rows(std::size_t(n) * n, [&](std::size_t idx) {
      const int i = int(idx / n), j = int(idx % n);
      const cplx k(r.re_min + (r.re_max - r.re_min) * j / (n - 1),
                   r.im_min + (r.im_max - r.im_min) * i / (n - 1));
      const cplx d = denominator(k);
      return std::vector<double>{k.real(), k.imag(), d.real(), d.imag()};
    });
    return t;
  }

  t.params["kind_codes"] = "0=bound,1=antibound,2=resonance";
  t.params["channel_codes"] = "0=J0,1=J1,2=full";
  t.columns = {"re_k", "im_k", "kind", "channel", "residual", "removable"};
  const std::vector<Pole> poles = kink ? find_poles(KinkDeltaParams(c.alpha, c.beta, c.a), r)
                                       : find_poles(DeltaPairParams(c.alpha, c.beta, c.a), r);
  for (const Pole& p : poles)
    t.add_row({p.k.real(), p.k.imag(), double(static_cast<int>(p.kind)),
               double(static_cast<int>(p.channel)), p.residual, p.removable ? 1.0 : 0.0});
  const PoleCounts n = tally(poles, false);
  t.params["bound"] = n.bound;
  t.params["antibound"] = n.antibound;
  t.params["resonance"] = n.resonance;
  return t;
}

Table cmd_casimir(const Config& c) {
  Table t;
  t.command = "casimir";
  t.params["version"] = kVersion;
  t.params["a"] = c.a;
  const int modes = int(c.dirichlet) + int(c.zeta) + int(c.integrand) + int(c.mode_sum);
  if (modes != 1)
    throw InvalidArgument("choose exactly one of --dirichlet, --zeta, --integrand, --mode-sum");

  if (c.dirichlet) {
    t.params["mode"] = "dirichlet";
    t.columns = {"a", "energy"};
    t.add_row({c.a, dirichlet_casimir_energy(c.a)});
  } else if (c.zeta) {
    t.params["mode"] = "zeta";
    t.columns = {"a", "re_s", "im_s", "re_energy", "im_energy"};
    const auto e = zeta_regularized_mode_sum(c.a, {c.s, c.s_imag});
    t.add_row({c.a, c.s, c.s_imag, e.real(), e.imag()});
  } else if (c.integrand) {
    const bool kink = is_kink(c);
    Dispersion d = kink ? Dispersion::Massive : Dispersion::Massless;
    if (c.dispersion == "massless") d = Dispersion::Massless;
    if (c.dispersion == "massive") d = Dispersion::Massive;
    t.params = base_params(c);
    t.params["mode"] = "integrand";
    t.params["dispersion"] = d == Dispersion::Massless ? "massless" : "massive";
    t.params["convention"] = "omega (d delta_+/dk + d delta_-/dk) / (4 pi)";
    t.columns = {"k", "integrand", "free_integrand"};
    const std::vector<double> ks = k_grid(c);
    const DeltaPairParams dp(c.alpha, c.beta, c.a), d0(0.0, 0.0, c.a);
    const KinkDeltaParams kp(c.alpha, c.beta, c.a);
    t.rows = parallel_rows(ks.size(), [&](std::size_t i) {
      const double k = ks[i];
      const double v = kink ? vacuum_energy_integrand(kp, k, d) : vacuum_energy_integrand(dp, k, d);
      return std::vector<double>{k, v, vacuum_energy_integrand(d0, k, d)};
    });
  } else {
    const ModeSumTable m = kink_dirichlet_mode_sum_difference(c.a, c.n_max);
    t.params["mode"] = "mode-sum";
    t.params["ground_omega"] = m.ground_omega;
    t.params["caveat"] = m.caveat;
    t.columns = {"n", "omega_kink", "omega_free", "partial_sum"};
    for (const ModeSumRow& r : m.rows)
      t.add_row({double(r.n), r.omega_kink, r.omega_free, r.partial_sum});
  }
  return t;
}

Table cmd_verify(const Config& c, std::ostream& err, bool& all_passed) {
  VerifyOptions o;
  o.alpha = c.alpha;
  o.beta = c.beta;
  o.a = c.a;
  o.figures = c.figures;
  o.tolerance_scale = c.tolerance_scale;
  if (!(c.tolerance_scale >= 0.0)) throw InvalidArgument("--tolerance-scale must be >= 0");
  const auto checks = run_verify_suite(o);

  Table t;
  t.command = "verify";
  t.params = base_params(c);
  t.params.erase("system");
  t.params["figures"] = c.figures;
  t.params["tolerance_scale"] = c.tolerance_scale;
  auto names = nlohmann::ordered_json::array();
  t.columns = {"check", "value", "tolerance", "passed"};
  all_passed = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    names.push_back(checks[i].name);
    t.add_row({double(i), checks[i].value, checks[i].tolerance, checks[i].passed ? 1.0 : 0.0});
    if (!checks[i].passed) {
      all_passed = false;
      err << "FAIL " << checks[i].name << ": " << checks[i].value << " >= " << checks[i].tolerance
          << "\n";
    }
  }
  t.params["checks"] = names;
  return t;
}

void add_model_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--system", c.system, "two-delta or kink")
      ->check(CLI::IsMember({"two-delta", "kink"}));
  cmd->add_option("--alpha", c.alpha, "strength of the delta at -a");
  cmd->add_option("--beta", c.beta, "strength of the delta at +a");
}

void add_output_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output,-o", c.output, "output file (default stdout)");
}

void add_grid_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--k-min", c.k_min, "first momentum of the sweep");
  cmd->add_option("--k-max", c.k_max, "last momentum of the sweep");
  cmd->add_option("--samples", c.samples, "number of sweep points (>= 2)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering, pole and vacuum-energy tables for delta and kink potentials"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Config c;

  auto* amp = app.add_subcommand("amplitudes", "scattering amplitudes on a momentum grid");
  add_model_options(amp, c);
  amp->add_option("--a", c.a, "half-separation of the deltas");
  amp->add_option("--k", c.k, "single momentum (overrides the sweep)");
  add_grid_options(amp, c);
  add_output_options(amp, c);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Dirichlet-limit spectrum");
  spectrum_cmd->add_option("--system", c.system, "two-delta or kink")
      ->check(CLI::IsMember({"two-delta", "kink"}));
  auto* a_opt = spectrum_cmd->add_option("--a", c.a, "half-separation");
  spectrum_cmd->add_option("--count", c.count, "number of real modes");
  spectrum_cmd->add_flag("--critical", c.critical, "report the critical separation a_c");
  add_output_options(spectrum_cmd, c);

  auto* poles = app.add_subcommand("poles", "zeros of the amplitude denominator");
  add_model_options(poles, c);
  poles->add_option("--a", c.a, "half-separation");
  poles->add_option("--region", c.region, "re_min re_max im_min im_max")->expected(4);
  poles->add_option("--contour-grid", c.contour_grid,
                    "emit an N x N grid of denominator values instead of the poles");
  add_output_options(poles, c);

  auto* cas = app.add_subcommand("casimir", "vacuum-energy quantities");
  add_model_options(cas, c);
  cas->add_option("--a", c.a, "half-separation");
  cas->add_flag("--dirichlet", c.dirichlet, "zeta-regularised Dirichlet Casimir energy");
  cas->add_flag("--zeta", c.zeta, "regularised mode sum E_d(s)");
  cas->add_flag("--integrand", c.integrand, "phase-shift vacuum-energy integrand");
  cas->add_flag("--mode-sum", c.mode_sum, "kink minus free Dirichlet partial sums");
  cas->add_option("--s", c.s, "real part of s");
  cas->add_option("--s-imag", c.s_imag, "imaginary part of s");
  cas->add_option("--n-max", c.n_max, "modes in the partial sums");
  cas->add_option("--dispersion", c.dispersion, "massless or massive")
      ->check(CLI::IsMember({"massless", "massive"}));
  add_grid_options(cas, c);
  add_output_options(cas, c);

  auto* ver = app.add_subcommand("verify", "cross-module invariant suite");
  ver->add_option("--alpha", c.alpha, "strength at -a");
  ver->add_option("--beta", c.beta, "strength at +a");
  ver->add_option("--a", c.a, "half-separation");
  ver->add_flag("--figures", c.figures, "include the pole/oracle bound-state agreement checks");
  ver->add_option("--tolerance-scale", c.tolerance_scale, "multiplies every tolerance");
  add_output_options(ver, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  int status = kExitOk;
  try {
    Table table;
    if (amp->parsed()) {
      table = cmd_amplitudes(c);
    } else if (spectrum_cmd->parsed()) {
      table = cmd_spectrum(c, a_opt->count() > 0);
    } else if (poles->parsed()) {
      table = cmd_poles(c);
    } else if (cas->parsed()) {
      table = cmd_casimir(c);
    } else {
      bool passed = true;
      table = cmd_verify(c, err, passed);
      if (!passed) status = kExitVerificationFailure;
    }
    const std::string text =
        render(table, c.format == "json" ? OutputFormat::Json : OutputFormat::Csv);
    if (c.output.empty())
      out << text;
    else
      write_atomically(c.output, text);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputationError;
  }
  return status;
}

}  // namespace qscatter
