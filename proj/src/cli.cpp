#include "qillum/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qillum/bounds.hpp"
#include "qillum/csv.hpp"
#include "qillum/feasibility.hpp"
#include "qillum/gaussian_core.hpp"
#include "qillum/montecarlo.hpp"
#include "qillum/receivers.hpp"
#include "qillum/roc.hpp"

namespace qillum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kDefaultMGridPoints = 181;  // 20 per decade over [1, 1e9]
constexpr int kDefaultSnrPoints = 301;
constexpr int kDefaultWignerPoints = 101;
constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

[[noreturn]] void invalid(const std::string& what) { throw std::invalid_argument(what); }

template <class T>
const T& require(const std::optional<T>& value, const char* flag) {
  if (!value) invalid(std::string("missing required option ") + flag);
  return *value;
}

bool is_count(double x) { return x >= 0.0 && x <= kMaxExactInteger && std::floor(x) == x; }

std::uint64_t as_count(double x) { return static_cast<std::uint64_t>(x); }

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

// "q2" -> phase-space index 2, "p1" -> 1
int quadrature_index(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'q' && name[0] != 'p')) invalid("bad quadrature name '" + name + "'");
  int mode = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') invalid("bad quadrature name '" + name + "'");
    mode = mode * 10 + (name[i] - '0');
    if (mode > 2) invalid("quadrature '" + name + "' refers to a mode beyond 2");
  }
  if (mode < 1) invalid("bad quadrature name '" + name + "'");
  return 2 * (mode - 1) + (name[0] == 'p' ? 1 : 0);
}

std::string default_quadratures(const RunConfig& c) { return c.state == "tmsv" ? "q1,q2" : "q1,p1"; }

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (points - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return out;
}

IlluminationScenario scenario_of(const RunConfig& c, std::uint64_t m) {
  return IlluminationScenario(*c.n_s, *c.n_b, *c.kappa, m, c.w0);
}

IlluminationScenario scenario_of(const RunConfig& c) { return scenario_of(c, as_count(*c.m)); }

double gain_for(const RunConfig& c, const IlluminationScenario& s) {
  return c.gain ? *c.gain : optimal_opa_gain(s);
}

void warn_validity(const BoundResult& bound, std::ostream& err) {
  for (const auto& flag : bound.validity) {
    if (!flag.holds) err << "warning: " << to_string(bound.kind) << " bound assumes " << flag.assumption << '\n';
  }
}

// ---------------------------------------------------------------------------

void write_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto s = scenario_of(c, 1);
  const auto cs = cs_chernoff_bound(s);
  const auto lower = classical_lower_bound(s);
  const auto qi = qi_upper_bound(s);
  warn_validity(qi, err);
  CsvWriter csv(out, {"M", "pe_cs_upper", "pe_cs_lower", "pe_qi_upper"}, kCurveDigits);
  for (double m : log_grid(c.m_min, c.m_max, c.points > 0 ? c.points : kDefaultMGridPoints)) {
    csv.row({m, cs.bound.p_e_at(m), lower.bound.p_e_at(m), qi.p_e_at(m)});
  }
}

void write_opa(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto s = scenario_of(c, 1);
  const auto cs = cs_chernoff_bound(s);
  const auto qi = qi_upper_bound(s);
  const auto opa = opa_error_bound(opa_model(s, gain_for(c, s)));
  warn_validity(opa.bound, err);
  CsvWriter csv(out, {"M", "pe_cs", "pe_opa", "pe_qi"}, kCurveDigits);
  for (double m : log_grid(c.m_min, c.m_max, c.points > 0 ? c.points : kDefaultMGridPoints)) {
    csv.row({m, cs.bound.p_e_at(m), opa.bound.p_e_at(m), qi.p_e_at(m)});
  }
}

void write_roc(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto s = scenario_of(c);
  const auto ci = roc_ci_homodyne(s);
  const auto opa = roc_opa(opa_model(s, gain_for(c, s)));
  const auto ff = roc_pure_state(FfsfgModel::from(s).h());
  if (opa.clt_warning) err << "warning: M below " << kDefaultCltGate << ", OPA Gaussian approximation is rough\n";
  CsvWriter csv(out, {"pf", "pd_ci", "pd_opa", "pd_ffsfg"}, kCurveDigits);
  for (std::size_t i = 0; i < ci.points.size(); ++i) {
    csv.row({ci.points[i].p_f, ci.points[i].p_d, opa.points[i].p_d, ff.points[i].p_d});
  }
}

void write_snr(const RunConfig& c, std::ostream& out) {
  const bool several = c.pf.size() > 1;
  const auto db = linear_grid(c.snr_db_min, c.snr_db_max, c.points > 0 ? c.points : kDefaultSnrPoints);
  const std::vector<std::string> header =
      several ? std::vector<std::string>{"pf", "snr_db", "pd_ci", "pd_qi"}
              : std::vector<std::string>{"snr_db", "pd_ci", "pd_qi"};
  CsvWriter csv(out, header, kCurveDigits);
  for (double pf : c.pf) {
    for (double x : db) {
      const double snr = std::pow(10.0, x / 10.0);
      const double ci = pd_at_snr(SnrCurve::ci_homodyne, pf, snr);
      const double qi = pd_at_snr(SnrCurve::qi_ffsfg, pf, snr);
      if (several) {
        csv.row({pf, x, ci, qi});
      } else {
        csv.row({x, ci, qi});
      }
    }
  }
}

GaussianState wigner_state(const RunConfig& c) {
  const std::string& name = *c.state;
  if (name == "vacuum") return coherent_state({0.0, 0.0});
  if (name == "coherent") return coherent_state({c.alpha_re, c.alpha_im});
  if (name == "thermal") return thermal_state(c.photons);
  return tmsv_state(c.photons);
}

void write_wigner(const RunConfig& c, std::ostream& out) {
  const auto state = wigner_state(c);
  const auto names = split(c.quadratures.value_or(default_quadratures(c)), ',');
  const std::array<int, 2> idx{quadrature_index(names[0]), quadrature_index(names[1])};
  const auto m = marginal(state, idx);
  double extent = 0.0;
  if (c.extent) {
    extent = *c.extent;
  } else {
    extent = 4.0 * std::sqrt(std::max(m.cov(0, 0), m.cov(1, 1)));
  }
  const bool single_xp = state.num_modes() == 1 && idx[0] == 0 && idx[1] == 1;
  write_wigner_grid(out, m, single_xp ? "x" : names[0], single_xp ? "p" : names[1], extent,
                    c.points > 0 ? c.points : kDefaultWignerPoints);
}

ordered_json moments_json(const SampleMoments& m) {
  ordered_json j;
  j["count"] = m.count;
  j["mean"] = m.mean;
  j["variance"] = m.variance();
  return j;
}

void write_montecarlo(const RunConfig& c, std::ostream& out) {
  const auto s = scenario_of(c);
  const auto trials = as_count(c.trials);
  const RunOptions options{c.threads};
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["receiver"] = *c.receiver;
  j["trials"] = trials;
  j["seed"] = c.seed;
  j["scenario"] = {{"n_s", s.n_s()}, {"n_b", s.n_b()}, {"kappa", s.kappa()}, {"M", s.m()}, {"w0", s.w0()}};

  TrialBatch batch;
  ordered_json analytic;
  if (*c.receiver == "homodyne") {
    const auto model = HomodyneModel::from(s);
    batch = run_homodyne_trials(model, trials, c.seed, options);
    const auto exact = homodyne_error_probability(model);
    j["threshold"] = model.threshold();
    analytic["p_e"] = exact.p_e;
    analytic["exponent"] = exact.exponent;
  } else {
    const auto model = opa_model(s, gain_for(c, s));
    batch = run_opa_trials(model, trials, c.seed, options);
    const auto bound = opa_error_bound(model);
    j["gain"] = model.gain;
    j["threshold"] = model.threshold;
    analytic["p_e_upper_bound"] = bound.bound.p_e;
    analytic["exponent"] = bound.bound.exponent;
  }
  j["counts"] = {{"correct_absent", batch.counts.correct_absent},
                 {"false_alarm", batch.counts.false_alarm},
                 {"detect", batch.counts.detect},
                 {"miss", batch.counts.miss}};
  j["estimates"] = {{"p_f", batch.p_f()}, {"p_d", batch.p_d()}, {"p_e", batch.p_e()}};
  j["standard_errors"] = {{"p_f", batch.se_p_f()}, {"p_d", batch.se_p_d()}, {"p_e", batch.se_p_e()}};
  j["statistic"] = {{"absent", moments_json(batch.absent)}, {"present", moments_json(batch.present)}};
  j["analytic"] = analytic;
  out << j.dump(2) << '\n';
}

void write_feasibility(const RunConfig& c, std::ostream& out) {
  FeasibilityParams p;
  p.signal_frequency_hz = *c.freq_hz;
  p.bandwidth_hz = *c.bandwidth_hz;
  p.pulse_duration_s = pulse_duration_for(*c.m, *c.bandwidth_hz);
  p.n_s = *c.n_s;
  p.kappa_i = c.kappa_i;
  p.kappa_m = c.kappa_m;
  p.validate();
  const double power = pulse_power(p);
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["T_s"] = p.pulse_duration_s;
  j["M"] = time_bandwidth(p);
  j["power_W"] = power;
  j["power_ratio_to_mW_dB"] = power_ratio_to_mw_db(power);
  j["orders_below_1mW"] = orders_below(power, 1e-3);
  j["orders_below_1MW"] = orders_below(power, 1e6);
  j["power_W_frequency_as_omega"] = pulse_power_frequency_as_omega(p);
  j["exponent_scale"] = effective_exponent(1.0, p);
  out << j.dump(2) << '\n';
}

void compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.subcommand) {
    case Subcommand::bounds:
      return write_bounds(c, out, err);
    case Subcommand::opa:
      return write_opa(c, out, err);
    case Subcommand::roc:
      return write_roc(c, out, err);
    case Subcommand::snr:
      return write_snr(c, out);
    case Subcommand::wigner:
      return write_wigner(c, out);
    case Subcommand::montecarlo:
      return write_montecarlo(c, out);
    case Subcommand::feasibility:
      return write_feasibility(c, out);
  }
}

// ---------------------------------------------------------------------------

void validate_scenario(const RunConfig& c, bool need_m) {
  const double ns = require(c.n_s, "--ns");
  const double nb = require(c.n_b, "--nb");
  const double kappa = require(c.kappa, "--kappa");
  if (!(ns > 0.0) || !std::isfinite(ns)) invalid("--ns must be positive");
  if (!(nb > 0.0) || !std::isfinite(nb)) invalid("--nb must be positive");
  if (!in_unit(kappa)) invalid("--kappa must lie in [0, 1]");
  if (!in_unit(c.w0)) invalid("--w0 must lie in [0, 1]");
  if (need_m && !is_count(require(c.m, "--m"))) invalid("--m must be a non-negative integer");
  if (c.gain && !(*c.gain >= 1.0 && std::isfinite(*c.gain))) invalid("--gain must be >= 1");
}

void validate_m_grid(const RunConfig& c) {
  if (!(c.m_min >= 1.0) || !std::isfinite(c.m_max) || !(c.m_max > c.m_min)) {
    invalid("need 1 <= --m-min < --m-max");
  }
}

void validate_points(const RunConfig& c) {
  if (c.points != 0 && c.points < 2) invalid("--points must be at least 2");
}

}  // namespace

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::bounds:
      return "bounds";
    case Subcommand::opa:
      return "opa";
    case Subcommand::roc:
      return "roc";
    case Subcommand::snr:
      return "snr";
    case Subcommand::wigner:
      return "wigner";
    case Subcommand::montecarlo:
      return "montecarlo";
    case Subcommand::feasibility:
      return "feasibility";
  }
  return "unknown";
}

OutputFormat effective_format(const RunConfig& config) {
  const bool report = config.subcommand == Subcommand::montecarlo || config.subcommand == Subcommand::feasibility;
  return config.format.value_or(report ? OutputFormat::json : OutputFormat::csv);
}

void validate(const RunConfig& c) {
  const bool report = c.subcommand == Subcommand::montecarlo || c.subcommand == Subcommand::feasibility;
  if (effective_format(c) != (report ? OutputFormat::json : OutputFormat::csv)) {
    invalid(std::string(to_string(c.subcommand)) + " only writes " + (report ? "json" : "csv"));
  }
  validate_points(c);
  switch (c.subcommand) {
    case Subcommand::bounds:
    case Subcommand::opa:
      validate_scenario(c, false);
      validate_m_grid(c);
      break;
    case Subcommand::roc:
      validate_scenario(c, true);
      break;
    case Subcommand::snr:
      if (c.pf.empty()) invalid("missing required option --pf");
      for (double pf : c.pf) {
        if (!(pf > 0.0 && pf < 1.0)) invalid("--pf values must lie in (0, 1)");
      }
      if (!std::isfinite(c.snr_db_min) || !std::isfinite(c.snr_db_max) || !(c.snr_db_max > c.snr_db_min)) {
        invalid("need --snr-db-min < --snr-db-max");
      }
      break;
    case Subcommand::wigner: {
      const auto& state = require(c.state, "--state");
      if (state != "vacuum" && state != "coherent" && state != "thermal" && state != "tmsv") {
        invalid("--state must be vacuum, coherent, thermal or tmsv");
      }
      if (!(c.photons >= 0.0) || !std::isfinite(c.photons)) invalid("--n must be non-negative");
      if (!std::isfinite(c.alpha_re) || !std::isfinite(c.alpha_im)) invalid("--alpha-re/--alpha-im must be finite");
      const auto names = split(c.quadratures.value_or(default_quadratures(c)), ',');
      if (names.size() != 2) invalid("--quadratures takes exactly two names, e.g. q1,p1");
      const int modes = state == "tmsv" ? 2 : 1;
      for (const auto& n : names) {
        if (quadrature_index(n) >= 2 * modes) invalid("quadrature '" + n + "' is not a mode of this state");
      }
      if (quadrature_index(names[0]) == quadrature_index(names[1])) invalid("--quadratures must differ");
      if (c.extent && !(*c.extent > 0.0 && std::isfinite(*c.extent))) invalid("--extent must be positive");
      break;
    }
    case Subcommand::montecarlo: {
      validate_scenario(c, true);
      const auto& r = require(c.receiver, "--receiver");
      if (r != "homodyne" && r != "opa") invalid("--receiver must be homodyne or opa");
      if (!is_count(c.trials) || c.trials < 1.0) invalid("--trials must be a positive integer");
      if (c.threads < 1) invalid("--threads must be at least 1");
      break;
    }
    case Subcommand::feasibility: {
      const double f = require(c.freq_hz, "--freq-hz");
      const double w = require(c.bandwidth_hz, "--bandwidth-hz");
      const double ns = require(c.n_s, "--ns");
      const double m = require(c.m, "--m");
      if (!(f > 0.0) || !std::isfinite(f)) invalid("--freq-hz must be positive");
      if (!(w > 0.0) || !std::isfinite(w)) invalid("--bandwidth-hz must be positive");
      if (!(ns > 0.0) || !std::isfinite(ns)) invalid("--ns must be positive");
      if (!(m > 0.0) || !std::isfinite(m)) invalid("--m must be positive");
      if (!(c.kappa_i > 0.0 && c.kappa_i <= 1.0) || !(c.kappa_m > 0.0 && c.kappa_m <= 1.0)) {
        invalid("--kappa-i and --kappa-m must lie in (0, 1]");
      }
      break;
    }
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  std::ostringstream buffer;
  try {
    compute(config, buffer, err);
  } catch (const std::logic_error& e) {
    // domain/argument errors surfacing from the model constructors
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }

  if (config.output.empty()) {
    out << buffer.str();
    return kExitOk;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (file) file << buffer.str();
  file.close();
  if (!file) {
    err << "error: cannot write " << config.output << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Argument parsing

namespace {

std::string json_scalar_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  invalid("config key '" + key + "' must be a number, string or array of those");
}

// Fills options the command line left unset from a JSON object whose keys
// are long flag names ("ns", "m-min"; underscores accepted for dashes).
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    invalid("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) invalid("config file must hold a JSON object");
  for (const auto& [raw_key, value] : j.items()) {
    std::string key = raw_key;
    for (auto& ch : key) {
      if (ch == '_') ch = '-';
    }
    if (key == "config") invalid("config files cannot name another config");
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) invalid("unknown config key '" + raw_key + "' for " + sub.get_name());
    if (opt->count() > 0) continue;  // command line wins
    if (value.is_array()) {
      for (const auto& v : value) opt->add_result(json_scalar_text(v, raw_key));
    } else {
      opt->add_result(json_scalar_text(value, raw_key));
    }
    opt->run_callback();
  }
}

struct Binder {
  RunConfig& c;
  std::string& config_path;
  std::string& format;

  CLI::App* common(CLI::App* sub) const {
    sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--config", config_path, "JSON file of flag values; flags win");
    return sub;
  }

  void scenario(CLI::App* sub, bool with_m) const {
    sub->add_option("--ns", c.n_s, "Mean signal photons per mode");
    sub->add_option("--nb", c.n_b, "Mean background photons per mode");
    sub->add_option("--kappa", c.kappa, "Round-trip transmissivity");
    if (with_m) sub->add_option("--m", c.m, "Number of mode pairs");
    sub->add_option("--w0", c.w0, "Prior of target absence");
  }

  void m_grid(CLI::App* sub) const {
    sub->add_option("--m-min", c.m_min, "Smallest M of the log grid");
    sub->add_option("--m-max", c.m_max, "Largest M of the log grid");
    sub->add_option("--points", c.points, "Grid points");
  }
};

}  // namespace

ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string config_path;
  std::string format;
  const Binder bind{c, config_path, format};

  CLI::App app{"Gaussian quantum illumination detection toolkit", "qillum"};
  app.require_subcommand(1);

  std::vector<std::pair<Subcommand, CLI::App*>> subs;

  auto* bounds = bind.common(app.add_subcommand("bounds", "Error-probability bounds versus M (CSV)"));
  bind.scenario(bounds, false);
  bind.m_grid(bounds);
  subs.emplace_back(Subcommand::bounds, bounds);

  auto* opa = bind.common(app.add_subcommand("opa", "OPA receiver error bound versus M (CSV)"));
  bind.scenario(opa, false);
  bind.m_grid(opa);
  opa->add_option("--gain", c.gain, "OPA gain G (default: optimal)");
  subs.emplace_back(Subcommand::opa, opa);

  auto* roc = bind.common(app.add_subcommand("roc", "ROC curves of the three receivers (CSV)"));
  bind.scenario(roc, true);
  roc->add_option("--gain", c.gain, "OPA gain G (default: optimal)");
  subs.emplace_back(Subcommand::roc, roc);

  auto* snr = bind.common(app.add_subcommand("snr", "Detection probability versus SNR (CSV)"));
  snr->add_option("--pf", c.pf, "False-alarm probabilities")->delimiter(',');
  snr->add_option("--snr-db-min", c.snr_db_min, "Lowest SNR in dB");
  snr->add_option("--snr-db-max", c.snr_db_max, "Highest SNR in dB");
  snr->add_option("--points", c.points, "Grid points");
  subs.emplace_back(Subcommand::snr, snr);

  auto* wigner = bind.common(app.add_subcommand("wigner", "Wigner function on a grid (CSV)"));
  wigner->add_option("--state", c.state, "vacuum, coherent, thermal or tmsv");
  wigner->add_option("--n", c.photons, "Mean photon number (thermal, tmsv)");
  wigner->add_option("--alpha-re", c.alpha_re, "Coherent amplitude, real part");
  wigner->add_option("--alpha-im", c.alpha_im, "Coherent amplitude, imaginary part");
  wigner->add_option("--quadratures", c.quadratures, "Two quadratures to plot, e.g. q1,p1 or q1,q2");
  wigner->add_option("--extent", c.extent, "Half-width of the grid around the mean");
  wigner->add_option("--points", c.points, "Samples per axis");
  subs.emplace_back(Subcommand::wigner, wigner);

  auto* mc = bind.common(app.add_subcommand("montecarlo", "Monte Carlo receiver simulation (JSON)"));
  bind.scenario(mc, true);
  mc->add_option("--receiver", c.receiver, "homodyne or opa");
  mc->add_option("--trials", c.trials, "Number of trials");
  mc->add_option("--seed", c.seed, "RNG seed");
  mc->add_option("--threads", c.threads, "Worker threads (results do not depend on it)");
  mc->add_option("--gain", c.gain, "OPA gain G (default: optimal)");
  subs.emplace_back(Subcommand::montecarlo, mc);

  auto* feas = bind.common(app.add_subcommand("feasibility", "Pulse duration and power (JSON)"));
  feas->add_option("--freq-hz", c.freq_hz, "Signal frequency in Hz");
  feas->add_option("--bandwidth-hz", c.bandwidth_hz, "Phase-matching bandwidth in Hz");
  feas->add_option("--ns", c.n_s, "Mean signal photons per mode");
  feas->add_option("--m", c.m, "Number of mode pairs");
  feas->add_option("--kappa-i", c.kappa_i, "Idler storage transmissivity");
  feas->add_option("--kappa-m", c.kappa_m, "Temporal mismatch overlap");
  subs.emplace_back(Subcommand::feasibility, feas);

  try {
    app.parse(argc, argv);
    for (const auto& [kind, sub] : subs) {
      if (!sub->parsed()) continue;
      c.subcommand = kind;
      if (!config_path.empty()) apply_config(*sub, config_path);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitValidation};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return {std::nullopt, kExitValidation};
  }
  if (!format.empty()) c.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  return {c, kExitOk};
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto parsed = parse_args(argc, argv, out, err);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, out, err);
}

}  // namespace qillum::cli
