// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ballpit/dataset.hpp"
#include "ballpit/diagnostics.hpp"
#include "ballpit/engine.hpp"
#include "ballpit/errors.hpp"
#include "ballpit/model.hpp"
#include "ballpit/oracle.hpp"
#include "ballpit/prior.hpp"
#include "experiments.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ballpit::tools {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_short(double v) {
  if (std::isnan(v)) return "-";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidData*>(&e)) return kExitData;
  if (dynamic_cast<const ConfigError*>(&e) ||
      dynamic_cast<const InvalidPrior*>(&e) ||
      dynamic_cast<const NoConjugateForm*>(&e)) {
    return kExitConfig;
  }
  return kExitSampler;
}

int report(const std::exception& e, const char* command) {
  std::cerr << "ballpit " << command << ": " << e.what() << "\n";
  return exit_code_for(e);
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

CauchyParams default_cauchy_init(const Dataset& data) {
  const double med = median_of(data.values());
  std::vector<double> dev;
  dev.reserve(data.n());
  for (double x : data.values()) dev.push_back(std::fabs(x - med));
  const double mad = median_of(std::move(dev));
  return {med, mad > 0.0 ? std::log(mad) : 0.0};
}

std::optional<std::pair<std::string, double>> parse_fixed(
    const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ConfigError("--fixed expects eta=<value> or mu=<value>");
  }
  const std::string key = text.substr(0, eq);
  if (key != "eta" && key != "mu") {
    throw ConfigError("--fixed expects eta=<value> or mu=<value>");
  }
  try {
    return std::make_pair(key, std::stod(text.substr(eq + 1)));
  } catch (const std::exception&) {
    throw ConfigError("--fixed: bad numeric value in '" + text + "'");
  }
}

struct ActiveModel {
  ModelSpec spec;
  std::optional<double> fixed_mu;
  std::optional<double> fixed_eta;
};

ActiveModel build_model(ModelKind kind, const Dataset& data,
                        const std::string& fixed_text, bool laplace_init) {
  ActiveModel out;
  switch (kind) {
    case ModelKind::bernoulli:
      out.spec = bernoulli_model(data);
      return out;
    case ModelKind::poisson:
      out.spec = poisson_model(data);
      return out;
    default:
      break;
  }

  const auto fixed = parse_fixed(fixed_text);
  if (fixed && laplace_init) {
    throw ConfigError("--fixed and --laplace-init are mutually exclusive");
  }
  if (!fixed && !laplace_init) {
    throw ConfigError(to_string(kind) +
                      " needs --fixed for the frozen coordinate or "
                      "--laplace-init");
  }

  CauchyParams frozen{};
  if (laplace_init) {
    frozen = laplace_mode(data, default_cauchy_init(data));
  }
  if (kind == ModelKind::cauchy_mu) {
    const double eta = fixed ? (fixed->first == "eta"
                                    ? fixed->second
                                    : throw ConfigError(
                                          "cauchy-mu expects --fixed eta=<v>"))
                             : frozen.eta;
    out.spec = cauchy_mu_model(data, eta);
    out.fixed_eta = eta;
  } else {
    const double mu = fixed ? (fixed->first == "mu"
                                   ? fixed->second
                                   : throw ConfigError(
                                         "cauchy-eta expects --fixed mu=<v>"))
                            : frozen.mu;
    out.spec = cauchy_eta_model(data, mu);
    out.fixed_mu = mu;
  }
  return out;
}

json summary_to_json(const PosteriorSummary& s) {
  json q;
  for (const auto& [p, v] : s.quantiles) q[fmt_short(p)] = v;
  return json{{"mean", s.mean},
              {"mcse", s.mcse},
              {"sd", s.sd},
              {"quantiles", q},
              {"ess", s.ess},
              {"rhat", s.rhat},
              {"n", s.n},
              {"runtime_seconds", s.runtime_seconds}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("short write to " + path.string());
}

void write_draws_csv(const fs::path& path, const EnsembleResult& result,
                     int warmup_steps) {
  std::ostringstream out;
  out << "ball_id,step,value\n";
  for (const ChainOutput& chain : result.chains) {
    for (std::size_t i = static_cast<std::size_t>(warmup_steps);
         i < chain.samples.size(); ++i) {
      out << chain.ball_id << ',' << (i + 1) << ',' << fmt(chain.samples[i])
          << '\n';
    }
  }
  write_text(path, out.str());
}

void write_density_csv(const fs::path& path, std::vector<double> values) {
  constexpr int kBins = 100;
  const double lo = quantile(values, 0.001);
  double hi = quantile(values, 0.999);
  if (!(hi > lo)) hi = lo + 1.0;
  const double width = (hi - lo) / kBins;

  std::vector<long> counts(kBins, 0);
  for (double v : values) {
    if (v < lo || v > hi) continue;
    int bin = static_cast<int>((v - lo) / width);
    if (bin == kBins) bin = kBins - 1;  // right edge of the last bin
    counts[static_cast<std::size_t>(bin)] += 1;
  }
  std::ostringstream out;
  out << "bin_left,bin_right,count\n";
  for (int b = 0; b < kBins; ++b) {
    out << fmt(lo + b * width) << ',' << fmt(lo + (b + 1) * width) << ','
        << counts[static_cast<std::size_t>(b)] << '\n';
  }
  write_text(path, out.str());
}

struct RunArtifacts {
  EnsembleResult result;
  PosteriorSummary summary;
  double acceptance_rate = 0.0;
  long reseed_count = 0;
};

RunArtifacts run_bpa(const ModelSpec& model, const PriorSpec& prior,
                     const RunConfig& config, int threads) {
  RunArtifacts art;
  art.result = run_ensemble(model, prior, config, threads);
  art.summary = summarize(art.result.pooled, art.result.chains,
                          config.warmup_steps, art.result.runtime_seconds);
  long accepted = 0;
  for (const ChainOutput& c : art.result.chains) {
    accepted += c.acceptance_count;
    art.reseed_count += c.reseed_count;
  }
  art.acceptance_rate = static_cast<double>(accepted) /
                        (static_cast<double>(config.n_balls) *
                         static_cast<double>(config.total_steps));
  return art;
}

json run_echo_json(const RunOptions& opt, const ActiveModel& model,
                   const Dataset& data) {
  json j{{"method", "bpa"},
         {"model", opt.model},
         {"data", {{"path", opt.data_path}, {"n", data.n()}, {"sum", data.sum()}}},
         {"prior", opt.prior},
         {"config",
          {{"balls", opt.balls},
           {"epsilon", opt.epsilon},
           {"sigma2", opt.sigma2},
           {"steps", opt.steps},
           {"warmup", opt.warmup},
           {"stuck-lag", opt.stuck_lag},
           {"seed", opt.seed},
           {"threads", opt.threads},
           {"integrator", opt.integrator}}}};
  if (model.fixed_mu) j["fixed"]["mu"] = *model.fixed_mu;
  if (model.fixed_eta) j["fixed"]["eta"] = *model.fixed_eta;
  return j;
}

void write_run_outputs(const fs::path& dir, const json& echo,
                       const RunArtifacts& art, int warmup_steps) {
  fs::create_directories(dir);
  json j = echo;
  j["summary"] = summary_to_json(art.summary);
  j["acceptance_rate"] = art.acceptance_rate;
  j["reseed_count"] = art.reseed_count;
  write_text(dir / "summary.json", j.dump(2) + "\n");
  write_draws_csv(dir / "draws.csv", art.result, warmup_steps);
  write_density_csv(dir / "density.csv", art.result.pooled.values);
}

double default_proposal_sd(ModelKind kind) {
  switch (kind) {
    case ModelKind::bernoulli: return 0.05;
    case ModelKind::poisson: return 1.0;
    case ModelKind::cauchy_mu: return 2.0;
    case ModelKind::cauchy_eta: return 0.3;
  }
  return 1.0;
}

struct MHOracle {
  PosteriorSummary summary;
  double acceptance_rate = 0.0;
};

// Reference posterior sampler: four independent chains pooled. The Cauchy
// marginals use the likelihood alone (the reference prior is flat in the
// active coordinate); other models add the prior's log density.
MHOracle mh_oracle(ModelKind kind, const ActiveModel& model,
                   const PriorSpec& prior, const Dataset& data,
                   const OracleOptions& opt) {
  const bool flat_prior =
      kind == ModelKind::cauchy_mu || kind == ModelKind::cauchy_eta;
  const auto& spec = model.spec;
  auto log_post = [&spec, &prior, flat_prior](double x) {
    if (!spec.support.contains(x)) {
      return -std::numeric_limits<double>::infinity();
    }
    const double ll = spec.log_lik(x);
    return flat_prior ? ll : ll + log_density(prior, x);
  };

  double init = 0.0;
  switch (kind) {
    case ModelKind::bernoulli:
      init = std::clamp(data.mean(), 1e-3, 1.0 - 1e-3);
      break;
    case ModelKind::poisson:
      init = std::max(data.mean(), 0.5);
      break;
    case ModelKind::cauchy_mu:
      init = median_of(data.values());
      break;
    case ModelKind::cauchy_eta:
      init = default_cauchy_init(data).eta;
      break;
  }

  const double proposal_sd = opt.mh_proposal_sd > 0.0
                                 ? opt.mh_proposal_sd
                                 : default_proposal_sd(kind);
  constexpr int kChains = 4;
  std::vector<std::vector<double>> chains;
  double acceptance = 0.0;
  double runtime = 0.0;
  for (int c = 0; c < kChains; ++c) {
    MHConfig cfg{proposal_sd, opt.mh_steps, opt.mh_warmup, opt.seed + c};
    const auto t0 = std::chrono::steady_clock::now();
    MHResult r = rw_metropolis(log_post, init, cfg);
    runtime += std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
                   .count();
    acceptance += r.acceptance_rate / kChains;
    chains.push_back(std::move(r.draws.values));
  }
  return {summarize_chains(chains, runtime), acceptance};
}

json analytic_summary_json(const AnalyticPosterior& post) {
  const std::vector<double> qs =
      analytic_quantiles(post, std::span<const double>(kSummaryProbs));
  json q;
  for (std::size_t i = 0; i < std::size(kSummaryProbs); ++i) {
    q[fmt_short(kSummaryProbs[i])] = qs[i];
  }
  return json{{"mean", post.mean()},
              {"mcse", 0.0},
              {"sd", post.sd()},
              {"quantiles", q},
              {"ess", nullptr},
              {"rhat", nullptr},
              {"n", 0},
              {"runtime_seconds", 0.0}};
}

// ------------------------------------------------------------------
// Comparison tables for `reproduce`
// ------------------------------------------------------------------

struct TableRow {
  std::string parameter;
  std::string method;
  double mean = std::numeric_limits<double>::quiet_NaN();
  double mcse = std::numeric_limits<double>::quiet_NaN();
  double sd = std::numeric_limits<double>::quiet_NaN();
  double q[5] = {};
  double time_s = std::numeric_limits<double>::quiet_NaN();
};

TableRow row_from_summary(const std::string& parameter,
                          const std::string& method,
                          const PosteriorSummary& s) {
  TableRow r{parameter, method, s.mean, s.mcse, s.sd, {}, s.runtime_seconds};
  std::size_t i = 0;
  for (double p : kSummaryProbs) r.q[i++] = s.quantiles.at(p);
  return r;
}

TableRow row_from_published(const PublishedRow& p) {
  TableRow r{p.parameter, "published-bpa", p.mean,  p.std_error, p.sd,
             {p.q025, p.q25, p.q50, p.q75, p.q975},
             p.time_seconds ? *p.time_seconds
                            : std::numeric_limits<double>::quiet_NaN()};
  return r;
}

std::string table_csv(const std::string& experiment,
                      const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "experiment,parameter,method,mean,mcse,sd,q2.5,q25,q50,q75,q97.5,"
         "time_s\n";
  for (const TableRow& r : rows) {
    out << experiment << ',' << r.parameter << ',' << r.method;
    for (double v : {r.mean, r.mcse, r.sd, r.q[0], r.q[1], r.q[2], r.q[3],
                     r.q[4], r.time_s}) {
      out << ',' << (std::isnan(v) ? "" : fmt(v));
    }
    out << '\n';
  }
  return out.str();
}

std::string table_text(const std::string& experiment,
                       const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "experiment: " << experiment << "\n";
  char line[256];
  out << "param     method             mean     mcse       sd     2.5%      "
         "25%      50%      75%    97.5%   time_s\n";
  for (const TableRow& r : rows) {
    std::snprintf(line, sizeof(line),
                  "%-9s %-14s %8s %8s %8s %8s %8s %8s %8s %8s %8s\n",
                  r.parameter.c_str(), r.method.c_str(),
                  fmt_short(r.mean).c_str(), fmt_short(r.mcse).c_str(),
                  fmt_short(r.sd).c_str(), fmt_short(r.q[0]).c_str(),
                  fmt_short(r.q[1]).c_str(), fmt_short(r.q[2]).c_str(),
                  fmt_short(r.q[3]).c_str(), fmt_short(r.q[4]).c_str(),
                  fmt_short(r.time_s).c_str());
    out << line;
  }
  return out.str();
}

void write_values_file(const fs::path& path, const std::vector<double>& xs) {
  std::ostringstream out;
  for (double x : xs) out << fmt(x) << '\n';
  write_text(path, out.str());
}

}  // namespace

namespace {

// key=value per line; '#' starts a comment. Keys mirror the long flag names.
void apply_config_file(RunOptions& opt) {
  std::ifstream in(opt.config_file);
  if (!in) throw ConfigError("cannot open config file: " + opt.config_file);
  auto want = [&](const std::string& key) {
    return opt.flags_given.find(key) == opt.flags_given.end();
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = line;
    t.erase(0, t.find_first_not_of(" \t"));
    if (t.empty() || t[0] == '#') continue;
    t.erase(t.find_last_not_of(" \t") + 1);
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(opt.config_file + ":" + std::to_string(lineno) +
                        ": expected key=value");
    }
    const std::string key = t.substr(0, eq);
    const std::string value = t.substr(eq + 1);
    try {
      if (key == "model") { if (want(key)) opt.model = value; }
      else if (key == "data") { if (want(key)) opt.data_path = value; }
      else if (key == "prior") { if (want(key)) opt.prior = value; }
      else if (key == "balls") { if (want(key)) opt.balls = std::stoi(value); }
      else if (key == "epsilon") { if (want(key)) opt.epsilon = std::stod(value); }
      else if (key == "sigma2") {
        if (want(key)) {
          opt.sigma2 = std::stod(value);
          opt.have_sigma2 = true;
        }
      }
      else if (key == "steps") { if (want(key)) opt.steps = std::stoi(value); }
      else if (key == "warmup") { if (want(key)) opt.warmup = std::stoi(value); }
      else if (key == "stuck-lag") { if (want(key)) opt.stuck_lag = std::stoi(value); }
      else if (key == "seed") { if (want(key)) opt.seed = std::stoull(value); }
      else if (key == "threads") { if (want(key)) opt.threads = std::stoi(value); }
      else if (key == "out") { if (want(key)) opt.out_dir = value; }
      else if (key == "integrator") { if (want(key)) opt.integrator = value; }
      else if (key == "fixed") { if (want(key)) opt.fixed = value; }
      else if (key == "laplace-init") {
        if (want(key)) opt.laplace_init = value == "true" || value == "1";
      }
      else {
        throw ConfigError(opt.config_file + ": unknown key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError(opt.config_file + ":" + std::to_string(lineno) +
                        ": bad value for " + key);
    }
  }
}

}  // namespace

int cmd_run(const RunOptions& options) {
  try {
    RunOptions opt = options;
    if (!opt.config_file.empty()) apply_config_file(opt);
    if (opt.model.empty()) throw ConfigError("--model is required");
    if (opt.data_path.empty()) throw ConfigError("--data is required");
    if (opt.prior.empty()) throw ConfigError("--prior is required");
    if (!opt.have_sigma2) throw ConfigError("--sigma2 is required");

    const ModelKind kind = parse_model_kind(opt.model);
    const PriorSpec prior = PriorSpec::parse(opt.prior);
    RunConfig config{opt.balls,  opt.epsilon, opt.steps, opt.warmup,
                     opt.sigma2, opt.stuck_lag, opt.seed,
                     parse_integrator(opt.integrator)};
    config.validate();
    if (opt.balls < 2) {
      throw ConfigError("need at least 2 balls for ensemble diagnostics");
    }

    const Dataset data = Dataset::load(opt.data_path);
    const ActiveModel model =
        build_model(kind, data, opt.fixed, opt.laplace_init);

    const RunArtifacts art = run_bpa(model.spec, prior, config, opt.threads);
    write_run_outputs(opt.out_dir, run_echo_json(opt, model, data), art,
                      config.warmup_steps);

    std::cout << "model " << opt.model << ": n=" << art.summary.n
              << " mean=" << fmt_short(art.summary.mean)
              << " sd=" << fmt_short(art.summary.sd)
              << " rhat=" << fmt_short(art.summary.rhat)
              << " accept=" << fmt_short(art.acceptance_rate)
              << " reseeds=" << art.reseed_count
              << " time=" << fmt_short(art.summary.runtime_seconds) << "s\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e, "run");
  }
}

int cmd_oracle(const OracleOptions& opt) {
  try {
    const ModelKind kind = parse_model_kind(opt.model);
    const PriorSpec prior = PriorSpec::parse(opt.prior);
    const Dataset data = Dataset::load(opt.data_path);

    json j{{"model", opt.model},
           {"data", {{"path", opt.data_path}, {"n", data.n()}, {"sum", data.sum()}}},
           {"prior", opt.prior}};

    if (opt.use_mh) {
      const ActiveModel model =
          build_model(kind, data, opt.fixed, opt.laplace_init);
      const MHOracle oracle = mh_oracle(kind, model, prior, data, opt);
      j["method"] = "mh";
      j["summary"] = summary_to_json(oracle.summary);
      j["acceptance_rate"] = oracle.acceptance_rate;
      if (model.fixed_mu) j["fixed"]["mu"] = *model.fixed_mu;
      if (model.fixed_eta) j["fixed"]["eta"] = *model.fixed_eta;
    } else {
      const AnalyticPosterior post = conjugate_posterior(kind, prior, data);
      j["method"] = "analytic";
      j["summary"] = analytic_summary_json(post);
      j["posterior"] = {{"family", post.family == AnalyticPosterior::Family::beta
                                       ? "beta"
                                       : "gamma"},
                        {"a", post.a},
                        {"b", post.b}};
    }

    fs::create_directories(opt.out_dir);
    write_text(fs::path(opt.out_dir) / "summary.json", j.dump(2) + "\n");
    std::cout << "oracle " << j["method"].get<std::string>() << ": mean="
              << fmt_short(j["summary"]["mean"].get<double>()) << " sd="
              << fmt_short(j["summary"]["sd"].get<double>()) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e, "oracle");
  }
}

int cmd_simulate(const SimulateOptions& opt) {
  try {
    if (opt.n < 0) throw ConfigError("n must be nonnegative");
    RngStream stream(opt.seed, 0);
    std::vector<double> values;
    if (opt.distribution == "bernoulli") {
      values = simulate_bernoulli(opt.p, static_cast<std::size_t>(opt.n),
                                  stream);
    } else if (opt.distribution == "poisson") {
      values = simulate_poisson(opt.lambda, static_cast<std::size_t>(opt.n),
                                stream);
    } else {
      throw ConfigError("simulate supports bernoulli and poisson");
    }
    if (opt.out_path.empty()) throw ConfigError("--out is required");
    if (fs::path(opt.out_path).has_parent_path()) {
      fs::create_directories(fs::path(opt.out_path).parent_path());
    }
    write_values_file(opt.out_path, values);
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e, "simulate");
  }
}

namespace {

// One single-parameter reproduce experiment: BPA + oracle + table.
void reproduce_single(const ExperimentPreset& preset, const fs::path& dir,
                      int threads, std::vector<TableRow>& rows) {
  RngStream data_stream(preset.data_seed, 0);
  std::vector<double> values =
      preset.model == "bernoulli"
          ? simulate_bernoulli(preset.sim_param,
                               static_cast<std::size_t>(preset.data_n),
                               data_stream)
          : simulate_poisson(preset.sim_param,
                             static_cast<std::size_t>(preset.data_n),
                             data_stream);
  write_values_file(dir / "data.txt", values);
  const Dataset data{std::move(values)};

  std::string prior_text = preset.prior;
  if (prior_text.empty()) {
    prior_text = "normal:" + fmt(data.mean()) + ",4";
  }
  const PriorSpec prior = PriorSpec::parse(prior_text);
  const ModelKind kind = parse_model_kind(preset.model);
  const ActiveModel model = build_model(kind, data, "", false);

  RunConfig config{preset.balls, 0.01,  preset.steps,
                   preset.warmup, preset.sigma2, preset.stuck_lag,
                   preset.run_seed, Integrator::forward_euler};
  const RunArtifacts art = run_bpa(model.spec, prior, config, threads);

  RunOptions echo;
  echo.model = preset.model;
  echo.data_path = (dir / "data.txt").string();
  echo.prior = prior_text;
  echo.balls = preset.balls;
  echo.sigma2 = preset.sigma2;
  echo.steps = preset.steps;
  echo.warmup = preset.warmup;
  echo.stuck_lag = preset.stuck_lag;
  echo.seed = preset.run_seed;
  echo.threads = threads;
  echo.integrator = "forward-euler";
  write_run_outputs(dir / "bpa", run_echo_json(echo, model, data), art,
                    preset.warmup);

  const std::string param = preset.published.front().parameter;
  rows.push_back(row_from_summary(param, "bpa", art.summary));

  fs::create_directories(dir / "oracle");
  if (prior.family == PriorSpec::Family::beta ||
      prior.family == PriorSpec::Family::jeffreys_poisson) {
    const AnalyticPosterior post = conjugate_posterior(kind, prior, data);
    json j{{"method", "analytic"},
           {"model", preset.model},
           {"prior", prior_text},
           {"summary", analytic_summary_json(post)}};
    write_text(dir / "oracle" / "summary.json", j.dump(2) + "\n");
    TableRow r{param, "analytic", post.mean(),
               std::numeric_limits<double>::quiet_NaN(), post.sd(), {},
               std::numeric_limits<double>::quiet_NaN()};
    const std::vector<double> qs =
        analytic_quantiles(post, std::span<const double>(kSummaryProbs));
    std::copy(qs.begin(), qs.end(), r.q);
    rows.push_back(r);
  } else {
    OracleOptions oopt;
    oopt.model = preset.model;
    oopt.prior = prior_text;
    oopt.seed = 1000;
    const MHOracle oracle = mh_oracle(kind, model, prior, data, oopt);
    json j{{"method", "mh"},
           {"model", preset.model},
           {"prior", prior_text},
           {"summary", summary_to_json(oracle.summary)},
           {"acceptance_rate", oracle.acceptance_rate}};
    write_text(dir / "oracle" / "summary.json", j.dump(2) + "\n");
    rows.push_back(row_from_summary(param, "mh", oracle.summary));
  }
  rows.push_back(row_from_published(preset.published.front()));
}

void reproduce_cauchy(const ExperimentPreset& preset, const fs::path& dir,
                      const std::string& data_path, int threads,
                      std::vector<TableRow>& rows) {
  if (!fs::exists(data_path)) {
    throw InvalidData("plant-height fixture not found at " + data_path +
                      " (pass --data)");
  }
  const Dataset data = Dataset::load(data_path);
  const CauchyParams mode = laplace_mode(data, default_cauchy_init(data));

  struct Coord {
    std::string model;
    std::string parameter;
    std::string prior;
    double sigma2;
    std::uint64_t seed;
    double proposal_sd;
    double mh_init;
  };
  const std::vector<Coord> coords = {
      {"cauchy-mu", "mu", "uniform:0,100", 100.0, preset.run_seed, 2.0,
       mode.mu},
      {"cauchy-eta", "eta", "uniform:0,6", 1.0, preset.run_seed + 1, 0.3,
       mode.eta},
  };

  for (std::size_t ci = 0; ci < coords.size(); ++ci) {
    const Coord& coord = coords[ci];
    const fs::path cdir = dir / coord.parameter;
    const ModelKind kind = parse_model_kind(coord.model);
    const std::string fixed_text =
        kind == ModelKind::cauchy_mu ? "eta=" + fmt(mode.eta)
                                     : "mu=" + fmt(mode.mu);
    const ActiveModel model = build_model(kind, data, fixed_text, false);
    const PriorSpec prior = PriorSpec::parse(coord.prior);

    RunConfig config{preset.balls, 0.01,  preset.steps,
                     preset.warmup, coord.sigma2, preset.stuck_lag,
                     coord.seed, Integrator::forward_euler};
    const RunArtifacts art = run_bpa(model.spec, prior, config, threads);

    RunOptions echo;
    echo.model = coord.model;
    echo.data_path = data_path;
    echo.prior = coord.prior;
    echo.balls = preset.balls;
    echo.sigma2 = coord.sigma2;
    echo.steps = preset.steps;
    echo.warmup = preset.warmup;
    echo.stuck_lag = preset.stuck_lag;
    echo.seed = coord.seed;
    echo.threads = threads;
    echo.integrator = "forward-euler";
    echo.fixed = fixed_text;
    write_run_outputs(cdir / "bpa", run_echo_json(echo, model, data), art,
                      preset.warmup);
    rows.push_back(row_from_summary(coord.parameter, "bpa", art.summary));

    OracleOptions oopt;
    oopt.model = coord.model;
    oopt.prior = coord.prior;
    oopt.seed = 1000 + 10 * ci;
    oopt.mh_proposal_sd = coord.proposal_sd;
    oopt.fixed = fixed_text;
    const MHOracle oracle = mh_oracle(kind, model, prior, data, oopt);
    fs::create_directories(cdir / "oracle");
    json j{{"method", "mh"},
           {"model", coord.model},
           {"prior", coord.prior},
           {"fixed", fixed_text},
           {"summary", summary_to_json(oracle.summary)},
           {"acceptance_rate", oracle.acceptance_rate}};
    write_text(cdir / "oracle" / "summary.json", j.dump(2) + "\n");
    rows.push_back(row_from_summary(coord.parameter, "mh", oracle.summary));
    rows.push_back(row_from_published(preset.published[ci]));
  }
}

}  // namespace

int cmd_reproduce(const ReproduceOptions& opt) {
  try {
    const ExperimentPreset& preset = experiment_preset(opt.experiment);
    const fs::path dir = fs::path(opt.out_dir) / preset.name;
    fs::create_directories(dir);

    std::vector<TableRow> rows;
    if (preset.model == "cauchy") {
      reproduce_cauchy(preset, dir, opt.cauchy_data, opt.threads, rows);
    } else {
      reproduce_single(preset, dir, opt.threads, rows);
    }

    const std::string csv = table_csv(preset.name, rows);
    const std::string text = table_text(preset.name, rows);
    write_text(dir / "comparison.csv", csv);
    write_text(dir / "comparison.txt", text);
    std::cout << text;
    return kExitOk;
  } catch (const std::exception& e) {
    return report(e, "reproduce");
  }
}

}  // namespace ballpit::tools
