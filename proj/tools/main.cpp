// Copyright (c) 2026 ballpit contributors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include "commands.hpp"
#include "experiments.hpp"

int main(int argc, char** argv) {
  using namespace ballpit::tools;

  CLI::App app{
      "ballpit — ensemble sampler for marginal posterior distributions, with "
      "analytic and Metropolis reference oracles"};
  app.require_subcommand(1);

  // ---- run ----
  // required values may come from --config, so presence is checked after the
  // file merge in cmd_run
  RunOptions run;
  CLI::App* crun = app.add_subcommand(
      "run", "Evolve a ball ensemble and write draws, summary, and density");
  crun->add_option("--config", run.config_file,
                   "flat key=value file mirroring these flags; flags win");
  crun->add_option("--model", run.model,
                   "bernoulli | poisson | cauchy-mu | cauchy-eta");
  crun->add_option("--data", run.data_path, "data file, one value per line");
  crun->add_option("--prior", run.prior,
                   "beta:a,b | uniform:lo,hi | normal:mean,var | "
                   "jeffreys-poisson:lo,hi | point:v");
  crun->add_option("--balls", run.balls, "ensemble size");
  crun->add_option("--epsilon", run.epsilon, "time increment");
  crun->add_option("--sigma2", run.sigma2, "noise strength");
  crun->add_option("--steps", run.steps, "steps per ball");
  crun->add_option("--warmup", run.warmup, "discarded leading steps");
  crun->add_option("--stuck-lag", run.stuck_lag,
                   "consecutive rejections before a reseed");
  crun->add_option("--seed", run.seed, "root seed");
  crun->add_option("--threads", run.threads,
                   "worker threads (0 = hardware default)");
  crun->add_option("--out", run.out_dir, "output directory");
  crun->add_option("--integrator", run.integrator,
                   "semi-implicit | forward-euler");
  crun->add_option("--fixed", run.fixed, "eta=<v> or mu=<v>");
  crun->add_flag("--laplace-init", run.laplace_init,
                 "freeze the inactive Cauchy coordinate at the posterior mode");

  // ---- oracle ----
  OracleOptions oracle;
  CLI::App* corc = app.add_subcommand(
      "oracle", "Write a reference posterior summary in the same schema");
  corc->add_option("--model", oracle.model, "model name")->required();
  corc->add_option("--data", oracle.data_path, "data file")->required();
  corc->add_option("--prior", oracle.prior, "prior spec")->required();
  corc->add_option("--out", oracle.out_dir, "output directory");
  corc->add_flag("--mh", oracle.use_mh,
                 "random-walk Metropolis instead of the closed form");
  corc->add_option("--mh-proposal-sd", oracle.mh_proposal_sd,
                   "proposal sd (default per model)");
  corc->add_option("--mh-steps", oracle.mh_steps, "steps per chain");
  corc->add_option("--mh-warmup", oracle.mh_warmup, "warmup per chain");
  corc->add_option("--seed", oracle.seed, "root seed");
  corc->add_option("--fixed", oracle.fixed, "eta=<v> or mu=<v>");
  corc->add_flag("--laplace-init", oracle.laplace_init,
                 "freeze the inactive Cauchy coordinate at the posterior mode");

  // ---- simulate ----
  SimulateOptions sim;
  CLI::App* csim = app.add_subcommand(
      "simulate", "Write a synthetic dataset, one value per line");
  csim->add_option("distribution", sim.distribution, "bernoulli | poisson")
      ->required();
  csim->add_option("--p", sim.p, "Bernoulli success probability");
  csim->add_option("--lambda", sim.lambda, "Poisson rate");
  csim->add_option("--n", sim.n, "number of draws")->required();
  csim->add_option("--seed", sim.seed, "seed");
  csim->add_option("--out", sim.out_path, "output file")->required();

  // ---- reproduce ----
  ReproduceOptions rep;
  CLI::App* crep = app.add_subcommand(
      "reproduce",
      "Run a named experiment end to end and write a comparison table");
  crep->add_option("experiment", rep.experiment,
                   "bernoulli-uniform | bernoulli-beta37 | poisson-jeffreys "
                   "| poisson-normal | cauchy")
      ->required();
  crep->add_option("--out", rep.out_dir, "output directory");
  crep->add_option("--data", rep.cauchy_data,
                   "plant-height fixture (cauchy experiment)");
  crep->add_option("--threads", rep.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (crun->parsed()) {
    for (const char* name :
         {"model", "data", "prior", "balls", "epsilon", "sigma2", "steps",
          "warmup", "stuck-lag", "seed", "threads", "out", "integrator",
          "fixed", "laplace-init"}) {
      if (crun->count(std::string("--") + name) > 0) {
        run.flags_given.insert(name);
      }
    }
    run.have_sigma2 =
        run.have_sigma2 || run.flags_given.count("sigma2") > 0;
    return cmd_run(run);
  }
  if (corc->parsed()) return cmd_oracle(oracle);
  if (csim->parsed()) return cmd_simulate(sim);
  if (crep->parsed()) return cmd_reproduce(rep);
  return kExitConfig;
}
