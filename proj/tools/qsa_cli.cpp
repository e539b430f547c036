// Command-line front end: claim verification report, capacity sweep to
// CSV/JSON, entanglement thresholds, and channel inspection.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsa/qsa.hpp"

namespace {

struct SweepOptions {
  double omega_min = 0.0;
  double omega_max = 0.5;
  std::size_t steps = 101;
  std::size_t n_clones = 2;
  std::string format = "csv";
  std::string out_path;
};

int cmd_verify(std::uint64_t seed, const std::string& json_path) {
  const std::vector<qsa::ClaimResult> results = qsa::run_claim_suite(seed);
  int n_pass = 0, n_disc = 0, n_fail = 0;
  for (const qsa::ClaimResult& r : results) {
    switch (r.verdict) {
      case qsa::Verdict::pass:
        ++n_pass;
        break;
      case qsa::Verdict::discrepancy:
        ++n_disc;
        break;
      case qsa::Verdict::fail:
        ++n_fail;
        break;
    }
    std::printf("%-12s %s: %s\n", qsa::to_string(r.verdict), r.id.c_str(),
                r.detail.c_str());
  }
  std::printf("claims: %zu  pass: %d  discrepancy: %d  fail: %d\n",
              results.size(), n_pass, n_disc, n_fail);
  if (!json_path.empty()) {
    qsa::write_text_file(json_path, qsa::claims_to_json(results).dump(2) + "\n");
  }
  return qsa::suite_passed(results) ? 0 : 1;
}

int cmd_sweep(const SweepOptions& opt) {
  const std::vector<qsa::SweepRecord> records =
      qsa::sweep(opt.omega_min, opt.omega_max, opt.steps, opt.n_clones);
  std::string content;
  if (opt.format == "csv") {
    content = qsa::sweep_to_csv(records);
  } else if (opt.format == "json") {
    content = qsa::sweep_to_json(records).dump(2) + "\n";
  } else {
    throw qsa::parameter_error("sweep: format must be csv or json");
  }
  if (opt.out_path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    qsa::write_text_file(opt.out_path, content);
  }
  return 0;
}

int cmd_thresholds(std::size_t n_clones) {
  if (n_clones != 2) {
    throw qsa::parameter_error(
        "thresholds: only --n-clones 2 is supported (the output-matrix "
        "families are derived for the 1->2 cloner)");
  }
  const double remote_closed = qsa::OmegaWindow::lower();
  const double remote_found = qsa::entanglement_threshold(
      [](double w) {
        return qsa::remote_output_matrix(qsa::AuxiliaryInput(w));
      },
      0.0, 0.4);
  const double local_closed = 0.5 - std::sqrt(48.0) / 16.0;
  const double local_found = qsa::entanglement_threshold(
      [](double w) {
        return qsa::local_output_matrix(qsa::AuxiliaryInput(w), true);
      },
      0.0, 0.4);
  std::printf("remote outputs become entangled at omega >= %.9f\n",
              remote_found);
  std::printf("  closed form 1/2 - sqrt(39)/16 = %.9f   bisection residual "
              "%.3e\n",
              remote_closed, std::abs(remote_found - remote_closed));
  std::printf("local outputs become separable at omega >= %.9f\n",
              local_found);
  std::printf("  closed form 1/2 - sqrt(48)/16 = %.9f   bisection residual "
              "%.3e\n",
              local_closed, std::abs(local_found - local_closed));
  return 0;
}

void print_channel_header(const char* name, const qsa::KrausChannel& ch) {
  const qsa::CptpReport report = qsa::validate_cptp(ch);
  std::printf("channel:        %s\n", name);
  std::printf("dims:           %zu -> %zu\n", ch.in_dim(), ch.out_dim());
  std::printf("kraus ops:      %zu\n", ch.operators().size());
  std::printf("cptp residual:  %.3e (%s)\n", report.completeness_residual,
              report.is_valid ? "valid" : "INVALID");
}

int cmd_channel(const std::string& name, std::size_t d, double p,
                std::size_t n) {
  if (name == "depolarizing") {
    const qsa::DepolarizingParams params{d, p};
    print_channel_header(name.c_str(), qsa::depolarizing(params));
    std::printf("capacity:       %s\n",
                qsa::format_fixed9(qsa::depolarizing_capacity(params)).c_str());
  } else if (name == "cloner") {
    const qsa::Cloner c = qsa::cloner(n);
    print_channel_header(name.c_str(), c.channel);
    std::printf("environment:    dim %zu\n", c.isometry.out_dim_e());
    std::printf("fidelity:       %.6f\n", qsa::clone_fidelity(n));
    std::printf("zero-noise capacity: %s\n",
                qsa::format_fixed9(qsa::cloner_capacity_zero_noise(n)).c_str());
    std::printf("capacity at omega=1/2: %s\n",
                qsa::format_fixed9(qsa::cloner_mutual_info(n, 0.5).value)
                    .c_str());
  } else if (name == "cloner-complementary") {
    print_channel_header(name.c_str(), qsa::cloner_complementary(n));
  } else if (name == "joint") {
    const qsa::KrausChannel m =
        qsa::concatenate(qsa::cloner(n).channel, qsa::depolarizing({d, p}));
    print_channel_header(name.c_str(), m);
    // Classical correlation over the computational-basis ensemble.
    std::vector<qsa::Ensemble::Entry> entries;
    for (std::size_t k = 0; k < d; ++k) {
      entries.emplace_back(1.0 / static_cast<double>(d),
                           qsa::DensityMatrix::from_pure(
                               qsa::PureState::basis(d, k)));
    }
    const double chi = qsa::holevo_chi(m, qsa::Ensemble(entries)).value;
    std::printf("basis-ensemble chi: %s\n", qsa::format_fixed9(chi).c_str());
  } else {
    throw qsa::parameter_error("unknown channel: " + name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum channel algebra and capacity toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "seed for sampled checks")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "run the closed-form claim suite and report per-claim "
                "PASS/FAIL/DISCREPANCY");
  std::string json_path;
  verify->add_option("--json", json_path, "also write the report as JSON");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "tabulate the capacity curve over omega");
  SweepOptions sweep_opt;
  sweep_cmd->add_option("--omega-min", sweep_opt.omega_min, "grid start")
      ->capture_default_str();
  sweep_cmd->add_option("--omega-max", sweep_opt.omega_max, "grid end")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", sweep_opt.steps, "grid points")
      ->capture_default_str();
  sweep_cmd->add_option("--n-clones", sweep_opt.n_clones, "cloner N")
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep_opt.format, "csv or json")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_opt.out_path,
                        "output path (stdout if omitted)");

  auto* thresholds =
      app.add_subcommand("thresholds", "entanglement thresholds of the "
                                       "output-matrix families");
  std::size_t thr_n = 2;
  thresholds->add_option("--n-clones", thr_n, "cloner N (must be 2)")
      ->capture_default_str();

  auto* channel = app.add_subcommand("channel", "inspect a channel");
  std::string channel_name;
  std::size_t ch_d = 2;
  double ch_p = 1.0;
  std::size_t ch_n = 2;
  channel
      ->add_option("name", channel_name,
                   "depolarizing | cloner | cloner-complementary | joint")
      ->required();
  channel->add_option("--d", ch_d, "qudit dimension")->capture_default_str();
  channel->add_option("--p", ch_p, "mixing probability")
      ->capture_default_str();
  channel->add_option("--n", ch_n, "cloner N")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(seed, json_path);
    if (*sweep_cmd) return cmd_sweep(sweep_opt);
    if (*thresholds) return cmd_thresholds(thr_n);
    if (*channel) return cmd_channel(channel_name, ch_d, ch_p, ch_n);
  } catch (const qsa::io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const qsa::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
