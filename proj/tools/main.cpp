#include <atomic>
#include <csignal>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "dispatch.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for coprime specialization of polynomial values:\n"
               "delta certificates, coprime-witness construction over Z, F_p[u] and Z[u],\n"
               "gcd profiles, assumption-on-values checks and integral Hilbert scans."};
  app.require_subcommand(1);

  schinzel::cli::Request req;
  bool table = false;

  auto add_common = [&](CLI::App* cmd, bool takes_polys) {
    cmd->add_option("--ring", req.ring,
                    "coefficient ring: Z, Q, Q[u], Z[u], Z[t], Fp[u]:<p>")
        ->capture_default_str();
    cmd->add_option("--budget-scale", req.budget_scale,
                    "positive rational multiplier on all default caps (overrides "
                    "SCHINZEL_BUDGET_SCALE)");
    cmd->add_flag("--table", table, "human-readable output instead of JSON");
    cmd->add_option("--seed", req.seed, "seed for randomized checks")->capture_default_str();
    if (takes_polys) {
      cmd->add_option("polys", req.polys, "polynomial expressions")->required();
    }
  };

  CLI::App* delta = app.add_subcommand("delta", "Bezout certificate: cofactors and delta");
  add_common(delta, true);

  CLI::App* min_delta =
      app.add_subcommand("min-delta", "generator of the achievable constants at a degree bound");
  add_common(min_delta, true);
  min_delta->add_option("--degree-bound", req.degree_bound,
                        "cofactor degree bound (default: certificate bound)");

  CLI::App* av = app.add_subcommand("av-check", "assumption-on-values checker");
  add_common(av, true);
  av->add_option("--av", req.av, "1 or 2")->capture_default_str();

  CLI::App* fc = app.add_subcommand("find-coprime",
                                    "constructive coprime-value witness (ring-dispatched)");
  add_common(fc, true);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force first-in-box witness search");
  add_common(oracle, true);
  oracle->add_option("--box-lo", req.box_lo, "interval start (ring Z)")->capture_default_str();
  oracle->add_option("--box-hi", req.box_hi, "interval end (ring Z)")->capture_default_str();
  oracle->add_option("--box-degree", req.box_degree, "degree bound (polynomial rings)")
      ->capture_default_str();
  oracle->add_option("--box-height", req.box_height, "height bound (Z[u])")
      ->capture_default_str();

  CLI::App* profile = app.add_subcommand("profile", "period-delta gcd table");
  add_common(profile, true);

  CLI::App* dstar = app.add_subcommand("dstar", "value-gcd set D* and its gcd d*");
  add_common(dstar, true);

  CLI::App* density = app.add_subcommand("density", "exact proportion of good m in a window");
  add_common(density, true);
  density->add_option("--window-lo", req.window_lo, "window start")->capture_default_str();
  density->add_option("--window-hi", req.window_hi, "window end (exclusive)")->required();

  CLI::App* hp = app.add_subcommand("hilbert-progression",
                                    "primitivity arithmetic progression for P_i(t, y)");
  add_common(hp, true);

  CLI::App* hs = app.add_subcommand("hilbert-scan",
                                    "irreducible specializations along the progression");
  add_common(hs, true);
  hs->add_option("--want", req.want, "simultaneous hits to collect")->capture_default_str();
  hs->add_option("--scan-cap", req.scan_cap, "|k| bound for the scan")->capture_default_str();

  CLI::App* pscan = app.add_subcommand("polyring-scan",
                                       "irreducible specializations over Z[u] / F_p[u]");
  add_common(pscan, true);
  pscan->add_option("--want", req.want, "hits to collect")->capture_default_str();
  pscan->add_option("--box-degree", req.box_degree, "degree bound for m(u)")
      ->capture_default_str();
  pscan->add_option("--box-height", req.box_height, "height bound for m(u) (Z[u])")
      ->capture_default_str();

  CLI::App* modn = app.add_subcommand("mod-n", "values congruent to primes modulo N");
  add_common(modn, true);
  modn->add_option("--mod", req.modulus, "the modulus N")->required();
  modn->add_option("--want", req.want, "witnesses to collect")->capture_default_str();

  CLI::App* goldbach = app.add_subcommand("goldbach-mod-n", "2n = p + q modulo N");
  add_common(goldbach, false);
  goldbach->add_option("--two-n", req.two_n, "the even number 2n")->required();
  goldbach->add_option("--mod", req.modulus, "the modulus N")->required();
  goldbach->add_option("--want", req.want, "witnesses to collect")->capture_default_str();

  CLI::App* selftest = app.add_subcommand("selftest", "run the fixture corpus and built-in checks");
  add_common(selftest, false);
  selftest->add_option("--fixtures", req.fixtures_dir, "fixture directory")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  req.command = app.get_subcommands().front()->get_name();
  if (req.budget_scale.empty()) {
    if (const char* env = std::getenv("SCHINZEL_BUDGET_SCALE")) req.budget_scale = env;
  }
#ifdef SCHINZEL_DEFAULT_FIXTURES
  if (req.command == "selftest" && req.fixtures_dir.empty()) {
    req.fixtures_dir = SCHINZEL_DEFAULT_FIXTURES;
  }
#endif
  req.interrupt = &g_interrupted;
  std::signal(SIGINT, on_sigint);

  schinzel::cli::Response resp = schinzel::cli::run(req);
  if (table) {
    std::cout << schinzel::cli::render_table(resp.body);
  } else {
    std::cout << resp.body.dump(2) << "\n";
  }
  return resp.exit_code;
}
