#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rieszarc/io.hpp"
#include "rieszarc/scenarios.hpp"

namespace {

using namespace rieszarc;

std::string checks_to_csv(const ScenarioReport& rep) {
  std::ostringstream out;
  out << "name,pass,value,bound,tolerance,note\n";
  for (const CheckLine& c : rep.checks)
    out << c.name << "," << (c.pass ? 1 : 0) << "," << format_double(c.value)
        << "," << format_double(c.bound) << "," << format_double(c.tolerance)
        << ",\"" << c.note << "\"\n";
  return out.str();
}

void print_summary(const ScenarioReport& rep) {
  std::printf("scenario %s  (alpha=%g eps=%g seed=%llu)\n",
              rep.scenario.c_str(), rep.params.alpha, rep.params.eps,
              static_cast<unsigned long long>(rep.params.seed));
  for (const CheckLine& c : rep.checks)
    std::printf("  [%s] %-32s value=%-.12g bound=%-.12g%s%s\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.bound,
                c.note.empty() ? "" : "  -- ", c.note.c_str());
  if (rep.tail_bound > 0.0)
    std::printf("  truncation tail (normalized measure): %.6g\n",
                rep.tail_bound);
  if (rep.reduced_scale) std::printf("  NOTE: reduced scale\n");
  std::printf("%s (%.0f ms)\n", rep.all_pass() ? "ALL CHECKS PASSED"
                                               : "CHECK FAILURES PRESENT",
              rep.wall_time_ms);
}

struct CommonFlags {
  Params params;
  std::string out_path;
  std::string format = "json";
};

void add_param_flags(CLI::App* cmd, Params& p) {
  cmd->add_option("--alpha", p.alpha,
                  "Sparseness exponent in (0,1); default 0.5 (lemma6: 0.4)");
  cmd->add_option("--eps", p.eps,
                  "Removed-measure budget in (0,1/4); default 0.2");
  cmd->add_option("--beta", p.beta,
                  "Witness progression exponent in [0,alpha); default 0.25");
  cmd->add_option("--prime", p.prime,
                  "Prime p; default per scenario (lemma8: 3, lemma4: "
                  "{5,7,11,13}, uniting-blocks: {5,7,11}, otherwise 5)");
  cmd->add_option("--trunc-L", p.trunc_L,
                  "Construction truncation depth L; default per scenario "
                  "(lemma1: 64, lemma4: p*N_p, uniting-blocks: 256)");
  cmd->add_option("--seed", p.seed, "Random seed; default 0")
      ->capture_default_str();
  cmd->add_option("--gram-cap", p.gram_cap,
                  "Gram dimension cap; default 4096")
      ->capture_default_str();
  cmd->add_option("--arc-cap", p.arc_cap, "Arc count cap; default 5000000")
      ->capture_default_str();
  cmd->add_option("--m-max", p.m_max,
                  "Translation search bound; default 100000")
      ->capture_default_str();
}

int run_check(const std::string& scenario, const CommonFlags& flags) {
  const ScenarioReport rep = run_paper_check(scenario, flags.params);
  print_summary(rep);
  std::string payload;
  if (flags.format == "csv")
    payload = scenario == "lemma7" && !rep.counting.empty()
                  ? counting_to_csv(rep.counting)
                  : checks_to_csv(rep);
  else
    payload = report_to_json(rep);
  if (!flags.out_path.empty())
    write_file(flags.out_path, payload);
  else if (flags.format != "json")
    std::fputs(payload.c_str(), stdout);
  return rep.all_pass() ? 0 : 1;
}

SAlphaSpec spec_from(const Params& p, std::int64_t def_L) {
  const double alpha = p.alpha >= 0.0 ? p.alpha : 0.5;
  const double eps = p.eps >= 0.0 ? p.eps : 0.2;
  const std::int64_t L = p.trunc_L >= 0 ? p.trunc_L : def_L;
  return SAlphaSpec::with_auto_c0(alpha, eps, L);
}

int run_export(const std::string& kind, std::int64_t ell,
               const std::string& scenario, const CommonFlags& flags) {
  if (flags.out_path.empty()) throw io_error("--out is required for export");
  if (kind == "set") {
    const SAlphaSpec spec = spec_from(flags.params, 64);
    ArcSetFile f;
    f.set = build_S_alpha(spec, flags.params.arc_cap);
    f.alpha = spec.alpha;
    f.eps = spec.eps;
    f.c0 = spec.c0;
    f.L = spec.L;
    f.tail_bound = spec.tail_bound();
    write_file(flags.out_path, arcset_to_json(f));
    return 0;
  }
  if (kind == "gram") {
    const std::int64_t p = flags.params.prime >= 0 ? flags.params.prime : 5;
    require(p >= 2 && is_prime(p), "--prime must be a prime");
    const double alpha = flags.params.alpha >= 0.0 ? flags.params.alpha : 0.5;
    const std::int64_t Np = static_cast<std::int64_t>(
        std::floor(std::pow(static_cast<double>(p), 1.0 / alpha) + 1e-9));
    const SAlphaSpec spec = spec_from(flags.params, p * Np);
    const ArcSet S = build_S_alpha(spec, flags.params.arc_cap);
    const FrequencySet block = progression(0, p, Np);
    if (flags.format == "csv") {
      const GramMatrix G = gram(block, S, flags.params.gram_cap);
      write_file(flags.out_path, gram_to_csv(G));
    } else {
      const RieszBounds b = riesz_bounds(block, S, flags.params.gram_cap);
      write_file(flags.out_path, bounds_report_to_json(b, flags.params.seed));
    }
    return 0;
  }
  if (kind == "profile") {
    const SAlphaSpec spec = spec_from(flags.params, 64);
    const ArcSet S = build_S_alpha(spec, flags.params.arc_cap);
    write_file(flags.out_path, profile_to_json(nu_profile(S, ell)));
    return 0;
  }
  if (kind == "report") {
    const ScenarioReport rep = run_paper_check(scenario, flags.params);
    write_file(flags.out_path, report_to_json(rep));
    return rep.all_pass() ? 0 : 1;
  }
  throw invalid_input("unknown export kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rieszarc: exact Riesz bounds of exponential systems on unions of "
      "arcs, with scenario checks for the sparse-circle construction"};
  app.require_subcommand(1);

  CommonFlags check_flags;
  std::string scenario;
  CLI::App* check = app.add_subcommand(
      "check", "Run a named scenario and report per-check pass/fail");
  check
      ->add_option("scenario", scenario,
                   "One of: lemma1 lemma4 lemma5 lemma6 lemma7 lemma8 "
                   "corollary-pdivides theorem4 lemma9 uniting-blocks")
      ->required();
  add_param_flags(check, check_flags.params);
  check->add_option("--out", check_flags.out_path,
                    "Write the report to this path");
  check
      ->add_option("--format", check_flags.format,
                   "Report format: json (full report) or csv (lemma7: "
                   "counting table; otherwise checks table)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  CommonFlags export_flags;
  std::string kind;
  std::int64_t ell = 1;
  std::string export_scenario = "lemma9";
  CLI::App* exp = app.add_subcommand(
      "export", "Construct an object and write it in its pinned format");
  exp->add_option("kind", kind, "set | gram | profile | report")->required();
  add_param_flags(exp, export_flags.params);
  exp->add_option("--ell", ell, "Profile step (export profile); default 1")
      ->capture_default_str();
  exp->add_option("--scenario", export_scenario,
                  "Scenario (export report); default lemma9")
      ->capture_default_str();
  exp->add_option("--out", export_flags.out_path, "Output path (required)");
  exp->add_option("--format", export_flags.format,
                  "gram: csv = matrix, json = bounds report; default json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (check->parsed()) return run_check(scenario, check_flags);
    return run_export(kind, ell, export_scenario, export_flags);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const rieszarc::resource_limit& e) {
    std::fprintf(stderr, "resource cap: %s\n", e.what());
    return 3;
  } catch (const rieszarc::search_exhausted& e) {
    std::fprintf(stderr, "search exhausted: %s\n", e.what());
    return 1;
  } catch (const rieszarc::invalid_input& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const rieszarc::io_error& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
