#include "enumkit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enumkit/another_sol.hpp"
#include "enumkit/cnf.hpp"
#include "enumkit/errors.hpp"
#include "enumkit/explicit_set.hpp"
#include "enumkit/flashlight.hpp"
#include "enumkit/pad.hpp"
#include "enumkit/polynomial.hpp"
#include "enumkit/queue_amortize.hpp"
#include "enumkit/scripted.hpp"
#include "enumkit/shortcut.hpp"
#include "enumkit/stock.hpp"
#include "enumkit/trace.hpp"
#include "enumkit/trials.hpp"

namespace enumkit::cli {

namespace {

using nlohmann::ordered_json;

struct Rational {
  std::uint64_t num = 1, den = 1;
};

Rational parse_rational(const std::string& text) {
  Rational r;
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      r.num = std::stoull(text);
      r.den = 1;
    } else {
      r.num = std::stoull(text.substr(0, slash));
      r.den = std::stoull(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw usage_error("bad rational '" + text + "', expected p/q");
  }
  if (r.den == 0) throw usage_error("zero denominator in '" + text + "'");
  return r;
}

double parse_epsilon(const std::string& text) {
  Rational r = parse_rational(text);
  double v = static_cast<double>(r.num) / static_cast<double>(r.den);
  if (r.den == 1) {
    try {
      v = std::stod(text);  // plain decimals like 0.1
    } catch (const std::exception&) {
    }
  }
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScriptedEnumerator::Schedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open schedule file " + path);
  ScriptedEnumerator::Schedule schedule;
  std::vector<std::uint64_t> bare_times;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#') continue;
    std::uint64_t time = 0;
    try {
      time = std::stoull(first);
    } catch (const std::exception&) {
      throw parse_error("bad step count '" + first + "'", line_no);
    }
    std::string hex;
    if (ss >> hex)
      schedule.emplace_back(time, Solution::from_hex(hex));
    else
      bare_times.push_back(time);
  }
  if (!schedule.empty() && !bare_times.empty())
    throw usage_error("schedule mixes bare times and explicit payloads");
  if (schedule.empty()) return schedule_from_times(bare_times);
  return schedule;
}

struct EnumeratorSpec {
  std::string kind = "flashlight";
  std::string input;
  std::string t_text = "1";
  std::uint64_t burst_count = 16;
  std::uint64_t burst_at = 16;
  bool honest_oracle = false;

  std::unique_ptr<StepwiseEnumerator> build() const {
    if (kind == "flashlight") {
      auto oracle = make_brute_force_oracle(honest_oracle ? OracleCharging::measured
                                                          : OracleCharging::unit);
      return flashlight_allsat(parse_dimacs(read_file(input)), oracle);
    }
    if (kind == "pad") {
      Rational t = parse_rational(t_text);
      return pad_enumerator(PaddedInstance(parse_dimacs(read_file(input)), t.num, t.den));
    }
    if (kind == "burst") return make_burst_enumerator(burst_count, burst_at, burst_count);
    if (kind == "script") {
      auto schedule = load_schedule(input);
      return std::make_unique<ScriptedEnumerator>(std::move(schedule), schedule.size() + 1);
    }
    throw usage_error("unknown enumerator kind '" + kind + "'");
  }

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--enumerator", kind, "flashlight|pad|burst|script")
        ->default_val(kind);
    cmd->add_option("--input", input, "DIMACS CNF, schedule, or explicit-set file");
    cmd->add_option("--t", t_text, "padding exponent t as p/q");
    cmd->add_option("--burst-count", burst_count, "solutions in the burst profile");
    cmd->add_option("--burst-at", burst_at, "step of the burst");
    cmd->add_flag("--honest-oracle", honest_oracle,
                  "charge the extension oracle its measured work");
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
}

bool sets_equal_no_dups(const std::vector<Solution>& inner,
                        const std::vector<Solution>& outer, bool& dup_free) {
  std::vector<Solution> a = inner, b = outer;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  dup_free = std::adjacent_find(b.begin(), b.end()) == b.end();
  std::vector<Solution> au = a;
  au.erase(std::unique(au.begin(), au.end()), au.end());
  return au == b || a == b;
}

int cmd_profile(const EnumeratorSpec& spec, const std::string& out_base,
                std::uint64_t budget, const std::string& p_coeffs, std::uint64_t fit_a,
                double c_cap, std::uint64_t b_cap) {
  auto e = spec.build();
  EnumerationTrace trace = record_trace(*e, budget);
  write_text(out_base + ".trace.csv", trace_to_csv(trace));

  ordered_json summary;
  summary["instance"] = trace.instance_id;
  summary["n"] = trace.instance_size;
  summary["solutions"] = trace.size();
  summary["total_steps"] = trace.total_steps;
  summary["peak_space_bits"] = trace.peak_space_bits;
  summary["truncated"] = trace.truncated;
  summary["max_delay"] = trace.max_delay(true);
  summary["max_delay_between_outputs"] = trace.max_delay(false);
  summary["average_delay"] = trace.average_delay();
  const std::uint64_t p = Polynomial::parse(p_coeffs).eval(trace.instance_size);
  summary["gap_threshold_p"] = p;
  summary["p_gaps"] = detect_gaps(trace, p);
  if (!trace.truncated && trace.size() > 0) {
    IncrementalFit fit = check_incremental(trace, fit_a, trace.instance_size, c_cap, b_cap);
    summary["fit"] = {{"a", fit_a},
                      {"ok", fit.ok},
                      {"b", fit.b},
                      {"c", fit.c}};
    if (fit.violation_m) summary["fit"]["violation_m"] = *fit.violation_m;
  }
  write_text(out_base + ".summary.json", summary.dump(2) + "\n");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_regularize(const EnumeratorSpec& spec, const std::string& scheme,
                   const std::string& out_base, std::uint64_t a, const std::string& p_coeffs,
                   const std::string& h_coeffs, const std::string& q_coeffs) {
  Polynomial p = Polynomial::parse(p_coeffs);
  Polynomial h = Polynomial::parse(h_coeffs);
  Polynomial q = Polynomial::parse(q_coeffs);

  auto inner_probe = spec.build();
  const std::uint64_t n = inner_probe->instance_size();
  EnumerationTrace inner_trace = record_trace(*inner_probe);
  write_text(out_base + ".inner.csv", trace_to_csv(inner_trace));

  ordered_json verdicts;
  verdicts["scheme"] = scheme;
  verdicts["n"] = n;
  bool pass = true;
  EnumerationTrace outer_trace;

  if (scheme == "queue") {
    auto outer = queue_amortize(spec.build(), a, p, ViolationPolicy::flag);
    outer_trace = record_trace(*outer);
    const std::uint64_t p_n = p.eval(n);
    const std::uint64_t s_charge = charge_bits(outer->solution_bound_bits());
    std::uint64_t worst_excess = 0;
    bool delay_ok = true;
    for (std::size_t k = 1; k < outer_trace.size(); ++k) {
      long double sched = 0;
      {
        long double kp1 = 1, kp = 1;
        for (std::uint64_t i = 0; i < a + 1; ++i) {
          kp1 *= static_cast<long double>(k + 1);
          kp *= static_cast<long double>(k);
        }
        sched = (kp1 - kp) * static_cast<long double>(p_n);
      }
      const auto bound = static_cast<std::uint64_t>(sched) + s_charge + kOutputBookCharge;
      if (outer_trace.delay_before(k) > bound) {
        delay_ok = false;
        worst_excess = std::max(worst_excess, outer_trace.delay_before(k) - bound);
      }
    }
    verdicts["bound_violated_flag"] = outer->bound_violated();
    verdicts["delay_bound_ok"] = delay_ok;
    verdicts["worst_excess"] = worst_excess;
    pass = delay_ok;
  } else if (scheme == "shortcut") {
    auto outer = shortcut_regularize(spec.build(), h, p, q);
    outer_trace = record_trace(*outer);
    const std::uint64_t p_prime = p.eval(n) * h.eval(n) * kShortcutDelayFactor;
    auto gaps = detect_gaps(outer_trace, p_prime);
    verdicts["p_prime"] = p_prime;
    verdicts["residual_gaps"] = gaps.size();
    verdicts["pairs_stored"] = outer->pairs_stored_total();
    pass = gaps.empty();
  } else if (scheme == "stock") {
    auto outer = stock_regularize(spec.build(), h, p, q);
    outer_trace = record_trace(*outer);
    const std::uint64_t qh = q.eval(n) * h.eval(n);
    const std::uint64_t bound = 2 * qh * (qh + p.eval(n));
    verdicts["delay_bound"] = bound;
    verdicts["max_delay"] = outer_trace.max_delay(false);
    pass = outer_trace.max_delay(false) <= bound;
    verdicts["delay_bound_ok"] = pass;
  } else {
    throw usage_error("unknown scheme '" + scheme + "'");
  }

  bool dup_free = false;
  bool same_set = sets_equal_no_dups(inner_trace.solutions, outer_trace.solutions, dup_free);
  verdicts["set_preserved"] = same_set;
  verdicts["duplicate_free"] = dup_free;
  pass = pass && same_set && dup_free;
  verdicts["pass"] = pass;

  write_text(out_base + ".outer.csv", trace_to_csv(outer_trace));
  write_text(out_base + ".verdicts.json", verdicts.dump(2) + "\n");
  std::cout << verdicts.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_sample(const std::string& input, const std::string& out_base, double epsilon,
               std::uint64_t p_bits, std::uint64_t seed, std::uint64_t trials, bool sketch,
               bool biased, int threads) {
  TrialPlan plan;
  plan.set = ExplicitSet::load(input);
  plan.cfg.epsilon = epsilon;
  plan.cfg.seed = seed;
  plan.cfg.p_bits = p_bits;
  if (p_bits == 0) {
    std::uint64_t most = 2;
    for (const auto& e : plan.set.elements) most = std::max(most, e.size_bits());
    plan.cfg.p_bits = most;
  }
  plan.scheme = sketch ? SamplingScheme::sketch
                       : (biased ? SamplingScheme::biased : SamplingScheme::dedup);
  plan.trials = trials;
  plan.threads = threads;

  auto results = run_trials(plan);
  TrialSummary summary = summarize(results);

  ordered_json head;
  head["set"] = input;
  head["s"] = plan.set.elements.size();
  head["epsilon"] = epsilon;
  head["p_bits"] = plan.cfg.p_bits;
  head["seed"] = seed;
  head["scheme"] = sketch ? "sketch" : (biased ? "biased" : "dedup");
  std::ostringstream csv;
  csv << "# " << head.dump() << "\n";
  csv << "trial,seed,draws,draws_to_complete,distinct,emitted,covered,peak_aux_bits\n";
  for (const auto& r : results)
    csv << r.trial << ',' << r.seed << ',' << r.draws << ',' << r.draws_to_complete << ','
        << r.distinct << ',' << r.emitted << ',' << (r.covered ? 1 : 0) << ','
        << r.peak_aux_bits << "\n";
  write_text(out_base + ".coverage.csv", csv.str());

  // binomial slack around the declared failure budget
  const double n_trials = static_cast<double>(summary.trials);
  const double slack =
      n_trials > 0 ? 3.0 * std::sqrt(epsilon * (1.0 - epsilon) / n_trials) : 0.0;
  const bool coverage_ok = summary.coverage_fraction >= 1.0 - epsilon - slack;

  ordered_json js;
  js["trials"] = summary.trials;
  js["coverage_fraction"] = summary.coverage_fraction;
  js["mean_draws_to_complete"] = summary.mean_draws_to_complete;
  js["duplicate_emissions"] = summary.duplicate_emissions;
  js["max_peak_aux_bits"] = summary.max_peak_aux_bits;
  js["coverage_ok"] = coverage_ok;
  write_text(out_base + ".summary.json", js.dump(2) + "\n");
  std::cout << js.dump(2) << "\n";
  return coverage_ok ? 0 : 1;
}

int cmd_pad_bench(const std::string& input, const std::string& t_text,
                  const std::string& out_base) {
  CnfFormula f = parse_dimacs(read_file(input));
  Rational t = parse_rational(t_text);
  PaddedInstance inst(f, t.num, t.den);
  auto e = pad_enumerator(inst);
  EnumerationTrace trace = record_trace(*e);
  write_text(out_base + ".trace.csv", trace_to_csv(trace));

  std::uint64_t sat_count = 0;
  for (std::uint64_t v = 0; v < (1ULL << f.n_vars); ++v)
    if (evaluate(f, Assignment::from_value(v, f.n_vars))) ++sat_count;
  const std::uint64_t expected =
      inst.padding_count() + sat_count * (1ULL << f.n_vars);

  ordered_json verdicts;
  verdicts["instance"] = inst.id();
  verdicts["padding_count"] = inst.padding_count();
  verdicts["sat_count"] = sat_count;
  verdicts["expected_outputs"] = expected;
  verdicts["outputs"] = trace.size();
  bool pass = trace.size() == expected;
  verdicts["cardinality_ok"] = pass;
  if (t.num == 1 && trace.size() > 0) {
    const double cap = 4.0 * static_cast<double>(std::max<std::size_t>(1, f.literal_count()));
    const double c_accept = tightest_constant(trace, t.den, 0, trace.instance_size);
    verdicts["fit_exponent"] = t.den;
    verdicts["fit_c"] = c_accept;
    verdicts["fit_cap"] = cap;
    verdicts["fit_ok"] = c_accept <= cap;
    pass = pass && c_accept <= cap;
    if (t.den >= 1 && sat_count > 0) {
      const double c_reject = tightest_constant(trace, t.den - 1, 0, trace.instance_size);
      verdicts["reject_exponent_c"] = c_reject;
    }
  }
  verdicts["pass"] = pass;
  write_text(out_base + ".verdicts.json", verdicts.dump(2) + "\n");
  std::cout << verdicts.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"enumeration-delay toolkit"};
  app.require_subcommand(1);

  EnumeratorSpec spec;
  std::string out_base = "enumkit-out";
  std::uint64_t budget = UINT64_MAX;
  std::string p_coeffs = "8";
  std::string h_coeffs = "4";
  std::string q_coeffs = "4";
  std::uint64_t fit_a = 1;
  double c_cap = 64.0;
  std::uint64_t b_cap = 3;
  std::uint64_t a_exp = 0;
  std::string scheme = "queue";
  std::string epsilon_text = "1/10";
  std::uint64_t p_bits = 0;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100;
  bool sketch = false;
  bool biased = false;
  int threads = 0;

  CLI::App* profile = app.add_subcommand("profile", "record and summarize a trace");
  spec.add_flags(profile);
  profile->add_option("--out", out_base, "output base path");
  profile->add_option("--budget", budget, "charged-step budget");
  profile->add_option("--p-coeffs", p_coeffs, "gap threshold polynomial, lowest degree first");
  profile->add_option("--fit-a", fit_a, "incremental fit exponent on m");
  profile->add_option("--c-cap", c_cap, "fit constant cap");
  profile->add_option("--b-cap", b_cap, "fit n-exponent cap");

  CLI::App* regularize = app.add_subcommand("regularize", "run a delay regularizer");
  spec.add_flags(regularize);
  regularize->add_option("--scheme", scheme, "queue|shortcut|stock");
  regularize->add_option("--out", out_base, "output base path");
  regularize->add_option("--a", a_exp, "asserted exponent for the queue scheme");
  regularize->add_option("--p-coeffs", p_coeffs, "p polynomial, lowest degree first");
  regularize->add_option("--h-coeffs", h_coeffs, "h polynomial, lowest degree first");
  regularize->add_option("--q-coeffs", q_coeffs, "q polynomial, lowest degree first");

  CLI::App* sample = app.add_subcommand("sample", "seeded sampling-enumeration trials");
  sample->add_option("--input", spec.input, "explicit-set file")->required();
  sample->add_option("--out", out_base, "output base path");
  sample->add_option("--epsilon", epsilon_text, "failure budget (rational or decimal)");
  sample->add_option("--p-bits", p_bits, "declared solution-size bound (0 = derive)");
  sample->add_option("--seed", seed, "base seed");
  sample->add_option("--trials", trials, "number of trials");
  sample->add_flag("--sketch", sketch, "sketch scheme with repetitions");
  sample->add_flag("--biased", biased, "biased-generator multiplier");
  sample->add_option("--threads", threads, "trial threads (1 = serial reference)");

  CLI::App* padbench = app.add_subcommand("pad-bench", "padded-instance benchmark");
  padbench->add_option("--input", spec.input, "DIMACS CNF file")->required();
  padbench->add_option("--t", spec.t_text, "padding exponent t as p/q");
  padbench->add_option("--out", out_base, "output base path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (profile->parsed())
      return cmd_profile(spec, out_base, budget, p_coeffs, fit_a, c_cap, b_cap);
    if (regularize->parsed())
      return cmd_regularize(spec, scheme, out_base, a_exp, p_coeffs, h_coeffs, q_coeffs);
    if (sample->parsed())
      return cmd_sample(spec.input, out_base, parse_epsilon(epsilon_text), p_bits, seed,
                        trials, sketch, biased, threads);
    if (padbench->parsed()) return cmd_pad_bench(spec.input, spec.t_text, out_base);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace enumkit::cli
