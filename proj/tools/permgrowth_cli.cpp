// Command-line front end: exact descent/peak counting, growth-rate
// construction and search, CSV/JSON emission.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "permgrowth/constructor.hpp"
#include "permgrowth/descent.hpp"
#include "permgrowth/errors.hpp"
#include "permgrowth/peak_growth.hpp"
#include "permgrowth/peaks.hpp"
#include "permgrowth/serialize.hpp"

using namespace permgrowth;
using nlohmann::json;

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct SeriesRow {
  int n;
  std::string count;
  double growth;
};

void emit_series(const std::vector<SeriesRow>& rows, const std::string& format,
                 const json& meta) {
  if (format == "csv") {
    std::cout << "n,count,growth_point\n";
    for (const auto& r : rows)
      std::cout << r.n << "," << r.count << "," << fmt_double(r.growth) << "\n";
    return;
  }
  json j = meta;
  j["schema"] = 1;
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n}, {"count", r.count}, {"growth_point", r.growth}});
  j["rows"] = std::move(arr);
  std::cout << j.dump(2) << "\n";
}

PeakSet peak_set_arg(bool have_set, const std::string& set_csv, bool have_word,
                     const std::string& word_text, int n) {
  if (have_set == have_word)
    throw std::invalid_argument("provide exactly one of --set and --word");
  if (have_set) return PeakSet::parse_csv(set_csv);
  const WordSpec spec = parse_word_spec(word_text);
  return PeakSet::from_position_set(
      word_to_set(word_prefix(spec, static_cast<std::size_t>(n > 0 ? n - 1 : 0))));
}

int run_selftest(bool deep);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact permutation counts by descent/peak word and growth-rate tools"};
  app.require_subcommand(1);

  const auto t0 = std::chrono::steady_clock::now();
  bool timing = false;
  app.add_flag("--timing", timing, "report elapsed time on stderr");

  // descent ------------------------------------------------------------
  auto* descent = app.add_subcommand("descent", "counts by descent word");
  descent->require_subcommand(1);

  std::string d_word;
  int d_n = 1;
  auto* d_count = descent->add_subcommand("count", "d_n for one n");
  d_count->add_option("--word", d_word, "word spec, e.g. \"01[001]\"")->required();
  d_count->add_option("--n", d_n, "permutation size")->required();
  d_count->callback([&] {
    std::cout << count_descent(parse_word_spec(d_word), d_n).get_str() << "\n";
  });

  std::string ds_word, ds_format = "csv";
  int ds_max = 1;
  auto* d_series = descent->add_subcommand("series", "d_1..d_n with growth points");
  d_series->add_option("--word", ds_word)->required();
  d_series->add_option("--max-n", ds_max)->required();
  d_series->add_option("--format", ds_format)->check(CLI::IsMember({"csv", "json"}));
  d_series->callback([&] {
    const WordSpec spec = parse_word_spec(ds_word);
    const DescentSeries s = descent_series(spec, ds_max);
    std::vector<SeriesRow> rows;
    for (int n = 1; n <= ds_max; ++n)
      rows.push_back({n, s.d(n).get_str(), s.growth(n)});
    emit_series(rows, ds_format, json{{"command", "descent series"}, {"word", spec.str()}});
  });

  std::string c_target, c_upper, c_format = "text";
  int c_max = 100;
  bool c_emit_word = false;
  auto* d_construct = descent->add_subcommand(
      "construct", "build a word with prescribed descent growth rate");
  d_construct->add_option("--target", c_target, "target L as an exact fraction P/Q")
      ->required();
  d_construct->add_option("--upper", c_upper, "upper target L' (dual variant)");
  d_construct->add_option("--max-n", c_max)->required();
  d_construct->add_flag("--emit-word", c_emit_word);
  d_construct->add_option("--format", c_format)->check(CLI::IsMember({"text", "json"}));
  d_construct->callback([&] {
    const Ratio low = parse_ratio(c_target);
    const ConstructorRun run = c_upper.empty()
                                   ? construct_word(low, c_max)
                                   : construct_word_dual(low, parse_ratio(c_upper), c_max);
    if (c_format == "json") {
      json j = run_to_json(run);
      if (!c_emit_word) j.erase("word");
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "target_low " << ratio_str(run.target_low) << "\n"
              << "target_high " << ratio_str(run.target_high) << "\n"
              << "K " << run.threshold_k << "\n"
              << "flips " << run.flips.size() << "\n"
              << "state_final "
              << (run.state_final == RunState::kZeros ? "zeros" : "onezeros") << "\n"
              << "growth_at_max " << fmt_double(run.growth_at(static_cast<int>(run.word.length())))
              << "\n";
    if (c_emit_word) std::cout << "word " << run.word.str() << "\n";
  });

  // peak ----------------------------------------------------------------
  auto* peak = app.add_subcommand("peak", "counts by peak set");
  peak->require_subcommand(1);

  std::string p_set, p_word, p_method = "ie";
  int p_n = 1;
  long p_cap = kDefaultSupersetCap;
  auto* p_count = peak->add_subcommand("count", "permutations with an exact peak set");
  p_count->add_option("--set", p_set, "comma-separated positions, e.g. \"2,5,9\"");
  p_count->add_option("--word", p_word, "peak word spec; 1s mark the set");
  p_count->add_option("--n", p_n)->required();
  p_count->add_option("--method", p_method)
      ->check(CLI::IsMember({"ie", "split", "closed", "brute"}));
  p_count->add_option("--superset-cap", p_cap);
  p_count->callback([&] {
    const PeakSet s = peak_set_arg(p_count->count("--set") > 0, p_set,
                                   p_count->count("--word") > 0, p_word, p_n);
    Count c;
    if (p_method == "ie") {
      c = count_peak_ie(s, p_n, p_cap);
    } else if (p_method == "split") {
      c = count_peak_split(s, p_n, p_cap);
    } else if (p_method == "brute") {
      c = brute_force_peak(s, p_n);
    } else {
      const auto closed = count_peak_closed(s, p_n);
      if (!closed)
        throw std::invalid_argument(
            "closed form applies only to S = {2} or S = {2, n-1}");
      c = *closed;
    }
    std::cout << c.get_str() << "\n";
  });

  long ps_a = 2, ps_b = 2;
  int ps_max = 10;
  std::string ps_format = "csv";
  auto* p_series = peak->add_subcommand("series", "p_n series for (01(001)^a 0^b)^w");
  p_series->add_option("--a", ps_a)->required();
  p_series->add_option("--b", ps_b)->required();
  p_series->add_option("--max-n", ps_max)->required();
  p_series->add_option("--format", ps_format)->check(CLI::IsMember({"csv", "json"}));
  p_series->callback([&] {
    std::vector<SeriesRow> rows;
    Count fact = factorial(static_cast<unsigned long>(3 * ps_a));
    for (int n = static_cast<int>(3 * ps_a) + 1; n <= ps_max; ++n) {
      fact *= n;
      const Count p = count_peak_periodic(ps_a, ps_b, n);
      rows.push_back({n, p.get_str(),
                      nth_root_float(p, fact, static_cast<unsigned long>(n))});
    }
    emit_series(rows, ps_format,
                json{{"command", "peak series"},
                     {"word", periodic_peak_word(ps_a, ps_b).str()},
                     {"a", ps_a},
                     {"b", ps_b}});
  });

  long pg_a = 2, pg_b = 2;
  auto* p_growth = peak->add_subcommand("growth", "closed-form growth rate");
  p_growth->add_option("--a", pg_a)->required();
  p_growth->add_option("--b", pg_b)->required();
  p_growth->callback([&] {
    std::cout << fmt_double(growth_rate_periodic({pg_a, pg_b})) << "\n";
  });

  double pf_target = 0.0, pf_eps = 0.01;
  long pf_cap = 10'000'000;
  auto* p_find = peak->add_subcommand("find", "periodic word approximating a target rate");
  p_find->add_option("--target", pf_target)->required();
  p_find->add_option("--epsilon", pf_eps)->required();
  p_find->add_option("--m-cap", pf_cap);
  p_find->callback([&] {
    std::cout << search_to_json(find_periodic_word(pf_target, pf_eps, pf_cap)).dump(2)
              << "\n";
  });

  // oracle ---------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration oracles");
  oracle->require_subcommand(1);

  std::string od_word;
  int od_n = 1, od_limit = kBruteForceLimit;
  auto* o_descent = oracle->add_subcommand("descent", "enumerate S_n, match descent word");
  o_descent->add_option("--word", od_word)->required();
  o_descent->add_option("--n", od_n)->required();
  o_descent->add_option("--limit", od_limit, "brute-force size guard");
  o_descent->callback([&] {
    const WordSpec spec = parse_word_spec(od_word);
    std::cout << brute_force_descent(
                     word_prefix(spec, static_cast<std::size_t>(od_n > 0 ? od_n - 1 : 0)),
                     od_n, od_limit)
                     .get_str()
              << "\n";
  });

  std::string op_set, op_word;
  int op_n = 1, op_limit = 11;
  auto* o_peak = oracle->add_subcommand("peak", "enumerate S_n, match peak set");
  o_peak->add_option("--set", op_set);
  o_peak->add_option("--word", op_word);
  o_peak->add_option("--n", op_n)->required();
  o_peak->add_option("--limit", op_limit, "brute-force size guard");
  o_peak->callback([&] {
    const PeakSet s = peak_set_arg(o_peak->count("--set") > 0, op_set,
                                   o_peak->count("--word") > 0, op_word, op_n);
    std::cout << brute_force_peak(s, op_n, op_limit).get_str() << "\n";
  });

  // selftest ---------------------------------------------------------------
  bool deep = false;
  int selftest_rc = 0;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites at desk scale");
  selftest->add_flag("--deep", deep, "larger exhaustive ranges");
  selftest->callback([&] { selftest_rc = run_selftest(deep); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::cerr << "elapsed_ms=" << ms << "\n";
  }
  return selftest_rc;
}

namespace {

int run_selftest(bool deep) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  // words: parse/format round trip represents the same infinite word
  {
    bool ok = true;
    for (const char* text : {"[01]", "010[100]", "1000101", "[1]", "0[0010]"}) {
      const WordSpec a = parse_word_spec(text);
      const WordSpec b = parse_word_spec(a.str());
      const std::size_t upto = a.prefix().length() + 2 * a.period().length();
      for (std::size_t i = 1; i <= upto; ++i)
        if (a.letter(i) != b.letter(i)) ok = false;
    }
    check("word-spec parse/format round trip", ok);
  }

  // numerics: binomial identity and zigzag cross-check
  {
    bool ok = true;
    for (unsigned long n = 0; n <= 20 && ok; ++n)
      for (unsigned long k = 0; k <= n; ++k)
        if (binomial(n, k) * factorial(k) * factorial(n - k) != factorial(n)) ok = false;
    const auto zig = zigzag_table(10);
    const WordSpec alt = parse_word_spec("[10]");
    for (int k = 1; k <= 10; ++k)
      if (count_descent(alt, k) != zig[static_cast<std::size_t>(k)]) ok = false;
    check("binomial identity and zigzag/descent cross-check", ok);
  }

  // descent DP vs brute force, and the partition of S_n
  {
    const int n_hi = deep ? 8 : 7;
    bool ok = true;
    for (int n = 1; n <= n_hi && ok; ++n) {
      Count total = 0;
      for (unsigned long mask = 0; mask < (1ul << (n - 1)); ++mask) {
        BinaryWord w;
        for (int i = 0; i < n - 1; ++i) w.push_back((mask >> i) & 1);
        const Count dp = count_descent_word(w, n);
        if (dp != brute_force_descent(w, n)) ok = false;
        total += dp;
      }
      if (total != factorial(static_cast<unsigned long>(n))) ok = false;
    }
    check("descent counts vs exhaustive brute force", ok);
  }

  // peaks: triple agreement and partition
  {
    const int n_hi = deep ? 9 : 7;
    bool ok = true;
    for (int n = 1; n <= n_hi && ok; ++n) {
      Count total = 0;
      for (const PeakSet& s : admissible_supersets(PeakSet(), n)) {
        const Count ie = count_peak_ie(s, n);
        if (ie != count_peak_split(s, n)) ok = false;
        if (ie != brute_force_peak(s, n)) ok = false;
        total += ie;
      }
      if (total != factorial(static_cast<unsigned long>(n))) ok = false;
    }
    check("peak counts: ie = split = brute force, partition of S_n", ok);
  }

  // periodic product formula vs inclusion-exclusion
  {
    bool ok = true;
    const int n_hi = deep ? 26 : 16;
    for (int n = 7; n <= n_hi && ok; ++n) {
      const WordSpec w = periodic_peak_word(2, 2);
      const PeakSet s = PeakSet::from_position_set(
          word_to_set(word_prefix(w, static_cast<std::size_t>(n - 1))));
      if (count_peak_periodic(2, 2, n) != count_peak_ie(s, n)) ok = false;
    }
    check("periodic peak product vs inclusion-exclusion", ok);
  }

  // constructor: envelope along a short run
  {
    const int n_max = deep ? 300 : 120;
    const Ratio half(1, 2);
    const ConstructorRun run = construct_word(half, n_max);
    const Ratio m(2, 1);
    bool ok = !run.flips.empty();
    for (const RSample& s : run.r_log) {
      if (s.n < 2 || !std::isfinite(s.r_low)) continue;
      const auto [f, g] = envelope(s.n, run.threshold_k, m);
      const double rn = std::exp(std::log(s.r_low) / s.n);
      if (rn < f - 1e-9 || rn > g + 1e-9) ok = false;
    }
    check("growth-rate construction stays inside the proof envelope", ok);
  }

  // peak growth: target search on a small grid
  {
    bool ok = true;
    for (double target : deep ? std::vector<double>{0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65}
                              : std::vector<double>{0.1, 0.3, 0.5}) {
      const PeakTargetSearch r = find_periodic_word(target, 0.01);
      if (std::abs(r.achieved_rate - target) >= 0.01) ok = false;
    }
    check("periodic peak-word search hits its targets", ok);
  }

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace
