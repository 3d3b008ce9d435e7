#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treeembed/asymptotics.hpp"
#include "treeembed/errors.hpp"
#include "treeembed/family.hpp"
#include "treeembed/generating.hpp"
#include "treeembed/oracle.hpp"
#include "treeembed/stopping.hpp"
#include "treeembed/tree.hpp"

namespace treeembed::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, plain };

// Scalars go to `fields`; tabular output (one object per row, same keys)
// goes to `rows`.
struct Report {
  Json fields = Json::object();
  Json rows = Json::array();
};

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Report& r, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::json: {
      Json doc = r.fields;
      if (!r.rows.empty()) doc["rows"] = r.rows;
      out << doc.dump(2) << "\n";
      return;
    }
    case Format::csv: {
      const Json& table = r.rows.empty() ? Json::array({r.fields}) : r.rows;
      bool first = true;
      for (auto it = table.front().begin(); it != table.front().end(); ++it) {
        out << (first ? "" : ",") << it.key();
        first = false;
      }
      out << "\n";
      for (const auto& row : table) {
        first = true;
        for (const auto& [k, v] : row.items()) {
          out << (first ? "" : ",") << csv_cell(v);
          first = false;
        }
        out << "\n";
      }
      return;
    }
    case Format::plain: {
      for (const auto& [k, v] : r.fields.items()) out << k << ": " << cell(v) << "\n";
      if (r.rows.empty()) return;
      bool first = true;
      for (auto it = r.rows.front().begin(); it != r.rows.front().end(); ++it) {
        out << (first ? "" : "  ") << it.key();
        first = false;
      }
      out << "\n";
      for (const auto& row : r.rows) {
        first = true;
        for (const auto& [k, v] : row.items()) {
          out << (first ? "" : "  ") << cell(v);
          first = false;
        }
        out << "\n";
      }
      return;
    }
  }
}

Report header(const std::string& command, Engine engine) {
  Report r;
  r.fields["schema_version"] = kSchemaVersion;
  r.fields["command"] = command;
  r.fields["engine"] = engine_name(engine);
  return r;
}

std::string str(const BigInt& x) { return x.get_str(); }
std::string str(Rational q) {
  q.canonicalize();
  return q.get_str();
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

// Pattern given as --pattern (tree) or --forest (';'-separated trees).
struct PatternArg {
  std::string pattern;
  std::string forest;

  void add_to(CLI::App* sub, bool allow_forest) {
    auto* p = sub->add_option("--pattern,-p", pattern, "Pattern tree, e.g. \"(()())\"");
    if (allow_forest) {
      auto* f = sub->add_option("--forest", forest, "Forest pattern, e.g. \"();(()())\"");
      p->excludes(f);
    }
  }
  bool is_forest() const { return !forest.empty(); }
  PlaneTree tree() const {
    if (pattern.empty()) throw CLI::RequiredError("--pattern");
    return parse_tree(pattern);
  }
  PlaneForest parsed_forest() const {
    PlaneForest f = parse_forest(forest);
    if (f.components.size() < 2) throw DomainError("a forest pattern needs at least two components");
    return f;
  }
  std::string text() const { return is_forest() ? format_forest(parsed_forest()) : format_tree(tree()); }
};

struct Budget {
  double subset_budget = kDefaultSubsetBudget;
  std::size_t cap = 1'000'000;
  bool force = false;

  void add_to(CLI::App* sub) {
    sub->add_option("--budget", subset_budget, "Oracle budget: C(n,m) * |family| subset checks")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", cap, "Largest family the enumerator will build")->check(CLI::PositiveNumber);
    sub->add_flag("--force", force, "Raise both limits a hundredfold");
  }
  OracleOptions options(std::ostream& err) const {
    OracleOptions o;
    o.subset_budget = subset_budget;
    o.enumeration_cap = cap;
    if (force) {
      err << "warning: --force raises the oracle budget and enumeration cap 100x; this may take very long\n";
      o.subset_budget *= 100;
      o.enumeration_cap *= 100;
    }
    return o;
  }
};

Counting parse_counting(const std::string& s) { return s == "subsets" ? Counting::subsets : Counting::orbits; }

std::string counting_name(Counting c) { return c == Counting::subsets ? "subsets" : "orbits"; }

// --- commands --------------------------------------------------------------

Report cmd_count(Family fam, const PatternArg& pat, std::size_t n, Counting counting, const OracleOptions& base) {
  OracleOptions o = base;
  o.counting = counting;
  Report r = header("count", Engine::oracle);
  r.fields["family"] = family_name(fam);
  const EmbedCount c =
      pat.is_forest() ? count_forest_in_family(pat.parsed_forest(), fam, n, o) : count_in_family(pat.tree(), fam, n, o);
  r.fields["pattern"] = pat.text();
  r.fields["n"] = n;
  r.fields["counting"] = counting_name(fam == Family::nonplane_binary ? counting : Counting::subsets);
  r.fields["all"] = str(c.all);
  r.fields["good"] = str(c.good);
  return r;
}

Report cmd_series(Family fam, const PatternArg& pat, std::size_t order) {
  Report r = header("series", Engine::series);
  r.fields["family"] = family_name(fam);
  r.fields["pattern"] = pat.text();
  r.fields["N"] = order;
  if (pat.is_forest()) {
    const PlaneForest f = pat.parsed_forest();
    IntSeries a(order);
    switch (fam) {
      case Family::plane_binary:
        a = series_forest_plane_binary(f, order);
        break;
      case Family::nonplane_binary:
        a = series_forest_nonplane(f, order);
        break;
      case Family::planted_plane:
        throw UnsupportedError("forest patterns are only defined for the binary families");
    }
    for (std::size_t n = 1; n <= order; ++n) r.rows.push_back({{"n", n}, {"all", str(a[n])}});
    return r;
  }
  const SeriesPair sp = embedding_series(pat.tree(), fam, order);
  for (std::size_t n = 1; n <= order; ++n) {
    r.rows.push_back({{"n", n}, {"all", str(sp.all[n])}, {"good", str(sp.good[n])}});
  }
  return r;
}

Report cmd_asym(Family fam, const PatternArg& pat, std::size_t n, CountKind kind) {
  Report r = header("asym", Engine::asymptotic);
  r.fields["family"] = family_name(fam);
  r.fields["pattern"] = pat.text();
  r.fields["kind"] = kind == CountKind::all ? "all" : "good";
  const AsymEstimate e = pat.is_forest() ? asym_count(pat.parsed_forest(), fam, kind) : asym_count(pat.tree(), fam, kind);
  r.fields["K"] = e.K;
  r.fields["beta"] = e.beta;
  r.fields["alpha"] = e.alpha;
  r.fields["parity"] = e.parity == Parity::odd_only ? "odd_only" : "all_n";
  r.fields["n"] = n;
  r.fields["admissible"] = e.admissible(n);
  if (e.admissible(n)) {
    r.fields["log_estimate"] = e.log_value(n);
    r.fields["estimate"] = finite_or_null(e.value(n));
  } else {
    r.fields["log_estimate"] = nullptr;
    r.fields["estimate"] = 0.0;
  }
  return r;
}

Report cmd_ratio(Family fam, const PatternArg& pat, std::size_t order, std::size_t stride) {
  const PlaneTree s = pat.tree();
  const RatioLimit lim = ratio_coefficient(s, fam);
  const SeriesPair sp = embedding_series(s, fam, order);
  Report r = header("ratio", Engine::series);
  r.fields["family"] = family_name(fam);
  r.fields["pattern"] = format_tree(s);
  r.fields["k"] = str(lim.k);
  r.fields["one_over_n"] = lim.one_over_n;
  r.fields["limit"] = lim.one_over_n ? Json(1.0) : Json(lim.value);
  r.fields["scaled_by"] = lim.one_over_n ? "n" : "sqrt(n)";
  for (std::size_t n = 1; n <= order; n += stride) {
    if (sgn(sp.all[n]) == 0) continue;
    Rational q(sp.good[n], sp.all[n]);
    q.canonicalize();
    const double scale = lim.one_over_n ? static_cast<double>(n) : std::sqrt(static_cast<double>(n));
    r.rows.push_back({{"n", n}, {"good", str(sp.good[n])}, {"all", str(sp.all[n])}, {"g_over_a", str(q)},
                      {"scaled", scale * q.get_d()}});
  }
  return r;
}

Json limit_json(const RatioLimit& l) { return l.one_over_n ? Json(nullptr) : Json(l.value); }

Report cmd_compare(Family fam, const std::string& a, const std::string& b) {
  const PlaneTree s1 = parse_tree(a), s2 = parse_tree(b);
  const PatternComparison c = compare_patterns(s1, s2, fam);
  Report r = header("compare", Engine::asymptotic);
  r.fields["family"] = family_name(fam);
  r.fields["s1"] = format_tree(s1);
  r.fields["s2"] = format_tree(s2);
  r.fields["comparable"] = c.comparable;
  r.fields["k1"] = str(c.limit1.k);
  r.fields["k2"] = str(c.limit2.k);
  r.fields["limit1"] = limit_json(c.limit1);
  r.fields["limit2"] = limit_json(c.limit2);
  r.fields["ordered"] = c.ordered;
  r.fields["verdict"] = !c.comparable ? "incomparable" : c.ordered ? "ordered" : "violated";
  return r;
}

Report cmd_constants(int digits) {
  const NonplaneConstants c = solve_nonplane_constants(digits);
  Report r = header("constants", Engine::asymptotic);
  r.fields["precision"] = digits;
  r.fields["rho"] = c.rho;
  r.fields["b"] = c.b;
  r.fields["sigma"] = c.sigma;
  r.fields["a"] = c.a_const;
  r.fields["residual_f"] = c.residual_f;
  r.fields["residual_fv"] = c.residual_fv;
  r.fields["iterations"] = c.iterations;
  return r;
}

Report cmd_simulate(Family fam, const PatternArg& pat, std::size_t n, std::uint64_t trials, std::uint64_t seed,
                    unsigned threads, const OracleOptions& o) {
  const PlaneTree s = pat.tree();
  const SimulationResult sim = simulate_best_choice(fam, n, s, trials, seed, threads, o.enumeration_cap);
  std::optional<WinProbability> exact;
  try {
    exact = best_choice_win_prob(s, fam, n, Counting::subsets, o);
  } catch (const ResourceError&) {
  } catch (const DomainError&) {
  }
  Report r = header("simulate", exact ? exact->engine : Engine::oracle);
  r.fields["method"] = "monte-carlo";
  r.fields["family"] = family_name(fam);
  r.fields["pattern"] = format_tree(s);
  r.fields["n"] = n;
  r.fields["seed"] = seed;
  r.fields["generator"] = "mt19937_64";
  r.fields["trials"] = sim.trials;
  r.fields["hits"] = sim.hits;
  r.fields["successes"] = sim.successes;
  r.fields["inconclusive"] = sim.inconclusive;
  r.fields["estimate"] = sim.inconclusive ? Json(nullptr) : Json(sim.estimate);
  r.fields["std_error"] = sim.inconclusive ? Json(nullptr) : Json(sim.std_error);
  if (exact) {
    r.fields["exact"] = str(exact->p);
    r.fields["exact_value"] = exact->p.get_d();
    if (!sim.inconclusive && sim.std_error > 0) {
      r.fields["z"] = (sim.estimate - exact->p.get_d()) / sim.std_error;
    }
  }
  return r;
}

// Oracle against series for every plane pattern up to max_size nodes.
Report cmd_selfcheck(std::size_t max_size, bool& ok) {
  Report r = header("selfcheck", Engine::oracle);
  r.fields["reference"] = "oracle";
  r.fields["checked"] = "series";
  std::size_t cases = 0, failures = 0;
  struct Range {
    Family fam;
    std::size_t n_max;
  };
  for (const Range rg : {Range{Family::plane_binary, 13}, Range{Family::nonplane_binary, 13},
                         Range{Family::planted_plane, 9}}) {
    for (std::size_t m = 1; m <= max_size; ++m) {
      for (const auto& s : enumerate_family(Family::planted_plane, m)) {
        if (!series_supported(s, rg.fam)) continue;
        const SeriesPair sp = embedding_series(s, rg.fam, rg.n_max);
        std::size_t bad_n = 0;
        for (std::size_t n = 1; n <= rg.n_max && bad_n == 0; ++n) {
          const EmbedCount c = count_in_family(s, rg.fam, n);
          if (c.all != sp.all[n] || c.good != sp.good[n]) bad_n = n;
        }
        ++cases;
        if (bad_n) ++failures;
        r.rows.push_back({{"family", family_name(rg.fam)},
                          {"pattern", format_tree(s)},
                          {"n_max", rg.n_max},
                          {"status", bad_n ? "mismatch at n=" + std::to_string(bad_n) : "ok"}});
      }
    }
  }
  r.fields["cases"] = cases;
  r.fields["failures"] = failures;
  ok = failures == 0;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact, asymptotic and brute-force counts of tree pattern embeddings", "treeembed"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "treeembed 0.1.0");

  std::string format = "json";
  app.add_option("--format", format, "Output format (env TREEEMBED_FORMAT)")
      ->envname("TREEEMBED_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();

  const std::vector<std::string> families{"plane-binary", "nonplane-binary", "planted-plane", "plane_binary",
                                          "nonplane_binary", "planted_plane"};
  std::string family;
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family,-f", family, "plane-binary | nonplane-binary | planted-plane")
        ->required()
        ->check(CLI::IsMember(families));
  };

  PatternArg pat;
  Budget budget;
  std::size_t n = 0, order = 0, stride = 100;
  std::string counting = "orbits", kind = "all", s1, s2;
  int digits = 25;
  std::uint64_t trials = 100000, seed = 1;
  unsigned threads = 1;
  std::size_t max_size = 4;

  auto* count = app.add_subcommand("count", "Oracle counts (all, good) at one size");
  add_family(count);
  pat.add_to(count, true);
  count->add_option("--n,-n", n, "Host size")->required()->check(CLI::PositiveNumber);
  count->add_option("--counting", counting, "Non-plane hosts: orbits (default) or subsets")
      ->check(CLI::IsMember({"orbits", "subsets"}));
  budget.add_to(count);

  auto* series = app.add_subcommand("series", "Exact series coefficients for n = 1..N");
  add_family(series);
  pat.add_to(series, true);
  series->add_option("--N,-N", order, "Truncation order")->required()->check(CLI::Range(1, 20000));

  auto* asym = app.add_subcommand("asym", "Leading asymptotics K beta^n n^alpha");
  add_family(asym);
  pat.add_to(asym, true);
  asym->add_option("--n,-n", n, "Evaluate at this size")->required()->check(CLI::PositiveNumber);
  asym->add_option("--kind", kind, "all or good")->check(CLI::IsMember({"all", "good"}));

  auto* ratio = app.add_subcommand("ratio", "Exact sqrt(n) g/a table and its limit");
  add_family(ratio);
  pat.add_to(ratio, false);
  order = 1001;
  ratio->add_option("--N,-N", order, "Largest n")->check(CLI::Range(1, 20000))->capture_default_str();
  ratio->add_option("--stride", stride, "Row spacing")->check(CLI::PositiveNumber)->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Monotonicity verdict for s1 embedded in s2");
  add_family(compare);
  compare->add_option("--s1", s1, "Smaller pattern")->required();
  compare->add_option("--s2", s2, "Larger pattern")->required();

  auto* constants = app.add_subcommand("constants", "Non-plane singular constants rho, b, sigma, a");
  constants->add_option("--precision", digits, "Digits, at most 30")->check(CLI::Range(1, 30));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo for the best-choice win probability");
  add_family(simulate);
  pat.add_to(simulate, false);
  simulate->add_option("--n,-n", n, "Host size")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--seed", seed, "Seed")->capture_default_str();
  simulate->add_option("--threads", threads, "Worker threads (result does not depend on it)")
      ->check(CLI::Range(1u, 256u));
  budget.add_to(simulate);

  auto* selfcheck = app.add_subcommand("selfcheck", "Oracle against series on all small patterns");
  selfcheck->add_option("--max-size", max_size, "Largest pattern size")->check(CLI::Range(1, 5))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Format fmt = format == "csv" ? Format::csv : format == "plain" ? Format::plain : Format::json;
  try {
    Report report;
    int status = kOk;
    auto fam = [&] { return parse_family(family); };
    if (app.got_subcommand(count)) {
      if (!pat.is_forest() && pat.pattern.empty()) throw CLI::RequiredError("--pattern or --forest");
      report = cmd_count(fam(), pat, n, parse_counting(counting), budget.options(err));
    } else if (app.got_subcommand(series)) {
      if (!pat.is_forest() && pat.pattern.empty()) throw CLI::RequiredError("--pattern or --forest");
      report = cmd_series(fam(), pat, order);
    } else if (app.got_subcommand(asym)) {
      if (!pat.is_forest() && pat.pattern.empty()) throw CLI::RequiredError("--pattern or --forest");
      report = cmd_asym(fam(), pat, n, kind == "good" ? CountKind::good : CountKind::all);
    } else if (app.got_subcommand(ratio)) {
      report = cmd_ratio(fam(), pat, order, stride);
    } else if (app.got_subcommand(compare)) {
      report = cmd_compare(fam(), s1, s2);
    } else if (app.got_subcommand(constants)) {
      report = cmd_constants(digits);
    } else if (app.got_subcommand(simulate)) {
      report = cmd_simulate(fam(), pat, n, trials, seed, threads, budget.options(err));
    } else if (app.got_subcommand(selfcheck)) {
      bool ok = false;
      report = cmd_selfcheck(max_size, ok);
      if (!ok) status = kCheckFailed;
    }
    emit(report, fmt, out);
    return status;
  } catch (const CLI::ParseError& e) {
    err << "error: missing " << e.what() << "\n";
    return kUsage;
  } catch (const treeembed::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace treeembed::cli
