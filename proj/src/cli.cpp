#include "hurwitz/cli.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/double_recursion.hpp"
#include "hurwitz/potential.hpp"
#include "hurwitz/quantum_curve.hpp"
#include "hurwitz/quasimodular.hpp"
#include "hurwitz/spectral_recursion.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

namespace hurwitz {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Limits {
  int oracle_max_degree = 6;
  int max_degree = 16;  // character route
  int max_qmax = 16;
  int tropical_max_degree = 8;
  int tropical_max_genus = 4;
  int toprec_max_euler = 4;
};

struct Globals {
  std::string format;  // empty: per-command default
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
  Limits limits;

  OracleOptions oracle() const { return {limits.oracle_max_degree, jobs}; }
  TropicalBounds tropical() const { return {limits.tropical_max_degree, limits.tropical_max_genus}; }
};

struct SpecFlags {
  int base_genus = 0;
  std::optional<int> source_genus;
  std::string profiles;
  int k = 0, l = 0, m = 0;

  void add(CLI::App* sub, bool source_required) {
    sub->add_option("--base-genus", base_genus, "genus of the base surface")->required();
    auto* sg = sub->add_option("--source-genus", source_genus, "genus of the covering surface");
    if (source_required) sg->required();
    sub->add_option("--profiles", profiles, "fixed branch profiles, e.g. \"3;2,2\"");
    sub->add_option("--k", k, "free simple branch points");
    sub->add_option("--l", l, "weakly monotone simple branch points");
    sub->add_option("--m", m, "strictly monotone simple branch points");
  }

  PotentialKey key() const {
    if (k < 0 || l < 0 || m < 0) throw DomainError("k, l, m must be nonnegative");
    PotentialKey key{k, l, m, {}};
    for (const auto& p : parse_profiles(profiles))
      if (!p.without_ones().empty()) key.profiles.push_back(p.without_ones());
    return key.canonical();
  }
};

std::string json_string(const Rational& q) { return to_string(q); }

Json series_doc(const QSeries& s) {
  Json coeffs = Json::array();
  for (int e = 0; e <= s.high(); ++e) coeffs.push_back(json_string(s[e]));
  return Json{{"coefficients", coeffs}};
}

void check_degree_limit(int d, int limit, const char* what) {
  if (d > limit)
    throw ResourceError(std::string(what) + " " + std::to_string(d) + " above the configured limit " +
                        std::to_string(limit));
}

// --- compute ---------------------------------------------------------------

struct ComputeCmd {
  SpecFlags spec;
  int degree = 1;
  bool connected = false, labeled = false;
  std::string method = "characters";

  void add(CLI::App* sub) {
    spec.add(sub, true);
    sub->add_option("--degree", degree, "degree of the cover")->required();
    sub->add_flag("--connected", connected, "count connected covers only");
    sub->add_flag("--labeled", labeled, "label the preimages of the fixed branch points");
    sub->add_option("--method", method)->check(CLI::IsMember({"characters", "oracle"}));
  }

  Json run(const Globals& g) const {
    HurwitzSpec s;
    s.base_genus = spec.base_genus;
    s.source_genus = *spec.source_genus;
    s.degree = degree;
    s.profiles = parse_profiles(spec.profiles);
    s.k = spec.k;
    s.l = spec.l;
    s.m = spec.m;
    s.connected = connected;
    s.labeled = labeled;
    s.validate();
    Rational value;
    if (method == "oracle") {
      check_degree_limit(degree, g.limits.oracle_max_degree, "oracle degree");
      value = count_triply_mixed(s, g.oracle());
    } else {
      check_degree_limit(degree, g.limits.max_degree, "degree");
      if (!connected) {
        value = hurwitz_by_characters(s);
      } else {
        value = connected_hurwitz_series(s.base_genus, spec.key(), degree)[degree];
        if (labeled)
          for (const auto& mu : s.profiles) value *= aut_count(mu.padded(degree));
      }
    }
    return Json{{"value", json_string(value)}};
  }
};

// --- qseries / fit ------------------------------------------------------------

struct SeriesCmd {
  SpecFlags spec;
  int qmax = 8;
  bool disconnected = false;
  std::string method = "characters";

  void add(CLI::App* sub, bool qmax_required) {
    spec.add(sub, false);
    auto* q = sub->add_option("--qmax", qmax, "highest power of q");
    if (qmax_required) q->required();
    sub->add_flag("--disconnected", disconnected, "series of possibly disconnected covers");
    sub->add_option("--method", method)->check(CLI::IsMember({"characters", "oracle", "assembly"}));
  }

  // Throws unless the spec and limits allow the series.
  PotentialKey validated_key(const Globals& g) const {
    PotentialKey key = spec.key();
    if (qmax < 0) throw DomainError("qmax must be nonnegative");
    check_degree_limit(qmax, g.limits.max_qmax, "qmax");
    if (spec.base_genus < 0) throw DomainError("base genus must be nonnegative");
    if (method == "oracle") check_degree_limit(qmax, g.limits.oracle_max_degree, "oracle degree");
    if (method == "characters") check_degree_limit(qmax, g.limits.max_degree, "degree");
    if (method == "assembly") {
      if (spec.base_genus < 1) throw DomainError("assembly needs base genus >= 1");
      if (key.k != 0 || (key.l != 0 && key.m != 0))
        throw DomainError("assembly handles only weakly or only strictly monotone branch points");
      if (key.profiles.size() > 1) throw DomainError("assembly handles at most one fixed profile");
      check_degree_limit(qmax, g.limits.oracle_max_degree, "oracle degree");
    }
    if (spec.source_genus) {
      // 2g' - 2 = d(2g - 2) + b + sum(|mu| - len(mu)) must hold at every degree
      int ramification = key.branch_points();
      for (const auto& p : key.profiles) ramification += p.size() - p.length();
      if (spec.base_genus != 1)
        throw DomainError("the source genus varies with the degree unless the base genus is 1");
      if (2 * *spec.source_genus - 2 != ramification)
        throw DomainError("source genus " + std::to_string(*spec.source_genus) +
                          " is inconsistent with the branch data");
    }
    return key;
  }

  QSeries compute(const PotentialKey& key, const Globals& g) const {
    if (method == "assembly") {
      const Variant v = key.m > 0 ? Variant::strict : Variant::monotone;
      const int b = key.branch_points();
      const Partition mu = key.profiles.empty() ? Partition() : key.profiles[0];
      if (!disconnected) return base_g_connected_series(v, spec.base_genus, b, mu, qmax);
      return QSeries::from_function(0, qmax, [&](int d) { return base_g_assembly(v, spec.base_genus, b, mu, d); });
    }
    const Route route = method == "oracle" ? Route::oracle : Route::characters;
    if (!disconnected) return connected_hurwitz_series(spec.base_genus, key, qmax, route, g.oracle());
    return disconnected_family(spec.base_genus, key, qmax, route, g.oracle()).at(key);
  }
};

struct QSeriesCmd {
  SeriesCmd series;
  void add(CLI::App* sub) { series.add(sub, true); }
  Json run(const Globals& g) const { return series_doc(series.compute(series.validated_key(g), g)); }
};

struct FitCmd {
  SeriesCmd series;
  int weight = 0;
  int margin = 5;
  std::string coeffs;

  void add(CLI::App* sub) {
    sub->add_option("--weight", weight, "mixed weight bound")->required();
    sub->add_option("--margin", margin, "coefficients beyond the basis dimension");
    sub->add_option("--coeffs", coeffs, "series coefficients q^0,q^1,... instead of a spec");
    // spec flags become optional when --coeffs is given
    series.spec.add(sub, false);
    sub->get_option("--base-genus")->required(false);
    sub->add_option("--qmax", series.qmax, "highest power of q used");
    sub->add_flag("--disconnected", series.disconnected, "series of possibly disconnected covers");
    sub->add_option("--method", series.method)->check(CLI::IsMember({"characters", "oracle", "assembly"}));
  }

  Json run(const Globals& g, bool qmax_given, bool base_given) const {
    if (weight < 0 || weight % 2) throw DomainError("weight bound must be even and nonnegative");
    if (margin < 0) throw DomainError("margin must be nonnegative");
    QSeries s;
    if (!coeffs.empty()) {
      std::vector<Rational> cs;
      std::stringstream in(coeffs);
      for (std::string item; std::getline(in, item, ',');) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        cs.push_back(parse_rational(item));
      }
      s = QSeries("q", 0, cs);
    } else {
      if (!base_given) throw DomainError("fit needs --coeffs or --base-genus");
      SeriesCmd sc = series;
      if (!qmax_given) sc.qmax = static_cast<int>(QuasimodularPoly::basis(weight).size()) + margin - 1;
      s = sc.compute(sc.validated_key(g), g);
    }
    FitResult fit = fit_quasimodular(s, weight, margin);
    Json doc{{"ok", fit.ok}};
    if (fit.ok) {
      doc["polynomial"] = Json::parse(fit.poly.to_json());
      doc["expression"] = fit.poly.str();
    } else {
      doc["residual_index"] = fit.residual_index ? Json(*fit.residual_index) : Json(nullptr);
    }
    return doc;
  }
};

// --- toprec ------------------------------------------------------------------

struct ToprecCmd {
  int g = 0, n = 1;
  std::string mu;

  void add(CLI::App* sub) {
    sub->add_option("--g", g, "genus")->required();
    sub->add_option("--n", n, "number of points")->required();
    sub->add_option("--mu", mu, "one part per point, e.g. \"2,1\"")->required();
  }

  Json run(const Globals& gl) const {
    const Composition parts = parse_composition(mu);
    if (g < 0 || n < 1) throw DomainError("need g >= 0 and n >= 1");
    if (static_cast<int>(parts.size()) != n) throw DomainError("mu must have exactly n parts");
    check_degree_limit(2 * g - 2 + n, gl.limits.toprec_max_euler, "2g-2+n");
    int size = 0;
    for (int x : parts) size += x;
    const MultiDifferential omega = 2 * g - 2 + n <= 0 ? initial_omega(g, n) : ceo_omega(g, n);
    Json oracle = nullptr;
    if (size <= gl.limits.oracle_max_degree) {
      Integer count =
          count_monotone_of_fixed_target(Partition::from_unsorted(parts), 2 * g - 2 + n + size, false, gl.oracle());
      oracle = json_string((n + size) % 2 == 0 ? Rational(count) : Rational(-count));
    }
    return Json{{"C", json_string(extract_C(omega, parts))},
                {"checks", {{"cut_and_join", json_string(cut_and_join_C(g, parts))}, {"oracle", oracle}}}};
  }
};

// --- double ------------------------------------------------------------------

struct DoubleCmd {
  std::string variant, mu, nu, method = "recursion";
  int genus = 0;
  bool disconnected = false;

  void add(CLI::App* sub) {
    sub->add_option("--variant", variant)->required()->check(CLI::IsMember({"monotone", "strict"}));
    sub->add_option("--mu", mu, "profile over 0")->required();
    sub->add_option("--nu", nu, "profile over infinity")->required();
    sub->add_option("--genus", genus, "source genus")->required();
    sub->add_flag("--disconnected", disconnected, "allow disconnected covers");
    sub->add_option("--method", method)->check(CLI::IsMember({"recursion", "oracle", "tropical"}));
  }

  Json run(const Globals& g) const {
    const Variant v = parse_variant(variant);
    const Partition a = parse_partition(mu), b = parse_partition(nu);
    if (a.empty() || a.size() != b.size()) throw DomainError("mu and nu must be nonempty of the same size");
    const int branch = 2 * genus - 2 + a.length() + b.length();
    if (branch < 0 || (!disconnected && genus < 0)) throw DomainError("no covers with this genus");
    const bool connected = !disconnected;
    Rational value;
    if (method == "oracle") {
      check_degree_limit(a.size(), g.limits.oracle_max_degree, "oracle degree");
      value = oracle_double_hurwitz(v, genus, a, b, connected, g.oracle());
    } else if (method == "tropical") {
      value = tropical_double_sum(v, genus, a, b, connected, g.tropical());
    } else {
      check_degree_limit(a.size(), g.limits.max_degree, "degree");
      value = connected ? double_hurwitz(v, genus, a, b) : disconnected_double_hurwitz(v, branch, a, b);
    }
    return Json{{"value", json_string(value)}};
  }
};

// --- tropical ----------------------------------------------------------------

Json cover_doc(const TropicalCover& c, Variant v) {
  Json edges = Json::array();
  for (const auto& e : c.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"winding", e.winding}, {"weight", e.weight}});
  return Json{{"genera", c.genera},
              {"edges", edges},
              {"automorphisms", to_string(c.automorphisms)},
              {"multiplicity", json_string(cover_multiplicity(c, v))}};
}

struct TropicalCmd {
  std::string variant = "monotone", mu, nu;
  int genus = 2, degree = 1;
  bool list = false, disconnected = false;

  void add(CLI::App* sub) {
    sub->add_option("--variant", variant)->check(CLI::IsMember({"monotone", "strict"}));
    sub->add_option("--genus", genus, "source genus")->required();
    sub->add_option("--degree", degree, "degree over the circle");
    sub->add_flag("--list", list, "emit every cover");
    sub->add_option("--mu", mu, "left ends: count covers of the line instead");
    sub->add_option("--nu", nu, "right ends");
    sub->add_flag("--disconnected", disconnected, "line covers may be disconnected");
  }

  Json run(const Globals& g, bool line) const {
    const Variant v = parse_variant(variant);
    const TropicalBounds bounds = g.tropical();
    if (line) {
      if (list) throw DomainError("--list is only available for covers of the circle");
      const Partition a = parse_partition(mu), b = parse_partition(nu);
      if (a.empty() || a.size() != b.size()) throw DomainError("mu and nu must be nonempty of the same size");
      return Json{{"total", json_string(tropical_double_sum(v, genus, a, b, !disconnected, bounds))}};
    }
    if (!list) return Json{{"total", json_string(tropical_elliptic_sum(v, genus, degree, bounds))}};
    Json covers = Json::array();
    Rational total = 0;
    for (const auto& c : enumerate_elliptic_covers(genus, degree, bounds)) {
      covers.push_back(cover_doc(c, v));
      total += cover_multiplicity(c, v);
    }
    return Json{{"covers", covers}, {"total", json_string(total)}};
  }
};

// --- qc ----------------------------------------------------------------------

struct QcCmd {
  std::string variant;
  int genus = 0, dmax = 8, bmax = 8;

  void add(CLI::App* sub) {
    sub->add_option("--variant", variant)->required()->check(CLI::IsMember({"monotone", "strict"}));
    sub->add_option("--genus", genus, "base genus")->required();
    sub->add_option("--dmax", dmax, "highest degree");
    sub->add_option("--bmax", bmax, "highest number of branch points");
  }

  Json run(const Globals& g) const {
    if (genus < 0 || dmax < 0 || bmax < 0) throw DomainError("genus, dmax and bmax must be nonnegative");
    check_degree_limit(dmax, g.limits.max_degree, "dmax");
    const Variant v = parse_variant(variant);
    CurveCheck c = verify_quantum_curve(v, genus, dmax, bmax);
    return Json{{"max_abs", json_string(c.max_abs)},
                {"checked_cells", c.checked_cells},
                {"operator", QuantumOperator::for_variant(v, genus).str()}};
  }
};

// --- verify ------------------------------------------------------------------

struct VerifyCmd {
  std::string suite;
  SuiteOptions opts;

  void add(CLI::App* sub) {
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    sub->add_option("--suite", suite)->required()->check(CLI::IsMember(names));
    sub->add_option("--dmax", opts.dmax, "highest degree");
    sub->add_option("--bmax", opts.bmax, "highest number of branch points");
    sub->add_option("--euler-max", opts.euler_max, "highest 2g-2+n for the toprec suite");
  }

  std::vector<SuiteReport> run(const Globals& g) {
    opts.oracle = g.oracle();
    if (opts.euler_max > g.limits.toprec_max_euler)
      throw ResourceError("euler-max above the configured limit " + std::to_string(g.limits.toprec_max_euler));
    std::vector<SuiteReport> out;
    for (const auto& name : suite == "all" ? suite_names() : std::vector<std::string>{suite})
      out.push_back(run_suite(name, opts));
    return out;
  }
};

Json report_doc(const SuiteReport& r) {
  Json ce = nullptr;
  if (r.first_failure)
    ce = Json{{"inputs", r.first_failure->inputs},
              {"expected", r.first_failure->expected},
              {"actual", r.first_failure->actual}};
  return Json{{"suite", r.suite}, {"checked", r.checked}, {"failures", r.failures}, {"counterexample", ce}};
}

// --- cache -------------------------------------------------------------------

std::vector<std::pair<int, fs::path>> cached_tables(const fs::path& dir) {
  static const std::regex name(R"(characters_d(\d+)\.json)");
  std::vector<std::pair<int, fs::path>> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::smatch m;
    const std::string file = entry.path().filename().string();
    if (std::regex_match(file, m, name)) out.emplace_back(std::stoi(m[1]), entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- output ------------------------------------------------------------------

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) {
      out.emplace_back(prefix, j.dump());
      return;
    }
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      std::string key = j.is_object() ? it.key() : std::to_string(i);
      flatten(*it, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out.emplace_back(prefix, scalar_text(j));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump() + "\n";
  std::ostringstream os;
  if (doc.contains("coefficients")) {
    const auto& cs = doc["coefficients"];
    if (format == "csv") {
      os << "degree,coefficient\n";
      for (std::size_t d = 0; d < cs.size(); ++d) os << d << "," << cs[d].get<std::string>() << "\n";
    } else {
      for (std::size_t d = 0; d < cs.size(); ++d) os << (d ? " " : "") << cs[d].get<std::string>();
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << csv_field(k) << "," << csv_field(v) << "\n";
  } else if (rows.size() == 1) {
    os << rows[0].second << "\n";
  } else {
    for (const auto& [k, v] : rows) os << k << ": " << v << "\n";
  }
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact triply mixed Hurwitz numbers", "hurwitz"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--jobs", g.jobs, "worker threads for brute-force enumeration")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "character table cache")->envname("HURWITZ_CACHE_DIR");
  app.add_option("--oracle-max-degree", g.limits.oracle_max_degree)->envname("HURWITZ_ORACLE_MAX_DEGREE");
  app.add_option("--max-degree", g.limits.max_degree)->envname("HURWITZ_MAX_DEGREE");
  app.add_option("--max-qmax", g.limits.max_qmax)->envname("HURWITZ_MAX_QMAX");
  app.add_option("--tropical-max-degree", g.limits.tropical_max_degree)->envname("HURWITZ_TROPICAL_MAX_DEGREE");
  app.add_option("--tropical-max-genus", g.limits.tropical_max_genus)->envname("HURWITZ_TROPICAL_MAX_GENUS");
  app.add_option("--toprec-max-euler", g.limits.toprec_max_euler)->envname("HURWITZ_TOPREC_MAX_EULER");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  ComputeCmd compute;
  auto* compute_app = sub("compute", "one Hurwitz number");
  compute.add(compute_app);
  QSeriesCmd qseries;
  auto* qseries_app = sub("qseries", "generating series in q");
  qseries.add(qseries_app);
  FitCmd fit;
  auto* fit_app = sub("fit", "fit a series by a quasimodular form");
  fit.add(fit_app);
  ToprecCmd toprec;
  auto* toprec_app = sub("toprec", "coefficient of a topological recursion differential");
  toprec.add(toprec_app);
  DoubleCmd dbl;
  auto* double_app = sub("double", "double Hurwitz number over the sphere");
  dbl.add(double_app);
  TropicalCmd trop;
  auto* tropical_app = sub("tropical", "tropical cover counts");
  trop.add(tropical_app);
  QcCmd qc;
  auto* qc_app = sub("qc", "quantum curve checks");
  qc_app->require_subcommand(1);
  auto* qc_verify = qc_app->add_subcommand("verify", "residual of the quantum curve on a window");
  qc_verify->fallthrough();
  qc.add(qc_verify);
  VerifyCmd verify;
  auto* verify_app = sub("verify", "compare independent routes");
  verify.add(verify_app);
  auto* cache_app = sub("cache", "character table cache");
  cache_app->require_subcommand(1);
  int cache_dmax = 8;
  auto* cache_build = cache_app->add_subcommand("build", "write tables for degrees 1..dmax");
  cache_build->add_option("--dmax", cache_dmax)->required();
  auto* cache_list = cache_app->add_subcommand("list", "list cached tables");
  auto* cache_clear = cache_app->add_subcommand("clear", "remove cached tables");
  for (auto* s : {cache_build, cache_list, cache_clear}) s->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_ok;
    }
    err << "error: " << e.what() << "\n";
    return exit_domain;
  }

  try {
    if (!g.cache_dir.empty()) set_cache_dir(g.cache_dir);
    for (int x : {g.limits.oracle_max_degree, g.limits.max_degree, g.limits.max_qmax, g.limits.tropical_max_degree,
                  g.limits.tropical_max_genus, g.limits.toprec_max_euler})
      if (x < 0) throw DomainError("limits must be nonnegative");
    const std::string format = g.format.empty() ? (verify_app->parsed() ? "plain" : "json") : g.format;

    Json doc;
    if (compute_app->parsed()) {
      doc = compute.run(g);
    } else if (qseries_app->parsed()) {
      doc = qseries.run(g);
    } else if (fit_app->parsed()) {
      doc = fit.run(g, fit_app->count("--qmax") > 0, fit_app->count("--base-genus") > 0);
    } else if (toprec_app->parsed()) {
      doc = toprec.run(g);
    } else if (double_app->parsed()) {
      doc = dbl.run(g);
    } else if (tropical_app->parsed()) {
      const bool line = tropical_app->count("--mu") > 0 || tropical_app->count("--nu") > 0;
      if (line && (tropical_app->count("--mu") == 0 || tropical_app->count("--nu") == 0))
        throw DomainError("--mu and --nu go together");
      if (!line && tropical_app->count("--degree") == 0) throw DomainError("--degree is required");
      doc = trop.run(g, line);
    } else if (qc_app->parsed()) {
      doc = qc.run(g);
      out << render(doc, format);
      return doc["max_abs"] == "0" ? exit_ok : exit_verify_failed;
    } else if (verify_app->parsed()) {
      auto reports = verify.run(g);
      long checked = 0, failures = 0;
      for (const auto& r : reports) checked += r.checked, failures += r.failures;
      if (format == "plain") {
        if (reports.size() > 1)
          for (const auto& r : reports)
            out << r.suite << ": checked: " << r.checked << ", failures: " << r.failures << "\n";
        out << "checked: " << checked << ", failures: " << failures << "\n";
        for (const auto& r : reports)
          if (r.first_failure) out << report_doc(r).dump() << "\n";
      } else {
        Json suites = Json::array();
        for (const auto& r : reports) suites.push_back(report_doc(r));
        out << render(Json{{"checked", checked}, {"failures", failures}, {"suites", suites}}, format);
      }
      return failures == 0 ? exit_ok : exit_verify_failed;
    } else if (cache_app->parsed()) {
      auto dir = cache_dir();
      if (!dir) throw DomainError("no cache directory: pass --cache-dir or set HURWITZ_CACHE_DIR");
      if (cache_build->parsed()) {
        if (cache_dmax < 1) throw DomainError("dmax must be positive");
        check_degree_limit(cache_dmax, g.limits.max_degree, "dmax");
        fs::create_directories(*dir);
        for (int d = 1; d <= cache_dmax; ++d) {
          const CharacterTable& table = character_table(d);
          if (fs::exists(cache_file(d))) continue;
          std::ofstream file(cache_file(d));
          file << table.to_json();
          if (!file) throw DomainError("cannot write " + cache_file(d));
        }
      } else if (cache_clear->parsed()) {
        Json removed = Json::array();
        for (const auto& [d, path] : cached_tables(*dir)) {
          fs::remove(path);
          removed.push_back(d);
        }
        doc = Json{{"directory", *dir}, {"removed", removed}};
      }
      if (!cache_clear->parsed()) {
        Json degrees = Json::array();
        for (const auto& entry : cached_tables(*dir)) degrees.push_back(entry.first);
        doc = Json{{"directory", *dir}, {"degrees", degrees}};
      }
      (void)cache_list;
    }
    out << render(doc, format);
    return exit_ok;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return exit_domain;
  }
}

}  // namespace hurwitz
