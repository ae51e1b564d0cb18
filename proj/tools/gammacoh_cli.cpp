// gammacoh: batch front end.  JSON is the contract; tables are for people.
// Exit codes: 0 ok, 1 a cross-check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace {

using namespace gammacoh;
using io::Json;
using io::to_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned max_degree() {
  const char* env = std::getenv("GAMMACOH_MAX_DEGREE");
  if (env == nullptr || *env == '\0') return 40;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("GAMMACOH_MAX_DEGREE is not a number: ") + env);
  }
}

void check_degree(unsigned long degree) {
  if (degree > max_degree())
    throw UsageError("module degree " + std::to_string(degree) + " exceeds GAMMACOH_MAX_DEGREE=" +
                     std::to_string(max_degree()));
}

// Fixed-width table with a header row.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t i = 0; i < rows_[r].size(); ++i)
        os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << rows_[r][i];
      os << '\n';
      if (r == 0) {
        for (std::size_t i = 0; i < width.size(); ++i) os << (i ? "  " : "") << std::string(width[i], '-');
        os << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

template <class T>
std::string opt_str(const std::optional<T>& o) {
  if (!o) return "-";
  std::ostringstream os;
  os << *o;
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

IntMatrix2 parse_element(const std::string& text, GroupName g) {
  if (text.find(',') != std::string::npos) return IntMatrix2::parse(text);
  return evaluate_word(GroupWord::parse(text), presentation(g));
}

struct Options {
  std::string format = "table";
  std::string group = "sl2z";
  unsigned weight_max = 5;
  std::string method = "presentation";
  bool oracle = false;
  unsigned k = 1;
  std::string eval;
  std::string project = "none";
  unsigned weight = 1;
  unsigned radius = 8;
  unsigned n = 0;
  std::string variant;
  std::size_t terms = 25;
  std::string gamma;
};

bool json_out(const Options& o) { return o.format == "json"; }

void print_discrepancy(std::ostream& os, const std::vector<DiscrepancyRow>& rows) {
  os << "\nSL2(Z) series discrepancy (verbatim vs corrected numerator)\n";
  Table t({"m", "degree", "verbatim", "corrected", "dim H1", "verbatim ok", "corrected ok"});
  for (const auto& r : rows)
    t.add({std::to_string(r.m), std::to_string(r.degree), r.verbatim.get_str(), r.corrected.get_str(),
           std::to_string(r.computed), yes_no(r.verbatim_agrees()), yes_no(r.corrected_agrees())});
  t.print(os);
}

Json discrepancy_json(const std::vector<DiscrepancyRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

int cmd_dims(const Options& o) {
  const GroupName g = parse_group_name(o.group);
  check_degree(2ul * o.weight_max);
  DimensionMethod method;
  if (o.method == "presentation") method = DimensionMethod::presentation;
  else if (o.method == "shapiro") method = DimensionMethod::shapiro;
  else method = DimensionMethod::both;
  const SeriesVariant series = o.variant.empty() ? default_series(g) : parse_series_variant(o.variant);
  if (series_group(series) != g) throw UsageError("series variant does not describe group " + o.group);
  const unsigned n = o.n ? o.n : default_sphere_dimension(g);
  const auto rows = dimension_table(g, o.weight_max, method, o.oracle, series, n);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.agree;
  std::vector<DiscrepancyRow> disc;
  if (g == GroupName::SL2Z && o.weight_max >= 1) disc = series_discrepancy(n, o.weight_max);

  if (json_out(o)) {
    Json rj = Json::array();
    for (const auto& r : rows) rj.push_back(to_json(r));
    Json out{{"group", to_string(g)}, {"n", n}, {"series_variant", to_string(series)},
             {"method", o.method}, {"oracle", o.oracle}, {"rows", std::move(rj)}, {"agree", ok}};
    if (g == GroupName::SL2Z) out["discrepancy"] = discrepancy_json(disc);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "group " << to_string(g) << ", n = " << n << ", series " << to_string(series) << "\n\n";
    Table t({"m", "dim H0", "dim H1", "shapiro", "series", "oracle", "agree"});
    for (const auto& r : rows)
      t.add({std::to_string(r.m), std::to_string(r.dim_h0), opt_str(r.dim_h1_presentation),
             opt_str(r.dim_h1_shapiro), r.series_coefficient.get_str(), opt_str(r.oracle), yes_no(r.agree)});
    t.print(std::cout);
    if (!disc.empty()) print_discrepancy(std::cout, disc);
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_e2k(const Options& o) {
  if (o.k == 0) throw UsageError("--k must be at least 1");
  check_degree(2ul * o.k);
  const EisensteinClass e = e2k(o.k);
  const IntMatrix2 g = o.eval.empty() ? IntMatrix2::identity() : parse_element(o.eval, GroupName::SL2Z);
  const HomogeneousPoly value = derivation_value(e.cocycle(), g);
  std::optional<UnivariateTerm> projected;
  if (o.project == "x") projected = pr_x(value);
  else if (o.project == "diag") projected = delta_star(value);
  const bool nonzero = projected ? !projected->is_zero() : !value.is_zero();

  if (json_out(o)) {
    Json out{{"k", o.k},
             {"degree", 2 * o.k},
             {"generator_values", to_json(e.cocycle())},
             {"element", g.to_string()},
             {"word", sl2z_word(g).to_string()},
             {"value", to_json(value)},
             {"value_display", value.to_string()},
             {"project", o.project}};
    if (projected) {
      out["projected"] = to_json(*projected);
      out["projected_display"] = projected->to_string();
    }
    out["nonzero"] = nonzero;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "E_" << 2 * o.k << "(A) = " << e.cocycle().value("A").to_string() << '\n'
              << "E_" << 2 * o.k << "(B) = " << e.cocycle().value("B").to_string() << '\n'
              << "element " << g.to_string() << " = " << sl2z_word(g).to_string() << '\n'
              << "value: " << value.to_string() << '\n';
    if (projected) std::cout << "projection (" << o.project << "): " << projected->to_string() << '\n';
    std::cout << "nonzero: " << yes_no(nonzero) << '\n';
  }
  return kOk;
}

int cmd_detect(const Options& o) {
  const GroupName g = parse_group_name(o.group);
  if (o.weight == 0) throw UsageError("--weight must be at least 1");
  check_degree(2ul * o.weight);
  const DetectionReport r = detection_report(g, o.weight, o.radius);
  const unsigned n = default_sphere_dimension(g);
  const unsigned ell = n + 1;
  const std::size_t degree = 2ul * o.weight * ell + 1;
  const Integer series = poincare_coefficients(n, default_series(g), degree).coefficient(degree);
  const unsigned long oracle = h1_dim_oracle(o.weight, g);
  const bool ok = r.complete() && r.spanning.full();

  if (json_out(o)) {
    std::cout << to_json(r, series, oracle).dump(2) << '\n';
  } else {
    std::cout << "group " << to_string(g) << ", weight index " << o.weight << ", radius " << o.radius << '\n'
              << "dim H1 = " << r.dim_h1 << ", series " << series.get_str() << ", oracle " << oracle << "\n\n";
    Table t({"class", "detecting gamma", "restriction"});
    for (const auto& d : r.detections)
      t.add({std::to_string(d.class_index), d.detecting_gamma ? d.detecting_gamma->to_string() : "none",
             d.value.to_string()});
    t.print(std::cout);
    std::cout << '\n';
    Table c({"cusp", "generator", "width", "detected by class"});
    for (const auto& d : r.cusp_detections)
      c.add({"[" + d.cusp.p.get_str() + ":" + d.cusp.q.get_str() + "]", d.cusp.stabilizer_generator.to_string(),
             std::to_string(d.cusp.width), opt_str(d.class_index)});
    c.print(std::cout);
    std::cout << "\nspanning rank " << r.spanning.rank << " / " << r.spanning.dim_h1 << " over "
              << r.spanning.enumerated << " elements\n"
              << "complete: " << yes_no(ok) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_cusps(const Options& o, bool with_weight) {
  const GroupName g = parse_group_name(o.group);
  const auto cusps = cusp_orbits(presentation(g));
  std::optional<ParabolicAnalysis> par;
  if (with_weight) {
    if (o.weight == 0) throw UsageError("--weight must be at least 1");
    check_degree(2ul * o.weight);
    par = parabolic_analysis(g, o.weight);
  }
  if (json_out(o)) {
    Json cj = Json::array();
    for (const auto& c : cusps) cj.push_back(to_json(c));
    Json out{{"group", to_string(g)}, {"cusps", std::move(cj)}};
    if (par) out["parabolic"] = to_json(*par);
    std::cout << out.dump(2) << '\n';
  } else {
    Table t({"cusp", "generator", "width"});
    for (const auto& c : cusps)
      t.add({"[" + c.p.get_str() + ":" + c.q.get_str() + "]", c.stabilizer_generator.to_string(),
             std::to_string(c.width)});
    t.print(std::cout);
    if (par) {
      std::cout << "\nweight index " << o.weight << ": dim H1 = " << par->dim_h1
                << ", dim H1_par = " << par->dim_parabolic << ", restriction rank " << par->combined_rank
                << ", surjective: " << yes_no(par->surjective()) << '\n';
    }
  }
  if (par && !(par->surjective() && par->each_cusp_one_dimensional())) return kCheckFailed;
  return kOk;
}

int cmd_series(const Options& o) {
  const unsigned n = o.n ? o.n : 1;
  SeriesVariant v;
  if (!o.variant.empty()) v = parse_series_variant(o.variant);
  else v = (n == 1 || n == 3 || n == 7) ? SeriesVariant::corrected_sl2z : SeriesVariant::verbatim_theta;
  if (o.terms == 0) throw UsageError("--terms must be at least 1");
  const PoincareSeries s = poincare_coefficients(n, v, o.terms - 1);
  std::vector<DiscrepancyRow> disc;
  if (series_group(v) == GroupName::SL2Z) {
    const unsigned ell = n + 1;
    const unsigned wmax = std::max<std::size_t>(1, o.terms >= 2 ? (o.terms - 2) / (2 * ell) : 0);
    check_degree(2ul * wmax);
    disc = series_discrepancy(n, wmax);
  }
  if (json_out(o)) {
    Json out = to_json(s);
    if (!disc.empty()) out["discrepancy"] = discrepancy_json(disc);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << to_string(v) << ", n = " << n << ", l = " << s.ell << ", degrees 0.." << o.terms - 1 << "\n\n";
    Table t({"degree", "coefficient"});
    for (const auto& [d, c] : s.nonzero()) t.add({std::to_string(d), c.get_str()});
    t.print(std::cout);
    if (!disc.empty()) print_discrepancy(std::cout, disc);
  }
  return kOk;
}

int cmd_pair(const Options& o) {
  const GroupName g = parse_group_name(o.group);
  if (o.weight == 0) throw UsageError("--weight must be at least 1");
  if (o.gamma.empty()) throw UsageError("--gamma is required");
  check_degree(2ul * o.weight);
  const IntMatrix2 gamma = parse_element(o.gamma, g);
  if (!presentation(g).contains(gamma))
    throw std::domain_error(gamma.to_string() + " is not in " + to_string(g));
  const CohomologySpace space = h1(g, 2 * o.weight, Variant::dual);
  const DecomposableClass d = make_decomposable(gamma, o.weight);
  std::vector<Rational> values;
  for (const auto& c : space.basis()) values.push_back(pair_decomposable(c, d));

  if (json_out(o)) {
    Json vj = Json::array();
    for (const auto& v : values) vj.push_back(to_json(v));
    std::cout << Json{{"group", to_string(g)},
                      {"weight", o.weight},
                      {"gamma", gamma.to_string()},
                      {"kind", to_string(classify(gamma))},
                      {"invariant", to_json(d.value)},
                      {"dim_h1", space.dimension()},
                      {"pairings", std::move(vj)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "gamma " << gamma.to_string() << " (" << to_string(classify(gamma)) << "), s_gamma^" << o.weight
              << " = " << d.value.to_string() << "\n\n";
    Table t({"class", "pairing"});
    for (std::size_t i = 0; i < values.size(); ++i) t.add({std::to_string(i), values[i].to_string()});
    t.print(std::cout);
  }
  return kOk;
}

int cmd_span(const Options& o) {
  const GroupName g = parse_group_name(o.group);
  if (o.weight == 0) throw UsageError("--weight must be at least 1");
  check_degree(2ul * o.weight);
  const SpanningCertificate c = spanning_rank(g, o.weight, o.radius);
  if (json_out(o)) {
    Json out = to_json(c);
    out["group"] = to_string(g);
    out["weight"] = o.weight;
    out["full"] = c.full();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "group " << to_string(g) << ", weight index " << o.weight << ", radius " << o.radius << '\n'
              << "rank " << c.rank << " / dim H1 " << c.dim_h1 << " over " << c.enumerated << " elements\n"
              << "detecting:";
    for (const auto& gm : c.detecting) std::cout << ' ' << gm.to_string();
    std::cout << "\nfull: " << yes_no(c.full()) << '\n';
  }
  return c.full() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact H^1 of SL2(Z) and the theta group with symmetric-power coefficients"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

  const auto group_opt = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "sl2z or theta")
        ->transform(CLI::IsMember({"sl2z", "theta"}, CLI::ignore_case));
  };

  auto* dims = app.add_subcommand("dims", "Dimension table of H^0 and H^1");
  group_opt(dims);
  dims->add_option("--weight-max", o.weight_max, "Largest weight index m");
  dims->add_option("--method", o.method, "H^1 route")
      ->check(CLI::IsMember({"presentation", "shapiro", "both"}));
  dims->add_flag("--oracle", o.oracle, "Compare against the modular-forms count");
  dims->add_option("--n", o.n, "Sphere dimension for the series");
  dims->add_option("--variant", o.variant, "Series variant");

  auto* e2k_cmd = app.add_subcommand("e2k", "Eisenstein cocycle values");
  e2k_cmd->add_option("--k", o.k, "Class index k (module degree 2k)");
  e2k_cmd->add_option("--eval", o.eval, "Element as \"a,b;c,d\" or a word in A, B");
  e2k_cmd->add_option("--project", o.project, "Specialization")->check(CLI::IsMember({"none", "x", "diag"}));

  auto* detect = app.add_subcommand("detect", "Detection report");
  group_opt(detect);
  detect->add_option("--weight", o.weight, "Weight index m");
  detect->add_option("--radius", o.radius, "Word-length radius");

  auto* cusps = app.add_subcommand("cusps", "Cusp classes and parabolic restriction");
  group_opt(cusps);
  auto* cusps_weight = cusps->add_option("--weight", o.weight, "Also analyse H^1 at this weight index");

  auto* series = app.add_subcommand("series", "Poincare series coefficients");
  series->add_option("--n", o.n, "Odd sphere dimension");
  series->add_option("--variant", o.variant, "verbatim_sl2z, corrected_sl2z or verbatim_theta");
  series->add_option("--terms", o.terms, "Number of coefficients");

  auto* pair = app.add_subcommand("pair", "Pair H^1 against a decomposable class");
  group_opt(pair);
  pair->add_option("--weight", o.weight, "Weight index m");
  pair->add_option("--gamma", o.gamma, "Element as \"a,b;c,d\" or a word");

  auto* span = app.add_subcommand("span", "Spanning certificate for decomposables");
  group_opt(span);
  span->add_option("--weight", o.weight, "Weight index m");
  span->add_option("--radius", o.radius, "Word-length radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dims) return cmd_dims(o);
    if (*e2k_cmd) return cmd_e2k(o);
    if (*detect) return cmd_detect(o);
    if (*cusps) return cmd_cusps(o, cusps_weight->count() > 0);
    if (*series) return cmd_series(o);
    if (*pair) return cmd_pair(o);
    if (*span) return cmd_span(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
