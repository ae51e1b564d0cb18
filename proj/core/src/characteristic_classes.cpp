#include "gammacoh/characteristic_classes.hpp"

#include <stdexcept>

namespace gammacoh {

namespace {

bool is_hopf_dimension(unsigned n) { return n == 1 || n == 3 || n == 7; }

using IntSeries = std::vector<Integer>;

void add_monomial(IntSeries& p, std::size_t degree, long c) {
  if (p.size() <= degree) p.resize(degree + 1);
  p[degree] += c;
}

IntSeries multiply(const IntSeries& a, const IntSeries& b) {
  IntSeries r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Power series of num/den up to max_degree; den(0) must be 1.
IntSeries divide(const IntSeries& num, const IntSeries& den, std::size_t max_degree) {
  IntSeries q(max_degree + 1);
  for (std::size_t i = 0; i <= max_degree; ++i) {
    Integer v = i < num.size() ? num[i] : Integer(0);
    for (std::size_t j = 1; j < den.size() && j <= i; ++j) v -= den[j] * q[i - j];
    q[i] = v;
  }
  return q;
}

const IntMatrix2& gamma_q() {
  static const IntMatrix2 g(2, -1, 1, 0);
  return g;
}

}  // namespace

// ----------------------------------------------------------------- Eisenstein

EisensteinClass e2k(unsigned k) {
  if (k == 0) throw std::invalid_argument("e2k: k must be >= 1");
  const unsigned deg = 2 * k;
  HomogeneousPoly fa = HomogeneousPoly::monomial(deg, Variant::dual, 0) - HomogeneousPoly::monomial(deg, Variant::dual, deg);
  HomogeneousPoly fb(deg, Variant::dual);
  EisensteinClass e(k, CocycleClass(GroupName::SL2Z, deg, Variant::dual, {fa, fb}));
  if (!e.order_four_defect().is_zero() || !e.braid_defect().is_zero())
    throw std::logic_error("e2k: relator conditions fail for k = " + std::to_string(k));
  if (!e.cocycle().satisfies_cocycle_conditions())
    throw std::logic_error("e2k: Fox conditions fail for k = " + std::to_string(k));
  return e;
}

HomogeneousPoly EisensteinClass::order_four_defect() const {
  const IntMatrix2 a = generators::alpha();
  const HomogeneousPoly& f = cocycle_.value("A");
  HomogeneousPoly sum = f;
  IntMatrix2 p = a;
  for (int i = 1; i < 4; ++i, p = p * a) sum += act(p, f);
  return sum;
}

HomogeneousPoly EisensteinClass::braid_defect() const {
  const IntMatrix2 a = generators::alpha(), b = generators::beta();
  const HomogeneousPoly& fa = cocycle_.value("A");
  const HomogeneousPoly& fb = cocycle_.value("B");
  return (fa + act(a, fa)) - (fb + act(b, fb) + act(b * b, fb));
}

unsigned long class_degree(unsigned k, unsigned n) {
  return 2UL * k * n + 2UL * k + 1;
}

// ------------------------------------------------------------ Poincare series

std::string to_string(SeriesVariant v) {
  switch (v) {
    case SeriesVariant::verbatim_sl2z: return "verbatim_sl2z";
    case SeriesVariant::corrected_sl2z: return "corrected_sl2z";
    case SeriesVariant::verbatim_theta: return "verbatim_theta";
  }
  return "unknown";
}

SeriesVariant parse_series_variant(std::string_view text) {
  if (text == "verbatim_sl2z") return SeriesVariant::verbatim_sl2z;
  if (text == "corrected_sl2z") return SeriesVariant::corrected_sl2z;
  if (text == "verbatim_theta") return SeriesVariant::verbatim_theta;
  throw std::invalid_argument("unknown series variant '" + std::string(text) + "'");
}

GroupName series_group(SeriesVariant v) {
  return v == SeriesVariant::verbatim_theta ? GroupName::Theta : GroupName::SL2Z;
}

SeriesVariant default_series(GroupName g) {
  return g == GroupName::SL2Z ? SeriesVariant::corrected_sl2z : SeriesVariant::verbatim_theta;
}

unsigned default_sphere_dimension(GroupName g) { return g == GroupName::SL2Z ? 1 : 5; }

Integer PoincareSeries::coefficient(std::size_t degree) const {
  return degree < coefficients.size() ? coefficients[degree] : Integer(0);
}

std::vector<std::pair<std::size_t, Integer>> PoincareSeries::nonzero() const {
  std::vector<std::pair<std::size_t, Integer>> out;
  for (std::size_t d = 0; d < coefficients.size(); ++d)
    if (coefficients[d] != 0) out.emplace_back(d, coefficients[d]);
  return out;
}

PoincareSeries poincare_coefficients(unsigned n, SeriesVariant variant, std::size_t max_degree) {
  if (n % 2 == 0) throw std::invalid_argument("poincare_coefficients: n must be odd");
  const bool sl2z = series_group(variant) == GroupName::SL2Z;
  if (sl2z != is_hopf_dimension(n))
    throw std::invalid_argument("series variant " + to_string(variant) + " does not apply to n = " + std::to_string(n));
  const std::size_t l = n + 1;
  IntSeries num, den;
  std::size_t shift = 0;
  switch (variant) {
    case SeriesVariant::verbatim_sl2z:
    case SeriesVariant::corrected_sl2z:
      // z^(2l+1) ((1 + z^4l - z^6l) + z^8l) / ((1 - z^4l)(1 - z^6l)); the
      // corrected numerator has z^2l in place of z^4l.
      shift = 2 * l + 1;
      add_monomial(num, 0, 1);
      add_monomial(num, variant == SeriesVariant::verbatim_sl2z ? 4 * l : 2 * l, 1);
      add_monomial(num, 6 * l, -1);
      add_monomial(num, 8 * l, 1);
      {
        IntSeries d1, d2;
        add_monomial(d1, 0, 1);
        add_monomial(d1, 4 * l, -1);
        add_monomial(d2, 0, 1);
        add_monomial(d2, 6 * l, -1);
        den = multiply(d1, d2);
      }
      break;
    case SeriesVariant::verbatim_theta:
      // z ((1 + z^2l - z^4l) + z^6l) / ((1 - z^2l)(1 - z^4l))
      shift = 1;
      add_monomial(num, 0, 1);
      add_monomial(num, 2 * l, 1);
      add_monomial(num, 4 * l, -1);
      add_monomial(num, 6 * l, 1);
      {
        IntSeries d1, d2;
        add_monomial(d1, 0, 1);
        add_monomial(d1, 2 * l, -1);
        add_monomial(d2, 0, 1);
        add_monomial(d2, 4 * l, -1);
        den = multiply(d1, d2);
      }
      break;
  }
  PoincareSeries s;
  s.n = n;
  s.ell = static_cast<unsigned>(l);
  s.variant = variant;
  s.coefficients.assign(max_degree + 1, Integer(0));
  s.coefficients[0] = 1;
  if (max_degree >= shift) {
    const IntSeries q = divide(num, den, max_degree - shift);
    for (std::size_t i = 0; i < q.size(); ++i) s.coefficients[i + shift] += q[i];
  }
  return s;
}

// ---------------------------------------------------------- dimension oracle

std::size_t cusp_count(GroupName g) { return g == GroupName::SL2Z ? 1 : 2; }

unsigned long cusp_form_dim(unsigned weight, GroupName g) {
  if (weight < 4 || weight % 2 != 0)
    throw std::invalid_argument("cusp_form_dim: weight must be even and >= 4");
  if (g == GroupName::SL2Z) {
    unsigned long d = weight / 12;
    if (weight % 12 == 2) --d;
    return d;
  }
  // genus 0, one elliptic point of order 2, none of order 3, two cusps
  const long k = weight;
  const long genus = 0, e2 = 1, cusps = 2;
  const long d = (k - 1) * (genus - 1) + (k / 4) * e2 + (k / 2 - 1) * cusps;
  return d > 0 ? static_cast<unsigned long>(d) : 0;
}

unsigned long h1_dim_oracle(unsigned m, GroupName g) {
  if (m == 0) throw std::invalid_argument("h1_dim_oracle: weight index must be >= 1");
  return cusp_count(g) + 2 * cusp_form_dim(2 * m + 2, g);
}

// -------------------------------------------------------------------- bundles

std::string to_string(BundleKind b) {
  switch (b) {
    case BundleKind::theta_gamma: return "ThetaGamma";
    case BundleKind::mq11: return "MQ11";
    case BundleKind::mp: return "MP";
    case BundleKind::mp10: return "MP10";
  }
  return "unknown";
}

std::string BundleEvaluation::value_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value);
}

IntMatrix2 unipotent_generator(GroupName g) {
  return g == GroupName::SL2Z ? generators::T() : generators::U();
}

BundleEvaluation evaluate_on_theta_gamma(const CocycleClass& c, const IntMatrix2& gamma) {
  if (!c.presentation().contains(gamma))
    throw std::domain_error("matrix " + gamma.to_string() + " is not in the group " + to_string(c.group()));
  const auto r = restrict_to_cyclic(c, gamma);
  return {BundleKind::theta_gamma, gamma, r.reduced, !r.is_zero};
}

BundleEvaluation evaluate_on_MQ11(unsigned k) {
  const auto e = e2k(k);
  const auto value = delta_star(derivation_value(e.cocycle(), gamma_q()));
  return {BundleKind::mq11, gamma_q(), value, !value.is_zero()};
}

BundleEvaluation evaluate_on_MP(unsigned k, GroupName g) {
  const auto e = e2k(k);
  const IntMatrix2 p = unipotent_generator(g);
  const auto value = pr_x(derivation_value(e.cocycle(), p));
  return {BundleKind::mp, p, value, !value.is_zero()};
}

BundleEvaluation evaluate_on_MP10(unsigned k, GroupName g) {
  auto ev = evaluate_on_MP(k, g);
  ev.bundle = BundleKind::mp10;
  return ev;
}

// ------------------------------------------------------------------ detection

bool DetectionReport::complete() const {
  for (const auto& d : detections)
    if (!d.detecting_gamma) return false;
  if (dim_h1 > 0)
    for (const auto& c : cusp_detections)
      if (!c.class_index) return false;
  return spanning.full();
}

DetectionReport detection_report(GroupName g, unsigned m, unsigned radius) {
  if (m == 0) throw std::invalid_argument("detection_report: weight index must be >= 1");
  DetectionReport rep;
  rep.group = g;
  rep.weight = m;
  rep.radius = radius;
  const auto space = h1(g, 2 * m, Variant::dual);
  rep.dim_h1 = space.dimension();
  rep.detections = detect_classes(space, radius);
  if (rep.dim_h1 > 0) {
    for (const auto& cusp : cusp_orbits(presentation(g))) {
      CuspDetection cd{cusp, std::nullopt};
      for (std::size_t i = 0; i < space.dimension() && !cd.class_index; ++i)
        if (!restrict_to_cyclic(space.basis()[i], cusp.stabilizer_generator).is_zero) cd.class_index = i;
      rep.cusp_detections.push_back(cd);
    }
  }
  rep.spanning = spanning_rank(g, m, radius);
  return rep;
}

// ------------------------------------------------------------ dimension table

std::vector<DimensionRow> dimension_table(GroupName g, unsigned weight_max, DimensionMethod method,
                                          bool with_oracle, SeriesVariant series, unsigned n) {
  const auto& pres = presentation(g);
  const std::size_t ell = n + 1;
  const auto ps = poincare_coefficients(n, series, 2 * weight_max * ell + 1);
  std::vector<DimensionRow> rows;
  for (unsigned m = 0; m <= weight_max; ++m) {
    DimensionRow row;
    row.m = m;
    const auto module = symmetric_power_module(2 * m, Variant::dual);
    row.dim_h0 = invariants(pres, module).size();
    const bool use_shapiro = g == GroupName::Theta && method != DimensionMethod::presentation;
    if (method != DimensionMethod::shapiro || !use_shapiro) row.dim_h1_presentation = h1_dimension(pres, module);
    if (use_shapiro) row.dim_h1_shapiro = shapiro_h1(2 * m, Variant::dual);
    row.series_coefficient = ps.coefficient(2 * m * ell + 1);
    if (with_oracle && m >= 1) row.oracle = h1_dim_oracle(m, g);

    const std::size_t reference = row.dim_h1_presentation ? *row.dim_h1_presentation : *row.dim_h1_shapiro;
    row.agree = row.series_coefficient == Integer(reference);
    if (row.dim_h1_shapiro && *row.dim_h1_shapiro != reference) row.agree = false;
    if (row.oracle && *row.oracle != reference) row.agree = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DiscrepancyRow> series_discrepancy(unsigned n, unsigned weight_max) {
  const std::size_t ell = n + 1;
  const std::size_t max_degree = 2 * weight_max * ell + 1;
  const auto verbatim = poincare_coefficients(n, SeriesVariant::verbatim_sl2z, max_degree);
  const auto corrected = poincare_coefficients(n, SeriesVariant::corrected_sl2z, max_degree);
  std::vector<DiscrepancyRow> rows;
  for (unsigned m = 1; m <= weight_max; ++m) {
    DiscrepancyRow r;
    r.m = m;
    r.degree = 2 * m * ell + 1;
    r.verbatim = verbatim.coefficient(r.degree);
    r.corrected = corrected.coefficient(r.degree);
    r.computed = h1_dimension(presentation(GroupName::SL2Z), symmetric_power_module(2 * m, Variant::dual));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace gammacoh
