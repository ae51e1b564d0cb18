#include "serialize.hpp"

#include <stdexcept>

namespace gammacoh::io {

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from_json(const Json& j) {
  std::vector<QVector> rows;
  for (const auto& row : j) {
    QVector v;
    for (const auto& e : row) v.push_back(rational_from_json(e));
    rows.push_back(std::move(v));
  }
  return QMatrix::from_rows(rows);
}

Json to_json(const HomogeneousPoly& f) {
  Json out = Json::object();
  for (unsigned p = 0; p <= f.degree(); ++p)
    if (!f.coefficient(p).is_zero())
      out[HomogeneousPoly::monomial_key(f.degree(), f.variant(), p)] = to_json(f.coefficient(p));
  return out;
}

HomogeneousPoly poly_from_json(const Json& j, unsigned degree, Variant variant) {
  HomogeneousPoly f(degree, variant);
  for (const auto& [key, value] : j.items()) {
    unsigned p = 0;
    bool found = false;
    for (; p <= degree; ++p)
      if (HomogeneousPoly::monomial_key(degree, variant, p) == key) {
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("monomial '" + key + "' is not in the degree-" + std::to_string(degree) + " module");
    f += HomogeneousPoly::monomial(degree, variant, p, rational_from_json(value));
  }
  return f;
}

Json to_json(const UnivariateTerm& t) {
  Json out = Json::object();
  if (!t.is_zero())
    out[t.degree == 0 ? std::string("1") : t.variable + "^" + std::to_string(t.degree)] = to_json(t.coefficient);
  return out;
}

Json to_json(const EulerPontryaginPoly& f) {
  Json out = Json::object();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string key;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!key.empty()) key += '*';
      if (v < f.factors()) key += "e" + std::to_string(v + 1);
      else key += "p" + std::to_string((v - f.factors()) / f.factors() + 1) + "_" +
                  std::to_string((v - f.factors()) % f.factors() + 1);
      key += "^" + std::to_string(e[v]);
    }
    out[key.empty() ? "1" : key] = to_json(c);
  }
  return out;
}

Json to_json(const CocycleClass& c) {
  Json out = Json::object();
  const auto& gens = c.presentation().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) out[gens[i].name] = to_json(c.generator_values()[i]);
  return out;
}

Json to_json(const CohomologySpace& s) {
  Json basis = Json::array();
  for (const auto& c : s.basis()) basis.push_back(to_json(c));
  return Json{{"group", to_string(s.group())},
              {"degree", s.degree()},
              {"variant", to_string(s.variant())},
              {"dim", s.dimension()},
              {"basis", std::move(basis)}};
}

std::vector<CocycleClass> cohomology_basis_from_json(const Json& j) {
  const GroupName g = parse_group_name(j.at("group").get<std::string>());
  const unsigned degree = j.at("degree").get<unsigned>();
  const Variant variant = parse_variant(j.at("variant").get<std::string>());
  std::vector<CocycleClass> out;
  for (const auto& cls : j.at("basis")) {
    std::vector<HomogeneousPoly> values;
    for (const auto& gen : presentation(g).generators())
      values.push_back(poly_from_json(cls.at(gen.name), degree, variant));
    out.emplace_back(g, degree, variant, std::move(values));
  }
  return out;
}

Json to_json(const CuspClass& c) {
  return Json{{"cusp", "[" + c.p.get_str() + ":" + c.q.get_str() + "]"},
              {"generator", c.stabilizer_generator.to_string()},
              {"width", c.width}};
}

Json to_json(const SpanningCertificate& c) {
  Json detecting = Json::array();
  for (const auto& g : c.detecting) detecting.push_back(g.to_string());
  return Json{{"rank", c.rank}, {"dim", c.dim_h1}, {"radius", c.radius}, {"enumerated", c.enumerated},
              {"detecting", std::move(detecting)}};
}

Json to_json(const ClassDetection& d) {
  return Json{{"class_index", d.class_index},
              {"detecting_gamma", d.detecting_gamma ? Json(d.detecting_gamma->to_string()) : Json(nullptr)},
              {"value", to_json(d.value)}};
}

Json to_json(const CuspDetection& d) {
  Json out = to_json(d.cusp);
  out["class_index"] = d.class_index ? Json(*d.class_index) : Json(nullptr);
  return out;
}

Json to_json(const DetectionReport& r, const Integer& series_coefficient, unsigned long oracle_dim) {
  Json detections = Json::array(), cusps = Json::array();
  for (const auto& d : r.detections) detections.push_back(to_json(d));
  for (const auto& c : r.cusp_detections) cusps.push_back(to_json(c));
  const bool agreement = series_coefficient == Integer(r.dim_h1) && oracle_dim == r.dim_h1;
  return Json{{"group", to_string(r.group)},
              {"weight", r.weight},
              {"dim_h1", r.dim_h1},
              {"series_coefficient", series_coefficient.get_str()},
              {"oracle_dim", oracle_dim},
              {"agreement", agreement},
              {"detections", std::move(detections)},
              {"cusp_detections", std::move(cusps)},
              {"spanning", Json{{"rank", r.spanning.rank}, {"dim", r.spanning.dim_h1}, {"radius", r.spanning.radius}}},
              {"spanning_certificate", to_json(r.spanning)},
              {"complete", r.complete()}};
}

Json to_json(const BundleEvaluation& e) {
  Json value = std::visit([](const auto& v) { return to_json(v); }, e.value);
  return Json{{"bundle", to_string(e.bundle)},
              {"gamma", e.gamma ? Json(e.gamma->to_string()) : Json(nullptr)},
              {"value", std::move(value)},
              {"display", e.value_string()},
              {"nonzero", e.nonzero}};
}

Json to_json(const PoincareSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [d, c] : s.nonzero()) coeffs.push_back(Json::array({d, c.get_str()}));
  return Json{{"n", s.n}, {"ell", s.ell}, {"variant", to_string(s.variant)},
              {"terms", s.coefficients.size()}, {"coefficients", std::move(coeffs)}};
}

Json to_json(const DimensionRow& r) {
  auto opt = [](const auto& o) { return o ? Json(*o) : Json(nullptr); };
  return Json{{"m", r.m},
              {"degree", 2 * r.m},
              {"dim_h0", r.dim_h0},
              {"dim_h1", opt(r.dim_h1_presentation)},
              {"dim_h1_shapiro", opt(r.dim_h1_shapiro)},
              {"series_coefficient", r.series_coefficient.get_str()},
              {"oracle_dim", opt(r.oracle)},
              {"agree", r.agree}};
}

Json to_json(const DiscrepancyRow& r) {
  return Json{{"m", r.m},
              {"degree", r.degree},
              {"verbatim", r.verbatim.get_str()},
              {"corrected", r.corrected.get_str()},
              {"computed", r.computed},
              {"verbatim_agrees", r.verbatim_agrees()},
              {"corrected_agrees", r.corrected_agrees()}};
}

Json to_json(const ParabolicAnalysis& p) {
  Json cusps = Json::array();
  for (const auto& c : p.cusps) {
    Json j = to_json(c.cusp);
    j["coinvariant_dim"] = c.coinvariant_dimension;
    j["restriction_rank"] = c.restriction_rank;
    cusps.push_back(std::move(j));
  }
  return Json{{"dim_h1", p.dim_h1},
              {"cusps", std::move(cusps)},
              {"combined_rank", p.combined_rank},
              {"dim_parabolic", p.dim_parabolic},
              {"surjective", p.surjective()}};
}

}  // namespace gammacoh::io
