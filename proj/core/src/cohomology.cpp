#include "gammacoh/cohomology.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>

namespace gammacoh {

namespace {

HomogeneousPoly as_poly(unsigned degree, Variant variant, QVector v) {
  return {degree, variant, std::move(v)};
}

// Unit letters (generator index, +-1) of a word, left to right.
std::vector<std::pair<std::size_t, int>> unit_letters(const GroupPresentation& g, const GroupWord& w) {
  std::vector<std::pair<std::size_t, int>> out;
  for (const auto& l : w.letters()) {
    const std::size_t idx = g.generator_index(l.generator);
    const int step = l.exponent > 0 ? 1 : -1;
    for (long i = 0; i < (l.exponent > 0 ? l.exponent : -l.exponent); ++i) out.emplace_back(idx, step);
  }
  return out;
}

// Action matrices of every generator and its inverse, plus the derivation
// values on g and g^-1.
struct GeneratorData {
  std::vector<QMatrix> forward, backward;
  std::vector<std::vector<QVector>> value_fwd, value_bwd;  // [class][generator]
};

GeneratorData generator_data(const GroupPresentation& g, unsigned degree, Variant variant,
                             const std::vector<CocycleClass>& classes) {
  GeneratorData d;
  for (const auto& gen : g.generators()) {
    d.forward.push_back(action_matrix(gen.matrix, degree, variant));
    d.backward.push_back(action_matrix(gen.matrix.inverse(), degree, variant));
  }
  for (const auto& c : classes) {
    std::vector<QVector> fwd, bwd;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      const QVector& v = c.generator_values()[i].coefficients();
      fwd.push_back(v);
      bwd.push_back(scale(d.backward[i] * v, -1));  // f(g^-1) = -g^-1 f(g)
    }
    d.value_fwd.push_back(std::move(fwd));
    d.value_bwd.push_back(std::move(bwd));
  }
  return d;
}

}  // namespace

// --------------------------------------------------------------- Fox calculus

QMatrix GroupRingElement::action(const GroupPresentation& g, const Module& m) const {
  QMatrix sum(m.dimension(), m.dimension());
  for (const auto& [coeff, word] : terms) sum = sum + m.action(evaluate_word(word, g)).scaled(coeff);
  return sum;
}

std::string GroupRingElement::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, w] = terms[i];
    long mag = c < 0 ? -c : c;
    if (i == 0) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    std::string word = w.to_string();
    if (mag != 1) s += std::to_string(mag) + (word == "1" ? "" : "*" + word);
    else s += word;
  }
  return s;
}

GroupRingElement fox_derivative(const GroupWord& word, const std::string& generator) {
  std::vector<std::pair<long, GroupWord>> raw;
  GroupWord prefix;
  for (const auto& l : word.letters()) {
    if (l.generator == generator) {
      if (l.exponent > 0) {
        for (long j = 0; j < l.exponent; ++j) {
          GroupWord w = prefix;
          w.append(generator, j);
          raw.emplace_back(1, w);
        }
      } else {
        for (long j = 1; j <= -l.exponent; ++j) {
          GroupWord w = prefix;
          w.append(generator, -j);
          raw.emplace_back(-1, w);
        }
      }
    }
    prefix.append(l.generator, l.exponent);
  }
  GroupRingElement out;
  std::map<std::string, std::size_t> slot;
  for (auto& [c, w] : raw) {
    auto key = w.to_string();
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, out.terms.size());
      out.terms.emplace_back(c, std::move(w));
    } else {
      out.terms[it->second].first += c;
    }
  }
  std::erase_if(out.terms, [](const auto& t) { return t.first == 0; });
  return out;
}

// ---------------------------------------------------------------- CocycleClass

CocycleClass::CocycleClass(GroupName group, unsigned degree, Variant variant,
                           std::vector<HomogeneousPoly> generator_values)
    : group_(group), degree_(degree), variant_(variant), values_(std::move(generator_values)) {
  if (values_.size() != gammacoh::presentation(group).generators().size())
    throw std::invalid_argument("CocycleClass: one value per generator required");
  for (const auto& v : values_)
    if (v.degree() != degree || v.variant() != variant)
      throw std::invalid_argument("CocycleClass: generator value in the wrong module");
}

CocycleClass CocycleClass::principal(GroupName group, const HomogeneousPoly& v) {
  std::vector<HomogeneousPoly> values;
  for (const auto& gen : gammacoh::presentation(group).generators()) values.push_back(v - act(gen.matrix, v));
  return {group, v.degree(), v.variant(), std::move(values)};
}

const HomogeneousPoly& CocycleClass::value(std::string_view generator) const {
  return values_[presentation().generator_index(generator)];
}

HomogeneousPoly CocycleClass::relator_defect(const GroupWord& relator) const {
  const Module m = symmetric_power_module(degree_, variant_);
  QVector sum(m.dimension());
  const auto& gens = presentation().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto d = fox_derivative(relator, gens[i].name);
    if (d.terms.empty()) continue;
    sum = add(sum, d.action(presentation(), m) * values_[i].coefficients());
  }
  return as_poly(degree_, variant_, std::move(sum));
}

bool CocycleClass::satisfies_cocycle_conditions() const {
  for (const auto& r : presentation().relators())
    if (!relator_defect(r).is_zero()) return false;
  return true;
}

QVector CocycleClass::flatten() const {
  QVector flat;
  for (const auto& v : values_) flat.insert(flat.end(), v.coefficients().begin(), v.coefficients().end());
  return flat;
}

CocycleClass CocycleClass::operator+(const CocycleClass& o) const {
  if (o.group_ != group_ || o.degree_ != degree_ || o.variant_ != variant_)
    throw std::invalid_argument("adding cocycles over different groups or modules");
  std::vector<HomogeneousPoly> values;
  for (std::size_t i = 0; i < values_.size(); ++i) values.push_back(values_[i] + o.values_[i]);
  return {group_, degree_, variant_, std::move(values)};
}

CocycleClass CocycleClass::scaled(const Rational& s) const {
  std::vector<HomogeneousPoly> values;
  for (const auto& v : values_) values.push_back(v.scaled(s));
  return {group_, degree_, variant_, std::move(values)};
}

HomogeneousPoly derivation_value_on_word(const CocycleClass& c, const GroupWord& word) {
  const auto& g = c.presentation();
  const auto data = generator_data(g, c.degree(), c.variant(), {c});
  const auto letters = unit_letters(g, word);
  // f(l_1 ... l_n) = f(l_1) + l_1 f(l_2 ... l_n), evaluated from the right.
  QVector acc(c.degree() + 1);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const auto [idx, step] = *it;
    const QMatrix& rho = step > 0 ? data.forward[idx] : data.backward[idx];
    const QVector& f = step > 0 ? data.value_fwd[0][idx] : data.value_bwd[0][idx];
    acc = add(f, rho * acc);
  }
  return as_poly(c.degree(), c.variant(), std::move(acc));
}

HomogeneousPoly derivation_value(const CocycleClass& c, const IntMatrix2& g) {
  return derivation_value_on_word(c, c.presentation().word_for(g));
}

// ------------------------------------------------------------- linear algebra

CochainComplexData cochain_data(const GroupPresentation& g, const Module& m) {
  const std::size_t n = m.dimension();
  const auto& gens = g.generators();
  const auto& rels = g.relators();
  CochainComplexData d;
  d.module_dimension = n;
  d.fox_matrix = QMatrix(rels.size() * n, gens.size() * n);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto fox = fox_derivative(rels[r], gens[i].name);
      if (!fox.terms.empty()) d.fox_matrix.set_block(r * n, i * n, fox.action(g, m));
    }
  d.coboundary_matrix = QMatrix(gens.size() * n, n);
  const QMatrix id = QMatrix::identity(n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    d.coboundary_matrix.set_block(i * n, 0, id - m.action(gens[i].matrix));
  d.z1_basis = kernel_basis(d.fox_matrix);
  d.dim_z1 = d.z1_basis.size();
  d.dim_b1 = rank(d.coboundary_matrix);
  return d;
}

std::size_t h1_dimension(const GroupPresentation& g, const Module& m) {
  return cochain_data(g, m).dim_h1();
}

std::vector<QVector> invariants(const GroupPresentation& g, const Module& m) {
  const std::size_t n = m.dimension();
  QMatrix stacked(g.generators().size() * n, n);
  const QMatrix id = QMatrix::identity(n);
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    stacked.set_block(i * n, 0, m.action(g.generators()[i].matrix) - id);
  return kernel_basis(stacked);
}

// ------------------------------------------------------------ CohomologySpace

CohomologySpace h1(GroupName group, unsigned degree, Variant variant) {
  const auto& g = presentation(group);
  const auto data = cochain_data(g, symmetric_power_module(degree, variant));
  CohomologySpace space;
  space.group_ = group;
  space.degree_ = degree;
  space.variant_ = variant;
  space.coboundary_ = data.coboundary_matrix;
  space.dim_z1_ = data.dim_z1;
  space.dim_b1_ = data.dim_b1;

  const std::size_t n = degree + 1;
  SubspaceReducer span(data.coboundary_matrix.rows(), {});
  for (std::size_t c = 0; c < data.coboundary_matrix.cols(); ++c) span.insert(data.coboundary_matrix.column(c));
  for (const auto& z : data.z1_basis) {
    if (!span.insert(z)) continue;
    std::vector<HomogeneousPoly> values;
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      values.emplace_back(degree, variant,
                          QVector(z.begin() + static_cast<std::ptrdiff_t>(i * n),
                                  z.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
    space.basis_.emplace_back(group, degree, variant, std::move(values));
  }
  if (space.basis_.size() != data.dim_h1()) throw std::logic_error("h1: basis size disagrees with dim Z1 - dim B1");
  return space;
}

bool CohomologySpace::is_coboundary(const CocycleClass& c) const {
  return solve(coboundary_, c.flatten()).consistent;
}

QVector CohomologySpace::coordinates(const CocycleClass& c) const {
  if (c.group() != group_ || c.degree() != degree_ || c.variant() != variant_)
    throw std::invalid_argument("coordinates: class lives in a different cohomology space");
  if (!c.satisfies_cocycle_conditions()) throw std::invalid_argument("coordinates: not a cocycle");
  std::vector<QVector> cols;
  for (const auto& b : basis_) cols.push_back(b.flatten());
  for (std::size_t j = 0; j < coboundary_.cols(); ++j) cols.push_back(coboundary_.column(j));
  const auto sol = solve(QMatrix::from_columns(coboundary_.rows(), cols), c.flatten());
  if (!sol.consistent) throw std::logic_error("coordinates: cocycle outside span of basis and coboundaries");
  return QVector(sol.solution.begin(), sol.solution.begin() + static_cast<std::ptrdiff_t>(basis_.size()));
}

std::vector<HomogeneousPoly> h0(GroupName group, unsigned degree, Variant variant) {
  std::vector<HomogeneousPoly> out;
  for (auto& v : invariants(presentation(group), symmetric_power_module(degree, variant)))
    out.emplace_back(degree, variant, std::move(v));
  return out;
}

std::vector<HomogeneousPoly> cyclic_invariants(const IntMatrix2& g, unsigned degree, Variant variant) {
  std::vector<HomogeneousPoly> out;
  const QMatrix m = action_matrix(g, degree, variant) - QMatrix::identity(degree + 1);
  for (auto& v : kernel_basis(m)) out.emplace_back(degree, variant, std::move(v));
  return out;
}

// --------------------------------------------------------------- restrictions

CyclicRestriction restrict_value_to_cyclic(const IntMatrix2& g, const HomogeneousPoly& value) {
  CyclicRestriction r;
  r.kind = classify(g);
  r.value = value;
  r.reduced = HomogeneousPoly(value.degree(), value.variant());
  if (r.kind != ElementKind::parabolic && r.kind != ElementKind::hyperbolic) return r;
  const unsigned n = value.degree() + 1;
  const auto reducer = SubspaceReducer::column_space(action_matrix(g, value.degree(), value.variant()) -
                                                     QMatrix::identity(n));
  r.coinvariant_dimension = n - reducer.dimension();
  r.reduced = HomogeneousPoly(value.degree(), value.variant(), reducer.reduce(value.coefficients()));
  r.is_zero = r.reduced.is_zero();
  return r;
}

CyclicRestriction restrict_to_cyclic(const CocycleClass& c, const IntMatrix2& g) {
  return restrict_value_to_cyclic(g, derivation_value(c, g));
}

DecomposableClass make_decomposable(const IntMatrix2& gamma, unsigned power) {
  if (power == 0) throw std::invalid_argument("decomposable classes need power >= 1");
  DecomposableClass d{gamma, power, s_gamma(gamma).pow(power)};
  if (act(gamma, d.value) != d.value) throw std::logic_error("s_gamma^m is not invariant under gamma");
  return d;
}

Rational pair_decomposable(const CocycleClass& c, const DecomposableClass& d) {
  if (c.variant() != Variant::dual || c.degree() != d.value.degree())
    throw std::invalid_argument("pair_decomposable: class must take values in the dual module of degree " +
                                std::to_string(d.value.degree()));
  return pairing(derivation_value(c, d.gamma), d.value);
}

// ----------------------------------------------------------------------- ball

std::vector<BallElement> enumerate_ball(const GroupPresentation& g, unsigned radius) {
  std::vector<BallElement> ball{BallElement{}};
  std::unordered_set<IntMatrix2, IntMatrix2Hash> seen{IntMatrix2::identity()};
  std::size_t frontier_begin = 0;
  for (unsigned len = 1; len <= radius; ++len) {
    const std::size_t frontier_end = ball.size();
    for (std::size_t e = frontier_begin; e < frontier_end; ++e) {
      for (std::size_t i = 0; i < g.generators().size(); ++i)
        for (int step : {1, -1}) {
          const IntMatrix2& gm = g.generators()[i].matrix;
          IntMatrix2 next = (step > 0 ? gm : gm.inverse()) * ball[e].matrix;
          if (!seen.insert(next).second) continue;
          GroupWord w({{g.generators()[i].name, step}});
          w.append(ball[e].word);
          ball.push_back({std::move(next), std::move(w), len, static_cast<std::ptrdiff_t>(e), i, step});
        }
    }
    frontier_begin = frontier_end;
  }
  return ball;
}

std::vector<std::vector<HomogeneousPoly>> derivation_values_on_ball(const std::vector<CocycleClass>& classes,
                                                                    const std::vector<BallElement>& ball) {
  std::vector<std::vector<HomogeneousPoly>> out(ball.size());
  if (classes.empty()) return out;
  const auto& first = classes.front();
  const auto& g = first.presentation();
  const auto data = generator_data(g, first.degree(), first.variant(), classes);
  const std::size_t n = first.degree() + 1;
  std::vector<std::vector<QVector>> flat(ball.size());
  for (std::size_t e = 0; e < ball.size(); ++e) {
    const auto& el = ball[e];
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (el.parent < 0) {
        flat[e].emplace_back(n);
        continue;
      }
      // f(l * x) = f(l) + l f(x)
      const auto p = static_cast<std::size_t>(el.parent);
      const QMatrix& rho = el.exponent > 0 ? data.forward[el.generator] : data.backward[el.generator];
      const QVector& fl = el.exponent > 0 ? data.value_fwd[c][el.generator] : data.value_bwd[c][el.generator];
      flat[e].push_back(add(fl, rho * flat[p][c]));
    }
  }
  for (std::size_t e = 0; e < ball.size(); ++e)
    for (auto& v : flat[e]) out[e].emplace_back(first.degree(), first.variant(), v);
  return out;
}

// ------------------------------------------------------------------- spanning

SpanningCertificate spanning_rank_over(const CohomologySpace& space, unsigned m,
                                       const std::vector<IntMatrix2>& elements) {
  if (space.degree() != 2 * m || space.variant() != Variant::dual)
    throw std::invalid_argument("spanning_rank: cohomology space must have dual coefficients of degree 2m");
  SpanningCertificate cert;
  cert.dim_h1 = space.dimension();
  cert.enumerated = elements.size();
  if (cert.dim_h1 == 0) return cert;
  SubspaceReducer rows(cert.dim_h1, {});
  for (const auto& gamma : elements) {
    const auto kind = classify(gamma);
    if (kind == ElementKind::identity || kind == ElementKind::minus_identity) continue;
    const auto d = make_decomposable(gamma, m);
    QVector row;
    for (const auto& c : space.basis()) row.push_back(pair_decomposable(c, d));
    if (rows.insert(row)) cert.detecting.push_back(gamma);
    if (rows.dimension() == cert.dim_h1) break;
  }
  cert.rank = rows.dimension();
  return cert;
}

SpanningCertificate spanning_rank(GroupName group, unsigned m, unsigned radius) {
  if (m == 0) throw std::invalid_argument("spanning_rank: weight index must be >= 1");
  const auto space = h1(group, 2 * m, Variant::dual);
  SpanningCertificate cert;
  cert.dim_h1 = space.dimension();
  cert.radius = radius;
  if (cert.dim_h1 == 0) return cert;
  const auto ball = enumerate_ball(presentation(group), radius);
  cert.enumerated = ball.size();
  const auto values = derivation_values_on_ball(space.basis(), ball);
  SubspaceReducer rows(cert.dim_h1, {});
  for (std::size_t e = 0; e < ball.size(); ++e) {
    const auto kind = classify(ball[e].matrix);
    if (kind == ElementKind::identity || kind == ElementKind::minus_identity) continue;
    const auto s = s_gamma(ball[e].matrix).pow(m);
    QVector row;
    for (const auto& v : values[e]) row.push_back(pairing(v, s));
    if (rows.insert(row)) cert.detecting.push_back(ball[e].matrix);
    if (rows.dimension() == cert.dim_h1) break;
  }
  cert.rank = rows.dimension();
  return cert;
}

std::vector<ClassDetection> detect_classes(const CohomologySpace& space, unsigned radius) {
  std::vector<ClassDetection> out;
  for (std::size_t i = 0; i < space.dimension(); ++i)
    out.push_back({i, std::nullopt, HomogeneousPoly(space.degree(), space.variant())});
  if (out.empty()) return out;
  const auto ball = enumerate_ball(presentation(space.group()), radius);
  const auto values = derivation_values_on_ball(space.basis(), ball);
  // Within a word length, positive-trace parabolics come first.
  std::vector<std::size_t> order(ball.size());
  for (std::size_t e = 0; e < ball.size(); ++e) order[e] = e;
  const auto rank_of = [&](std::size_t e) {
    const bool unipotent = classify(ball[e].matrix) == ElementKind::parabolic && ball[e].matrix.trace() > 0;
    return std::pair{ball[e].length, unipotent ? 0 : 1};
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rank_of(x) < rank_of(y); });
  std::size_t remaining = out.size();
  for (std::size_t e : order) {
    if (remaining == 0) break;
    const auto kind = classify(ball[e].matrix);
    if (kind != ElementKind::parabolic && kind != ElementKind::hyperbolic) continue;
    const auto reducer = SubspaceReducer::column_space(action_matrix(ball[e].matrix, space.degree(), space.variant()) -
                                                       QMatrix::identity(space.degree() + 1));
    for (auto& det : out) {
      if (det.detecting_gamma) continue;
      QVector red = reducer.reduce(values[e][det.class_index].coefficients());
      if (is_zero(red)) continue;
      det.detecting_gamma = ball[e].matrix;
      det.value = HomogeneousPoly(space.degree(), space.variant(), std::move(red));
      --remaining;
    }
  }
  return out;
}

// ------------------------------------------------------------------ parabolic

bool ParabolicAnalysis::each_cusp_one_dimensional() const {
  for (const auto& c : cusps)
    if (c.coinvariant_dimension != 1) return false;
  return true;
}

ParabolicAnalysis parabolic_analysis(GroupName group, unsigned m) {
  if (m == 0) throw std::invalid_argument("parabolic_analysis: weight index must be >= 1");
  const auto space = h1(group, 2 * m, Variant::dual);
  ParabolicAnalysis out;
  out.dim_h1 = space.dimension();
  const unsigned n = 2 * m + 1;
  QMatrix combined;
  for (const auto& cusp : cusp_orbits(presentation(group))) {
    const auto reducer = SubspaceReducer::column_space(
        action_matrix(cusp.stabilizer_generator, 2 * m, Variant::dual) - QMatrix::identity(n));
    QMatrix block(n, space.dimension());
    for (std::size_t i = 0; i < space.dimension(); ++i) {
      const QVector red = reducer.reduce(derivation_value(space.basis()[i], cusp.stabilizer_generator).coefficients());
      for (unsigned r = 0; r < n; ++r) block(r, i) = red[r];
    }
    out.cusps.push_back({cusp, n - reducer.dimension(), space.dimension() ? rank(block) : 0});
    combined = QMatrix::stack(combined, block);
  }
  out.combined_rank = space.dimension() ? rank(combined) : 0;
  out.dim_parabolic = out.dim_h1 - out.combined_rank;
  return out;
}

std::size_t shapiro_h1(unsigned degree, Variant variant) {
  return h1_dimension(sl2z_presentation(), CoinducedModule::with_default_cosets(degree, variant).as_module());
}

}  // namespace gammacoh
