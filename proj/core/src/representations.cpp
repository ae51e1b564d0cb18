#include "gammacoh/representations.hpp"

#include <stdexcept>
#include <utility>

namespace gammacoh {

namespace {

const char* first_var(Variant v) { return v == Variant::standard ? "x" : "ex"; }
const char* second_var(Variant v) { return v == Variant::standard ? "y" : "ey"; }

using IntPoly = std::vector<Integer>;

IntPoly convolve(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Powers 0..n of the binary linear form u X + v Y, descending in X.
std::vector<IntPoly> form_powers(const Integer& u, const Integer& v, unsigned n) {
  std::vector<IntPoly> out{IntPoly{Integer(1)}};
  const IntPoly form{u, v};
  for (unsigned i = 1; i <= n; ++i) out.push_back(convolve(out.back(), form));
  return out;
}

void check_same_module(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.degree() != b.degree() || a.variant() != b.variant())
    throw std::invalid_argument("polynomials live in different modules");
}

}  // namespace

std::string to_string(Variant v) { return v == Variant::standard ? "standard" : "dual"; }

Variant parse_variant(std::string_view text) {
  if (text == "standard") return Variant::standard;
  if (text == "dual" || text == "trivial") return Variant::dual;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

// ------------------------------------------------------------ HomogeneousPoly

HomogeneousPoly::HomogeneousPoly(unsigned degree, Variant variant)
    : degree_(degree), variant_(variant), coeffs_(degree + 1) {}

HomogeneousPoly::HomogeneousPoly(unsigned degree, Variant variant, QVector coefficients)
    : degree_(degree), variant_(variant), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != degree_ + 1)
    throw std::invalid_argument("HomogeneousPoly: coefficient count must be degree + 1");
}

HomogeneousPoly HomogeneousPoly::monomial(unsigned degree, Variant variant, unsigned p,
                                          const Rational& c) {
  if (p > degree) throw std::out_of_range("HomogeneousPoly::monomial: index exceeds degree");
  HomogeneousPoly f(degree, variant);
  f.coeffs_[p] = c;
  return f;
}

bool HomogeneousPoly::is_zero() const { return gammacoh::is_zero(coeffs_); }

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& o) {
  check_same_module(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& o) {
  check_same_module(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

HomogeneousPoly HomogeneousPoly::operator-() const { return scaled(-1); }

HomogeneousPoly HomogeneousPoly::scaled(const Rational& s) const {
  HomogeneousPoly r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
  if (a.variant_ != b.variant_) throw std::invalid_argument("product of polynomials in different variables");
  HomogeneousPoly r(a.degree_ + b.degree_, a.variant_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

HomogeneousPoly HomogeneousPoly::pow(unsigned m) const {
  HomogeneousPoly r(0, variant_, {Rational(1)});
  for (unsigned i = 0; i < m; ++i) r = r * *this;
  return r;
}

std::string HomogeneousPoly::monomial_key(unsigned degree, Variant variant, unsigned p) {
  const unsigned ex = degree - p;
  std::string key;
  if (ex > 0) key += std::string(first_var(variant)) + "^" + std::to_string(ex);
  if (p > 0) {
    if (!key.empty()) key += '*';
    key += std::string(second_var(variant)) + "^" + std::to_string(p);
  }
  return key.empty() ? "1" : key;
}

std::string HomogeneousPoly::to_string() const {
  std::string out;
  for (unsigned p = 0; p <= degree_; ++p) {
    const Rational& c = coeffs_[p];
    if (c.is_zero()) continue;
    std::string mono;
    auto add_var = [&](const char* v, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += '*';
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add_var(first_var(variant_), degree_ - p);
    add_var(second_var(variant_), p);
    Rational mag = c.sign() < 0 ? -c : c;
    std::string term;
    if (mono.empty()) term = mag.to_string();
    else if (mag == Rational(1)) term = mono;
    else term = mag.to_string() + "*" + mono;
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + term;
    else out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// -------------------------------------------------------------------- actions

QMatrix action_matrix(const IntMatrix2& g, unsigned degree, Variant variant) {
  // Images of the first and second variable as linear forms.
  Integer u1, v1, u2, v2;
  if (variant == Variant::standard) {
    u1 = g.a(), v1 = g.c();
    u2 = g.b(), v2 = g.d();
  } else {
    u1 = g.d(), v1 = -g.b();
    u2 = -g.c(), v2 = g.a();
  }
  const auto first = form_powers(u1, v1, degree);
  const auto second = form_powers(u2, v2, degree);
  QMatrix m(degree + 1, degree + 1);
  for (unsigned p = 0; p <= degree; ++p) {
    const IntPoly col = convolve(first[degree - p], second[p]);
    for (unsigned r = 0; r <= degree; ++r)
      if (col[r] != 0) m(r, p) = Rational(col[r]);
  }
  return m;
}

HomogeneousPoly act(const IntMatrix2& g, const HomogeneousPoly& f) {
  return {f.degree(), f.variant(), action_matrix(g, f.degree(), f.variant()) * f.coefficients()};
}

HomogeneousPoly s_gamma(const IntMatrix2& g) {
  return {2, Variant::standard, {Rational(g.b()), Rational(g.d() - g.a()), Rational(-g.c())}};
}

Rational pairing(const HomogeneousPoly& w, const HomogeneousPoly& v) {
  if (w.variant() != Variant::dual || v.variant() != Variant::standard)
    throw std::invalid_argument("pairing expects a dual polynomial and a standard polynomial");
  if (w.degree() != v.degree())
    throw std::invalid_argument("pairing: degree mismatch (" + std::to_string(w.degree()) + " vs " +
                                std::to_string(v.degree()) + ")");
  const unsigned k = w.degree();
  Rational s;
  for (unsigned p = 0; p <= k; ++p) {
    if (w.coefficient(p).is_zero() || v.coefficient(p).is_zero()) continue;
    s += w.coefficient(p) * v.coefficient(p) / Rational(binomial(k, p));
  }
  return s;
}

std::string UnivariateTerm::to_string() const {
  if (coefficient.is_zero()) return "0";
  std::string mono = degree == 0 ? "" : variable + (degree > 1 ? "^" + std::to_string(degree) : "");
  if (mono.empty()) return coefficient.to_string();
  if (coefficient == Rational(1)) return mono;
  if (coefficient == Rational(-1)) return "-" + mono;
  return coefficient.to_string() + "*" + mono;
}

UnivariateTerm delta_star(const HomogeneousPoly& f) {
  if (f.variant() != Variant::dual) throw std::invalid_argument("delta_star expects a dual polynomial");
  Rational s;
  for (const auto& c : f.coefficients()) s += c;
  return {"e", f.degree(), s};
}

UnivariateTerm pr_x(const HomogeneousPoly& f) {
  if (f.variant() != Variant::dual) throw std::invalid_argument("pr_x expects a dual polynomial");
  return {"ex", f.degree(), f.coefficient(0)};
}

// -------------------------------------------------------------------- modules

Module::Module(std::string label, std::size_t dimension, ActionFn action)
    : label_(std::move(label)), dim_(dimension), action_(std::move(action)) {}

Module symmetric_power_module(unsigned degree, Variant variant) {
  return Module("Sym^" + std::to_string(degree) + "(" + to_string(variant) + ")", degree + 1,
                [degree, variant](const IntMatrix2& g) { return action_matrix(g, degree, variant); });
}

CoinducedModule::CoinducedModule(unsigned degree, Variant variant, std::vector<IntMatrix2> coset_reps)
    : degree_(degree), variant_(variant), reps_(std::move(coset_reps)) {
  if (reps_.size() != 3)
    throw std::invalid_argument("coinduction from the theta subgroup needs 3 coset representatives");
  for (std::size_t i = 0; i < reps_.size(); ++i)
    for (std::size_t j = i + 1; j < reps_.size(); ++j)
      if (theta_member(reps_[i] * reps_[j].inverse()))
        throw std::invalid_argument("coset representatives " + reps_[i].to_string() + " and " +
                                    reps_[j].to_string() + " lie in the same coset");
}

CoinducedModule CoinducedModule::with_default_cosets(unsigned degree, Variant variant) {
  return {degree, variant, {IntMatrix2::identity(), generators::T(), generators::L()}};
}

std::size_t CoinducedModule::coset_of(const IntMatrix2& x) const {
  for (std::size_t j = 0; j < reps_.size(); ++j)
    if (theta_member(x * reps_[j].inverse())) return j;
  throw std::logic_error("CoinducedModule: element outside every coset");
}

QMatrix CoinducedModule::action_matrix(const IntMatrix2& g) const {
  const std::size_t n = degree_ + 1;
  QMatrix m(dimension(), dimension());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    const IntMatrix2 rg = reps_[i] * g;
    const std::size_t j = coset_of(rg);
    const IntMatrix2 h = rg * reps_[j].inverse();
    m.set_block(i * n, j * n, gammacoh::action_matrix(h, degree_, variant_));
  }
  return m;
}

std::vector<HomogeneousPoly> CoinducedModule::act(const IntMatrix2& g,
                                                  const std::vector<HomogeneousPoly>& element) const {
  if (element.size() != reps_.size()) throw std::invalid_argument("coinduced element has wrong arity");
  QVector flat;
  for (const auto& f : element) {
    if (f.degree() != degree_ || f.variant() != variant_)
      throw std::invalid_argument("coinduced element component in wrong module");
    flat.insert(flat.end(), f.coefficients().begin(), f.coefficients().end());
  }
  const QVector img = action_matrix(g) * flat;
  std::vector<HomogeneousPoly> out;
  const std::size_t n = degree_ + 1;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    out.emplace_back(degree_, variant_,
                     QVector(img.begin() + static_cast<std::ptrdiff_t>(i * n),
                             img.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
  return out;
}

Module CoinducedModule::as_module() const {
  CoinducedModule self = *this;
  return Module("CoInd Sym^" + std::to_string(degree_) + "(" + to_string(variant_) + ")", dimension(),
                [self](const IntMatrix2& g) { return self.action_matrix(g); });
}

}  // namespace gammacoh
