#include "gammacoh/euler_pontryagin.hpp"

#include <cstdlib>
#include <stdexcept>

namespace gammacoh {

int SignedPermutation::determinant() const {
  // sign of the underlying permutation times the product of the signs
  int det = 1;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(std::abs(image[j])) - 1) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) det = -det;
  }
  for (int v : image)
    if (v < 0) det = -det;
  return det;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing signed permutations of different size");
  SignedPermutation r;
  for (int v : other.image) {
    int inner = image[static_cast<std::size_t>(std::abs(v)) - 1];
    r.image.push_back(v < 0 ? -inner : inner);
  }
  return r;
}

SignedPermutation SignedPermutation::identity(std::size_t d) {
  SignedPermutation r;
  for (std::size_t i = 1; i <= d; ++i) r.image.push_back(static_cast<int>(i));
  return r;
}

bool SignedPermutation::valid() const {
  std::vector<bool> hit(image.size(), false);
  for (int v : image) {
    auto a = static_cast<std::size_t>(std::abs(v));
    if (a == 0 || a > image.size() || hit[a - 1]) return false;
    hit[a - 1] = true;
  }
  return true;
}

EulerPontryaginPoly::EulerPontryaginPoly(unsigned d, unsigned n)
    : EulerPontryaginPoly(d, n, 4 * (n + 1)) {}

EulerPontryaginPoly::EulerPontryaginPoly(unsigned d, unsigned n, unsigned degree_cap)
    : d_(d), n_(n), cap_(degree_cap) {
  if (d == 0) throw std::invalid_argument("EulerPontryaginPoly: need at least one factor");
  if (n % 2 == 0) throw std::invalid_argument("EulerPontryaginPoly: sphere dimension must be odd");
}

EulerPontryaginPoly EulerPontryaginPoly::euler(unsigned d, unsigned n, unsigned i) {
  EulerPontryaginPoly f(d, n);
  Exponents e(f.variable_count(), 0);
  e[f.euler_index(i)] = 1;
  f.add_term(e, 1);
  return f;
}

EulerPontryaginPoly EulerPontryaginPoly::pontryagin(unsigned d, unsigned n, unsigned j, unsigned i) {
  EulerPontryaginPoly f(d, n);
  Exponents e(f.variable_count(), 0);
  e[f.pontryagin_index(j, i)] = 1;
  f.add_term(e, 1);
  return f;
}

EulerPontryaginPoly EulerPontryaginPoly::constant(unsigned d, unsigned n, const Rational& c) {
  EulerPontryaginPoly f(d, n);
  f.add_term(Exponents(f.variable_count(), 0), c);
  return f;
}

std::size_t EulerPontryaginPoly::euler_index(unsigned i) const {
  if (i < 1 || i > d_) throw std::out_of_range("Euler class index out of range");
  return i - 1;
}

std::size_t EulerPontryaginPoly::pontryagin_index(unsigned j, unsigned i) const {
  if (j < 1 || j > pontryagin_count() || i < 1 || i > d_)
    throw std::out_of_range("Pontryagin class index out of range");
  return d_ + (j - 1) * d_ + (i - 1);
}

unsigned EulerPontryaginPoly::weighted_degree(const Exponents& e) const {
  unsigned deg = 0;
  for (unsigned i = 0; i < d_; ++i) deg += e[i] * (n_ + 1);
  for (unsigned j = 1; j <= pontryagin_count(); ++j)
    for (unsigned i = 0; i < d_; ++i) deg += e[d_ + (j - 1) * d_ + i] * 4 * j;
  return deg;
}

void EulerPontryaginPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variable_count()) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero() || weighted_degree(e) > cap_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void EulerPontryaginPoly::check_compatible(const EulerPontryaginPoly& o) const {
  if (o.d_ != d_ || o.n_ != n_) throw std::invalid_argument("EulerPontryaginPoly: incompatible rings");
}

EulerPontryaginPoly& EulerPontryaginPoly::operator+=(const EulerPontryaginPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

EulerPontryaginPoly EulerPontryaginPoly::scaled(const Rational& s) const {
  EulerPontryaginPoly r(d_, n_, cap_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

EulerPontryaginPoly operator*(const EulerPontryaginPoly& a, const EulerPontryaginPoly& b) {
  a.check_compatible(b);
  EulerPontryaginPoly r(a.d_, a.n_, a.cap_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      EulerPontryaginPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const EulerPontryaginPoly& a, const EulerPontryaginPoly& b) {
  return a.d_ == b.d_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

EulerPontryaginPoly EulerPontryaginPoly::substitute(const std::vector<EulerPontryaginPoly>& images) const {
  if (images.size() != variable_count()) throw std::invalid_argument("substitute: wrong number of images");
  EulerPontryaginPoly r(d_, n_, cap_);
  for (const auto& [e, c] : terms_) {
    EulerPontryaginPoly term = constant(d_, n_, c);
    term.cap_ = cap_;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (unsigned k = 0; k < e[v]; ++k) term = term * images[v];
    r += term;
  }
  return r;
}

EulerPontryaginPoly EulerPontryaginPoly::euler_part() const {
  EulerPontryaginPoly r(d_, n_, cap_);
  for (const auto& [e, c] : terms_) {
    bool has_p = false;
    for (std::size_t v = d_; v < e.size(); ++v) has_p = has_p || e[v] != 0;
    if (!has_p) r.add_term(e, c);
  }
  return r;
}

std::string EulerPontryaginPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      if (v < d_) {
        mono += "e" + std::to_string(v + 1);
      } else {
        std::size_t j = (v - d_) / d_ + 1, i = (v - d_) % d_ + 1;
        mono += "p" + std::to_string(j) + "_" + std::to_string(i);
      }
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    Rational mag = c.sign() < 0 ? -c : c;
    std::string term = mono.empty() ? mag.to_string()
                                    : (mag == Rational(1) ? mono : mag.to_string() + "*" + mono);
    if (out.empty()) out = (c.sign() < 0 ? "-" : "") + term;
    else out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out;
}

EulerPontryaginPoly sigma_act(const SignedPermutation& sigma, const EulerPontryaginPoly& f) {
  const unsigned d = f.factors(), n = f.sphere_dimension();
  if (sigma.size() != d || !sigma.valid()) throw std::invalid_argument("sigma_act: not a signed permutation of the factors");
  if (sigma.determinant() != 1) throw std::invalid_argument("sigma_act: signed permutation has determinant -1");
  std::vector<EulerPontryaginPoly> images;
  for (unsigned j = 1; j <= d; ++j) {
    int s = sigma.image[j - 1];
    images.push_back(EulerPontryaginPoly::euler(d, n, static_cast<unsigned>(std::abs(s))).scaled(s < 0 ? -1 : 1));
  }
  for (unsigned pj = 1; pj <= f.pontryagin_count(); ++pj)
    for (unsigned i = 1; i <= d; ++i)
      images.push_back(EulerPontryaginPoly::pontryagin(d, n, pj, static_cast<unsigned>(std::abs(sigma.image[i - 1]))));
  return f.substitute(images);
}

EulerPontryaginPoly transvection_act(unsigned i, unsigned j, int power, const EulerPontryaginPoly& f) {
  const unsigned d = f.factors(), n = f.sphere_dimension();
  if (i == j) throw std::invalid_argument("transvection_act: indices must differ");
  if (i < 1 || j < 1 || i > d || j > d) throw std::invalid_argument("transvection_act: index out of range");
  if (power != 1 && power != 2) throw std::invalid_argument("transvection_act: power must be 1 or 2");
  std::vector<EulerPontryaginPoly> images;
  for (unsigned k = 1; k <= d; ++k) {
    auto img = EulerPontryaginPoly::euler(d, n, k);
    if (k == i) img += EulerPontryaginPoly::euler(d, n, j).scaled(-power);
    images.push_back(img);
  }
  for (unsigned pj = 1; pj <= f.pontryagin_count(); ++pj)
    for (unsigned k = 1; k <= d; ++k) images.push_back(EulerPontryaginPoly::pontryagin(d, n, pj, k));
  return f.substitute(images);
}

}  // namespace gammacoh
