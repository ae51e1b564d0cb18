#include "gammacoh/modular_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "gammacoh/qmatrix.hpp"

namespace gammacoh {

namespace {

bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// k minimizing |a - step*k*c| (c != 0); ties go to the smaller k.
Integer nearest_multiple(const Integer& a, const Integer& c, long step) {
  Integer m = step * c;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer best = k;
  Integer best_abs = abs(Integer(a - k * m));
  for (Integer cand : {Integer(k - 1), Integer(k + 1)}) {
    Integer r = abs(Integer(a - cand * m));
    if (r < best_abs || (r == best_abs && cand < best)) {
      best = cand;
      best_abs = r;
    }
  }
  return best;
}

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("word exponent does not fit in a long");
  return x.get_si();
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix2

IntMatrix2::IntMatrix2() : a_(1), b_(0), c_(0), d_(1) {}

IntMatrix2::IntMatrix2(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1)
    throw std::invalid_argument("matrix " + to_string() + " does not have determinant 1");
}

IntMatrix2::IntMatrix2(Unchecked, Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

IntMatrix2 IntMatrix2::parse(std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 2) throw std::invalid_argument("matrix literal must look like 'a,b;c,d'");
  auto r0 = split(rows[0], ',');
  auto r1 = split(rows[1], ',');
  if (r0.size() != 2 || r1.size() != 2)
    throw std::invalid_argument("matrix literal must look like 'a,b;c,d'");
  return IntMatrix2(parse_integer(r0[0]), parse_integer(r0[1]), parse_integer(r1[0]),
                    parse_integer(r1[1]));
}

IntMatrix2 IntMatrix2::inverse() const { return {Unchecked{}, d_, -b_, -c_, a_}; }

IntMatrix2 IntMatrix2::operator-() const { return {Unchecked{}, -a_, -b_, -c_, -d_}; }

IntMatrix2 IntMatrix2::pow(long e) const {
  IntMatrix2 base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  IntMatrix2 result;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

bool IntMatrix2::is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
bool IntMatrix2::is_minus_identity() const { return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1; }

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  return {IntMatrix2::Unchecked{}, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

bool operator==(const IntMatrix2& x, const IntMatrix2& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::string IntMatrix2::to_string() const {
  return a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," + d_.get_str();
}

std::size_t IntMatrix2Hash::operator()(const IntMatrix2& m) const {
  auto h = [](const Integer& x) {
    std::size_t limb = mpz_size(x.get_mpz_t()) ? mpz_getlimbn(x.get_mpz_t(), 0) : 0;
    return limb * 2 + (sgn(x) < 0 ? 1 : 0);
  };
  std::size_t seed = h(m.a());
  for (const Integer* x : {&m.b(), &m.c(), &m.d()})
    seed ^= h(*x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

namespace generators {
IntMatrix2 alpha() { return {0, 1, -1, 0}; }
IntMatrix2 beta() { return {0, 1, -1, 1}; }
IntMatrix2 T() { return {1, 1, 0, 1}; }
IntMatrix2 S() { return {0, -1, 1, 0}; }
IntMatrix2 U() { return {1, 2, 0, 1}; }
IntMatrix2 L() { return {1, 0, 1, 1}; }
}  // namespace generators

// ------------------------------------------------------------ classification

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::identity: return "identity";
    case ElementKind::minus_identity: return "minus_identity";
    case ElementKind::elliptic: return "elliptic";
    case ElementKind::parabolic: return "parabolic";
    case ElementKind::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

ElementKind classify(const IntMatrix2& g) {
  if (g.is_identity()) return ElementKind::identity;
  if (g.is_minus_identity()) return ElementKind::minus_identity;
  Integer t = abs(g.trace());
  if (t < 2) return ElementKind::elliptic;
  if (t == 2) return ElementKind::parabolic;
  return ElementKind::hyperbolic;
}

bool theta_member(const IntMatrix2& g) {
  return (is_odd(g.a()) != is_odd(g.b())) && (is_odd(g.c()) != is_odd(g.d()));
}

bool gamma_d_member(const std::vector<std::vector<Integer>>& m, unsigned n) {
  const std::size_t d = m.size();
  if (d == 0) return false;
  QMatrix q(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) return false;
    for (std::size_t j = 0; j < d; ++j) q(i, j) = Rational(m[i][j]);
  }
  if (determinant(q) != Rational(1)) return false;
  if (n == 1 || n == 3 || n == 7) return true;
  for (const auto& row : m) {
    auto odd = std::count_if(row.begin(), row.end(), [](const Integer& x) { return is_odd(x); });
    if (odd != 1) return false;
  }
  return true;
}

// ------------------------------------------------------------------ GroupWord

GroupWord::GroupWord(const std::vector<Letter>& letters) {
  for (const auto& l : letters) append(l.generator, l.exponent);
}

std::size_t GroupWord::length() const {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(l.exponent < 0 ? -l.exponent : l.exponent);
  return n;
}

void GroupWord::append(const std::string& generator, long exponent) {
  if (exponent == 0) return;
  if (!letters_.empty() && letters_.back().generator == generator) {
    letters_.back().exponent += exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({generator, exponent});
}

void GroupWord::append(const GroupWord& other) {
  for (const auto& l : other.letters_) append(l.generator, l.exponent);
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->generator, -it->exponent);
  return w;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '*';
    s += letters_[i].generator;
    if (letters_[i].exponent != 1) s += "^" + std::to_string(letters_[i].exponent);
  }
  return s;
}

GroupWord GroupWord::parse(std::string_view text) {
  GroupWord w;
  std::string t = trim(text);
  if (t.empty() || t == "1") return w;
  for (const auto& part : split(t, '*')) {
    if (part.empty()) throw std::invalid_argument("empty letter in word '" + t + "'");
    auto caret = part.find('^');
    std::string name = trim(part.substr(0, caret));
    if (name.empty()) throw std::invalid_argument("missing generator name in '" + part + "'");
    long e = 1;
    if (caret != std::string::npos) e = to_long(parse_integer(trim(part.substr(caret + 1))));
    w.append(name, e);
  }
  return w;
}

// --------------------------------------------------------------- presentation

std::string to_string(GroupName g) { return g == GroupName::SL2Z ? "sl2z" : "theta"; }

GroupName parse_group_name(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "sl2z") return GroupName::SL2Z;
  if (s == "theta") return GroupName::Theta;
  throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected sl2z or theta)");
}

std::size_t GroupPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "' for group " +
                              to_string(name_));
}

const IntMatrix2& GroupPresentation::generator_matrix(std::string_view name) const {
  return generators_[generator_index(name)].matrix;
}

bool GroupPresentation::contains(const IntMatrix2& g) const {
  return name_ == GroupName::SL2Z || theta_member(g);
}

GroupWord GroupPresentation::word_for(const IntMatrix2& g) const {
  return name_ == GroupName::SL2Z ? sl2z_word(g) : theta_word(g);
}

GroupPresentation sl2z_presentation() {
  GroupPresentation p;
  p.name_ = GroupName::SL2Z;
  p.generators_ = {{"A", generators::alpha()}, {"B", generators::beta()}};
  p.relators_ = {GroupWord({{"A", 4}}), GroupWord({{"A", 2}, {"B", -3}})};
  return p;
}

GroupPresentation theta_presentation() {
  GroupPresentation p;
  p.name_ = GroupName::Theta;
  p.generators_ = {{"S", generators::S()}, {"U", generators::U()}, {"Z", -IntMatrix2::identity()}};
  p.relators_ = {GroupWord({{"S", 4}}), GroupWord({{"S", 2}, {"U", 1}, {"S", -2}, {"U", -1}}),
                 GroupWord({{"Z", -1}, {"S", 2}})};
  return p;
}

const GroupPresentation& presentation(GroupName g) {
  static const GroupPresentation sl2z = sl2z_presentation();
  static const GroupPresentation theta = theta_presentation();
  return g == GroupName::SL2Z ? sl2z : theta;
}

IntMatrix2 evaluate_word(const GroupWord& w, const GroupPresentation& g) {
  IntMatrix2 m;
  for (const auto& l : w.letters()) m = m * g.generator_matrix(l.generator).pow(l.exponent);
  return m;
}

// --------------------------------------------------------- word decomposition

GroupWord sl2z_word(const IntMatrix2& g) {
  // Left-multiply by T^-k and alpha until the first column is (+-1, 0);
  // record the inverse of each step.  T = B^-1 A.
  const GroupWord t_word({{"B", -1}, {"A", 1}});
  auto t_pow = [&](long k) {
    GroupWord w;
    const GroupWord& base = k >= 0 ? t_word : t_word.inverse();
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) w.append(base);
    return w;
  };
  const IntMatrix2 alpha = generators::alpha();
  IntMatrix2 cur = g;
  GroupWord prefix;  // g = prefix * cur throughout
  while (cur.c() != 0) {
    Integer k = nearest_multiple(cur.a(), cur.c(), 1);
    if (k != 0) {
      cur = generators::T().pow(-to_long(k)) * cur;
      prefix.append(t_pow(to_long(k)));
    }
    cur = alpha * cur;
    prefix.append("A", -1);
  }
  // cur = +-(1 b; 0 1)
  if (cur.a() == -1) {
    prefix.append("A", 2);
    cur = -cur;
  }
  prefix.append(t_pow(to_long(cur.b())));
  return prefix;
}

GroupWord theta_word(const IntMatrix2& g) {
  if (!theta_member(g))
    throw std::domain_error("matrix " + g.to_string() + " is not in the theta subgroup");
  const IntMatrix2 s = generators::S();
  IntMatrix2 cur = g;
  GroupWord prefix;  // g = prefix * cur throughout
  while (cur.c() != 0) {
    // a and c have opposite parity, so |a - 2kc| < |c| for the nearest k.
    Integer k = nearest_multiple(cur.a(), cur.c(), 2);
    if (k != 0) {
      cur = generators::U().pow(-to_long(k)) * cur;
      prefix.append("U", to_long(k));
    }
    cur = s * cur;
    prefix.append("S", -1);
  }
  if (cur.a() == -1) {
    prefix.append("Z", 1);
    cur = -cur;
  }
  // b is even for members with first row (1, b).
  prefix.append("U", to_long(Integer(cur.b() / 2)));
  return prefix;
}

// ------------------------------------------------------------------- cosets

std::vector<IntMatrix2> right_coset_representatives(const GroupPresentation& g) {
  std::vector<IntMatrix2> reps{IntMatrix2::identity()};
  std::deque<IntMatrix2> queue{IntMatrix2::identity()};
  const IntMatrix2 steps[] = {generators::T(), generators::L()};
  while (!queue.empty()) {
    IntMatrix2 x = queue.front();
    queue.pop_front();
    for (const auto& s : steps) {
      IntMatrix2 y = x * s;
      bool seen = std::any_of(reps.begin(), reps.end(),
                              [&](const IntMatrix2& r) { return g.contains(y * r.inverse()); });
      if (!seen) {
        reps.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return reps;
}

std::size_t right_coset_index(const GroupPresentation& g, const std::vector<IntMatrix2>& reps,
                              const IntMatrix2& x) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (g.contains(x * reps[i].inverse())) return i;
  throw std::logic_error("right_coset_index: coset representatives are incomplete");
}

std::vector<CuspClass> cusp_orbits(const GroupPresentation& g) {
  // Cusps are the double cosets group \ SL2(Z) / <T, -I>; -I lies in both
  // groups, so they are the orbits of right multiplication by T on the
  // right cosets.
  const auto reps = right_coset_representatives(g);
  std::vector<bool> used(reps.size(), false);
  std::vector<CuspClass> out;
  const IntMatrix2 t = generators::T();
  for (std::size_t start = 0; start < reps.size(); ++start) {
    if (used[start]) continue;
    unsigned width = 0;
    std::size_t cur = start;
    do {
      used[cur] = true;
      ++width;
      cur = right_coset_index(g, reps, reps[cur] * t);
    } while (cur != start);
    const IntMatrix2& r = reps[start];
    IntMatrix2 gen = r * t.pow(width) * r.inverse();
    if (gen.c() < 0 || (gen.c() == 0 && gen.b() < 0)) gen = gen.inverse();
    Integer p = r.a(), q = r.c();
    if (p < 0 || (p == 0 && q < 0)) {
      p = -p;
      q = -q;
    }
    out.push_back({p, q, gen, width});
  }
  return out;
}

}  // namespace gammacoh
