#include "symlie/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace symlie {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) degree_ += static_cast<int>(e);
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
  std::vector<Exponent> e(arity, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ += o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  r.degree_ -= o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
  return Monomial(std::move(e));
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || s == "i") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

PolyRing::PolyRing(std::vector<std::string> variables) : names_(std::move(variables)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i]))
      throw std::invalid_argument("invalid variable name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second.is_zero(); });
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  std::size_t n = ring->arity();
  return term(std::move(ring), Monomial::one(n), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  std::size_t n = ring->arity();
  return term(std::move(ring), Monomial::variable(n, index), Scalar(1));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Scalar& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

int Polynomial::degree() const {
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return kZeroDegree;
  int d = terms_.begin()->first.degree();
  // Descending grevlex is degree-major: first and last term bound the range.
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw std::invalid_argument("polynomials belong to different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  // Multiplication by a monomial preserves the term order.
  for (const auto& [t, coeff] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, coeff * c);
  return r;
}

std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

// Coefficient prefix for a non-constant term whose coefficient prints
// non-negative.
std::string coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if (c.is_real() || sgn(c.re()) == 0) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c.prints_negative();
    Scalar shown = negative ? -c : c;
    // A sign in front of a+b*i would only bind to a.
    bool wrap = !shown.is_real() && sgn(shown.re()) != 0 && (negative || !first);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += wrap ? "(" + shown.to_string() + ")" : shown.to_string();
    } else {
      out += coefficient_prefix(shown) + monomial_to_string(m, *ring_);
    }
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.ring()->arity()) throw std::out_of_range("partial_derivative: variable index");
  Polynomial r(p.ring());
  for (const auto& [m, c] : p.terms()) {
    Exponent e = m[var];
    if (e == 0) continue;
    std::vector<Exponent> exps = m.exponents();
    exps[var] -= 1;
    r.add_term(Monomial(std::move(exps)), c * Scalar(static_cast<long>(e)));
  }
  return r;
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images, const RingPtr& target) {
  std::size_t n = p.ring()->arity();
  if (images.size() != n) throw std::invalid_argument("substitute: image count does not match ring arity");
  // powers[j][e-1] = images[j]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t j, Exponent e) -> const Polynomial& {
    auto& cache = powers[j];
    while (cache.size() < e) {
      cache.push_back(cache.empty() ? images[j] : cache.back() * images[j]);
    }
    return cache[e - 1];
  };
  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t j = 0; j < n && !t.is_zero(); ++j) {
      if (m[j] > 0) t = t * power(j, m[j]);
    }
    result += t;
  }
  return result;
}

Polynomial rename_into(const Polynomial& p, const RingPtr& target) {
  const PolyRing& src = *p.ring();
  std::vector<std::optional<std::size_t>> map(src.arity());
  for (std::size_t j = 0; j < src.arity(); ++j) map[j] = target->index_of(src.name(j));
  Polynomial r(target);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> e(target->arity(), 0);
    for (std::size_t j = 0; j < src.arity(); ++j) {
      if (m[j] == 0) continue;
      if (!map[j]) throw std::invalid_argument("variable '" + src.name(j) + "' not present in target ring");
      e[*map[j]] = m[j];
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

bool is_binomial_set(std::span<const Polynomial> gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.num_terms() <= 2; });
}

namespace {

void compositions(std::size_t arity, int d, std::size_t pos, std::vector<Exponent>& cur,
                  std::vector<Monomial>& out) {
  if (pos + 1 == arity) {
    cur[pos] = static_cast<Exponent>(d);
    out.emplace_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[pos] = static_cast<Exponent>(e);
    compositions(arity, d - e, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t arity, int d) {
  if (d < 0) throw std::invalid_argument("monomial_basis: negative degree");
  std::vector<Monomial> out;
  if (arity == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<Exponent> cur(arity, 0);
  compositions(arity, d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexLess{});
  return out;
}

MonomialFrame::MonomialFrame(std::size_t arity, int degree)
    : degree_(degree), basis_(monomial_basis(arity, degree)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

std::optional<std::size_t> MonomialFrame::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Scalar> MonomialFrame::vectorize(const Polynomial& p) const {
  std::vector<Scalar> v(basis_.size());
  for (const auto& [m, c] : p.terms()) {
    auto idx = m.degree() == degree_ ? index_of(m) : std::nullopt;
    if (!idx) throw std::invalid_argument("vectorize: polynomial is not homogeneous of degree " + std::to_string(degree_));
    v[*idx] = c;
  }
  return v;
}

Polynomial MonomialFrame::devectorize(const RingPtr& ring, std::span<const Scalar> coords) const {
  Polynomial p(ring);
  for (std::size_t i = 0; i < coords.size() && i < basis_.size(); ++i) p.add_term(basis_[i], coords[i]);
  return p;
}

std::vector<Scalar> vectorize(const Polynomial& p, int d) {
  return MonomialFrame(p.ring()->arity(), d).vectorize(p);
}

}  // namespace symlie
