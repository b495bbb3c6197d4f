#include "symlie/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace symlie {

namespace {

// grevlex restricted to variables [lo, hi); returns -1, 0, 1.
int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0;
  long db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

struct OrderGreater {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.less(b, a); }
};

using Accumulator = std::map<Monomial, Scalar, OrderGreater>;

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& order) {
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  if (order.kind != MonomialOrder::Kind::kGrevlex) {
    std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return order.less(y.first, x.first); });
  }
  OrderedPoly out;
  for (auto& [m, c] : terms) {
    out.monomials.push_back(std::move(m));
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

Polynomial to_polynomial(const OrderedPoly& p, const RingPtr& ring) {
  Polynomial out(ring);
  for (std::size_t k = 0; k < p.size(); ++k) out.add_term(p.monomials[k], p.coefficients[k]);
  return out;
}

void make_monic(OrderedPoly& p) {
  if (p.is_zero() || p.coefficients.front().is_one()) return;
  Scalar inv = p.coefficients.front().inverse();
  for (auto& c : p.coefficients) c *= inv;
}

// Full reduction of `acc` modulo `basis` (monic elements), skipping index
// `skip`. Reducer choice: lowest index whose leading monomial divides.
OrderedPoly reduce_fully(Accumulator acc, const std::vector<OrderedPoly>& basis, std::size_t skip = SIZE_MAX) {
  OrderedPoly rem;
  while (!acc.empty()) {
    auto top = acc.begin();
    const Monomial& m = top->first;
    const OrderedPoly* reducer = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].is_zero()) continue;
      if (basis[k].lead().divides(m)) {
        reducer = &basis[k];
        break;
      }
    }
    if (!reducer) {
      rem.monomials.push_back(m);
      rem.coefficients.push_back(top->second);
      acc.erase(top);
      continue;
    }
    Monomial q = m / reducer->lead();
    Scalar f = top->second;
    acc.erase(top);
    for (std::size_t t = 1; t < reducer->size(); ++t) {
      Monomial mt = reducer->monomials[t] * q;
      auto [it, inserted] = acc.try_emplace(std::move(mt));
      it->second.sub_mul(f, reducer->coefficients[t]);
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return rem;
}

Accumulator accumulator_of(const OrderedPoly& p, const MonomialOrder& order) {
  Accumulator acc(OrderGreater{order});
  for (std::size_t k = 0; k < p.size(); ++k) acc.emplace_hint(acc.end(), p.monomials[k], p.coefficients[k]);
  return acc;
}

Accumulator s_polynomial(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& order) {
  Monomial l = f.lead().lcm(g.lead());
  Monomial qf = l / f.lead();
  Monomial qg = l / g.lead();
  Accumulator acc(OrderGreater{order});
  // Both monic: the leading terms cancel.
  for (std::size_t k = 1; k < f.size(); ++k) acc.emplace(f.monomials[k] * qf, f.coefficients[k]);
  for (std::size_t k = 1; k < g.size(); ++k) {
    auto [it, inserted] = acc.try_emplace(g.monomials[k] * qg);
    it->second -= g.coefficients[k];
    if (it->second.is_zero()) acc.erase(it);
  }
  return acc;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::kGrevlex:
      return grevlex_less(a, b);
    case Kind::kLex:
      return lex_less(a, b);
    case Kind::kBlock: {
      int c = grevlex_cmp(a, b, 0, block_size);
      if (c != 0) return c < 0;
      return grevlex_cmp(a, b, block_size, a.arity()) < 0;
    }
  }
  return false;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<OrderedPoly> elements)
    : ring_(std::move(ring)), order_(order), elements_(std::move(elements)) {
  for (const auto& e : elements_) leading_.push_back(e.lead());
}

std::vector<Polynomial> GroebnerBasis::elements() const {
  std::vector<Polynomial> out;
  for (const auto& e : elements_) out.push_back(to_polynomial(e, ring_));
  return out;
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (!(*p.ring() == *g.ring())) throw std::invalid_argument("normal_form: ring mismatch");
  OrderedPoly rem = reduce_fully(accumulator_of(to_ordered(p, g.order()), g.order()), g.ordered_elements());
  return to_polynomial(rem, g.ring());
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order) {
  if (generators.empty()) throw std::invalid_argument("buchberger: no generators");
  RingPtr ring = generators.front().ring();
  std::vector<OrderedPoly> basis;
  for (const auto& g : generators) {
    if (!(*g.ring() == *ring)) throw std::invalid_argument("buchberger: generators in different rings");
    if (g.is_zero()) continue;
    OrderedPoly p = to_ordered(g, order);
    make_monic(p);
    basis.push_back(std::move(p));
  }
  if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

  // Pending pairs keyed by (lcm degree, j, i) with i < j.
  using Pair = std::tuple<int, std::size_t, std::size_t>;
  std::set<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_index;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].is_zero()) continue;
      int deg = basis[i].lead().lcm(basis[j].lead()).degree();
      pending.emplace(deg, j, i);
      pending_index.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_index.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    auto [deg, j, i] = *pending.begin();
    pending.erase(pending.begin());
    pending_index.erase({i, j});
    const Monomial& li = basis[i].lead();
    const Monomial& lj = basis[j].lead();
    if (li.coprime(lj)) continue;
    Monomial l = li.lcm(lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || basis[k].is_zero()) continue;
      chain = basis[k].lead().divides(l) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    OrderedPoly r = reduce_fully(s_polynomial(basis[i], basis[j], order), basis);
    if (r.is_zero()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by an
  // earlier-kept or other element's leading monomial.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      if (basis[b].lead().divides(basis[a].lead())) {
        // Equal leading monomials: keep the lower index.
        if (basis[b].lead() == basis[a].lead() && b > a) continue;
        keep[a] = false;
      }
    }
  }
  std::vector<OrderedPoly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(basis[a]));

  // Inter-reduce tails.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    OrderedPoly r = reduce_fully(accumulator_of(minimal[a], order), minimal, a);
    make_monic(r);
    minimal[a] = std::move(r);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const OrderedPoly& x, const OrderedPoly& y) { return order.less(x.lead(), y.lead()); });
  return GroebnerBasis(ring, order, std::move(minimal));
}

bool ideal_membership(const Polynomial& p, const IdealSpec& ideal) {
  GroebnerBasis g = buchberger(ideal.generators, MonomialOrder::grevlex());
  return normal_form(p, g).is_zero();
}

int krull_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit()) throw PreconditionError("unit ideal has no Krull dimension");
  std::size_t n = basis.ring()->arity();
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : basis.leading_monomials()) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  // Largest S such that no leading monomial is supported inside S.
  std::vector<bool> in_set(n);
  for (std::size_t size = n + 1; size-- > 0;) {
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      bool independent = std::none_of(supports.begin(), supports.end(), [&](const auto& s) {
        return std::all_of(s.begin(), s.end(), [&](std::size_t v) { return select[v]; });
      });
      if (independent) return static_cast<int>(size);
    } while (std::prev_permutation(select.begin(), select.end()));
  }
  return 0;
}

int krull_dimension(const IdealSpec& ideal) {
  return krull_dimension(buchberger(ideal.generators, MonomialOrder::grevlex()));
}

EliminationResult elimination_ideal(std::span<const Polynomial> generators, std::span<const std::string> eliminate) {
  if (generators.empty()) throw std::invalid_argument("elimination_ideal: no generators");
  const RingPtr& ring = generators.front().ring();
  std::vector<std::string> elim_names;
  std::vector<std::string> rest_names;
  for (const auto& name : ring->variables()) {
    bool drop = std::find(eliminate.begin(), eliminate.end(), name) != eliminate.end();
    (drop ? elim_names : rest_names).push_back(name);
  }
  for (const auto& name : eliminate)
    if (!ring->index_of(name)) throw std::invalid_argument("elimination_ideal: unknown variable '" + name + "'");
  if (rest_names.empty()) throw std::invalid_argument("elimination_ideal: nothing left after elimination");

  std::vector<std::string> block_names = elim_names;
  block_names.insert(block_names.end(), rest_names.begin(), rest_names.end());
  RingPtr block_ring = make_ring(block_names);
  RingPtr sub_ring = make_ring(rest_names);
  std::vector<Polynomial> moved;
  for (const auto& g : generators) moved.push_back(rename_into(g, block_ring));
  GroebnerBasis gb = buchberger(moved, MonomialOrder::block(elim_names.size()));

  EliminationResult result{sub_ring, {}};
  for (const auto& e : gb.elements()) {
    bool free = std::all_of(e.terms().begin(), e.terms().end(), [&](const auto& t) {
      for (std::size_t v = 0; v < elim_names.size(); ++v)
        if (t.first[v] != 0) return false;
      return true;
    });
    if (!free) continue;
    // Only the remaining variables occur, so renaming by name is exact.
    Polynomial sub(sub_ring);
    for (const auto& [m, c] : e.terms()) {
      std::vector<Exponent> exps(m.exponents().begin() + static_cast<std::ptrdiff_t>(elim_names.size()),
                                 m.exponents().end());
      sub.add_term(Monomial(std::move(exps)), c);
    }
    result.generators.push_back(std::move(sub));
  }
  return result;
}

}  // namespace symlie
