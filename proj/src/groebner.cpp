#include "nilkur/groebner.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace nilkur {

namespace {

constexpr std::size_t kMaxVars = 64;

struct Mon {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  bool operator==(const Mon&) const = default;
};

struct ITerm {
  Mon m;
  Integer c;
};

using IPoly = std::vector<ITerm>;

class Ring {
 public:
  explicit Ring(const MonomialOrder& order) : order_(order), n_(order.variables.size()) {
    if (n_ > kMaxVars) throw std::invalid_argument("too many variables for the Groebner engine (max 64)");
    for (std::size_t i = 0; i < n_; ++i) index_[order.variables[i].id] = i;
  }

  std::size_t size() const { return n_; }

  int cmp(const Mon& a, const Mon& b) const {
    switch (order_.kind) {
      case OrderKind::lex:
        for (std::size_t i = 0; i < n_; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::elimination:
        if (n_ > 0 && a.e[0] != b.e[0]) return a.e[0] > b.e[0] ? 1 : -1;
        return grevlex(a, b, n_ > 0 ? 1 : 0, a.deg - (n_ ? a.e[0] : 0), b.deg - (n_ ? b.e[0] : 0));
      case OrderKind::grevlex:
      default:
        return grevlex(a, b, 0, a.deg, b.deg);
    }
  }

  bool divides(const Mon& a, const Mon& b) const {
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }

  bool coprime(const Mon& a, const Mon& b) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  Mon lcm(const Mon& a, const Mon& b) const {
    Mon r;
    for (std::size_t i = 0; i < n_; ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      r.deg += r.e[i];
    }
    return r;
  }

  // b / a, assuming a | b
  Mon quotient(const Mon& b, const Mon& a) const {
    Mon r;
    for (std::size_t i = 0; i < n_; ++i) r.e[i] = std::uint8_t(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
  }

  Mon mul(const Mon& a, const Mon& b) const {
    Mon r;
    for (std::size_t i = 0; i < n_; ++i) {
      const unsigned s = unsigned(a.e[i]) + b.e[i];
      if (s > 255) throw std::overflow_error("exponent overflow in Groebner engine");
      r.e[i] = std::uint8_t(s);
    }
    r.deg = a.deg + b.deg;
    return r;
  }

  void sort(IPoly& p) const {
    std::sort(p.begin(), p.end(), [this](const ITerm& x, const ITerm& y) { return cmp(x.m, y.m) > 0; });
  }

  IPoly from(const Polynomial& p) const {
    Integer den = 1;
    for (const auto& t : p.terms()) den = lcm_z(den, t.coeff.get_den());
    IPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Mon m;
      for (const auto& [id, exp] : t.monomial.factors()) {
        const auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("variable " + Var{id}.name() + " not in the monomial order");
        if (exp > 255) throw std::overflow_error("exponent overflow in Groebner engine");
        m.e[it->second] = std::uint8_t(exp);
        m.deg += exp;
      }
      out.push_back({m, Integer(t.coeff.get_num() * (den / t.coeff.get_den()))});
    }
    sort(out);
    make_primitive(out);
    return out;
  }

  Polynomial to(const IPoly& p) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) {
      Monomial m;
      for (std::size_t i = 0; i < n_; ++i)
        if (t.m.e[i]) m = m * Monomial(order_.variables[i], t.m.e[i]);
      terms.push_back({std::move(m), Rational(t.c)});
    }
    return Polynomial::from_terms(std::move(terms));
  }

  static Integer lcm_z(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

  // Divides by the content and makes the leading coefficient positive.
  static void make_primitive(IPoly& p) {
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(p.front().c) < 0) g = -g;
    if (g != 1)
      for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }

  // a * p[from..] - b * q * g, where the leading terms cancel.
  IPoly combine(const IPoly& p, std::size_t from, const Integer& a, const Integer& b, const Mon& q,
                const IPoly& g) const {
    IPoly out;
    out.reserve(p.size() - from + g.size());
    std::size_t i = from;
    std::size_t j = 0;
    Mon gm;
    bool have_gm = false;
    while (i < p.size() || j < g.size()) {
      if (j < g.size() && !have_gm) {
        gm = mul(q, g[j].m);
        have_gm = true;
      }
      const int c = i >= p.size() ? -1 : j >= g.size() ? 1 : cmp(p[i].m, gm);
      if (c > 0) {
        out.push_back({p[i].m, a * p[i].c});
        ++i;
      } else if (c < 0) {
        out.push_back({gm, -b * g[j].c});
        ++j;
        have_gm = false;
      } else {
        Integer s = a * p[i].c - b * g[j].c;
        if (sgn(s) != 0) out.push_back({gm, std::move(s)});
        ++i;
        ++j;
        have_gm = false;
      }
    }
    return out;
  }

  // Full reduction of p by the polynomials in G. The result is primitive.
  IPoly reduce(IPoly p, const std::vector<const IPoly*>& G, const Deadline& deadline) const {
    IPoly r;
    std::size_t head = 0;
    std::size_t steps = 0;
    while (head < p.size()) {
      const ITerm& lt = p[head];
      const IPoly* div = nullptr;
      for (const IPoly* g : G)
        if (!g->empty() && divides(g->front().m, lt.m)) {
          div = g;
          break;
        }
      if (!div) {
        r.push_back(lt);
        ++head;
        continue;
      }
      Integer a = div->front().c;
      Integer b = lt.c;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= g;
      b /= g;
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      const Mon q = quotient(lt.m, div->front().m);
      p = combine(p, head, a, b, q, *div);
      head = 0;
      if (a != 1)
        for (auto& t : r) t.c *= a;
      if (++steps % 64 == 0) {
        check(deadline);
        shrink(r, p);
      }
    }
    make_primitive(r);
    return r;
  }

  // Removes the common content of r and p.
  static void shrink(IPoly& r, IPoly& p) {
    Integer g = 0;
    for (const auto* v : {&r, &p})
      for (const auto& t : *v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    if (g == 0) return;
    for (auto* v : {&r, &p})
      for (auto& t : *v) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    const Mon L = lcm(f.front().m, g.front().m);
    IPoly fm;
    fm.reserve(f.size());
    const Mon qf = quotient(L, f.front().m);
    for (const auto& t : f) fm.push_back({mul(qf, t.m), t.c});
    Integer a = g.front().c;
    Integer b = f.front().c;
    Integer d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= d;
    b /= d;
    // a * fm - b * (L / lm g) * g
    IPoly out = combine(fm, 0, a, b, quotient(L, g.front().m), g);
    return out;
  }

  static void check(const Deadline& deadline) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw Timeout("Groebner basis computation timed out");
  }

 private:
  static int grevlex(const Mon& a, const Mon& b, std::size_t from, std::uint32_t da, std::uint32_t db, std::size_t n) {
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = n; i-- > from;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  int grevlex(const Mon& a, const Mon& b, std::size_t from, std::uint32_t da, std::uint32_t db) const {
    return grevlex(a, b, from, da, db, n_);
  }

  const MonomialOrder& order_;
  std::size_t n_;
  std::map<std::uint32_t, std::size_t> index_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Mon lcm;
};

class Engine {
 public:
  Engine(const Ring& R, Deadline deadline) : R_(R), deadline_(deadline) {}

  void add_input(IPoly p) {
    if (p.empty()) return;
    auto h = R_.reduce(std::move(p), active_polys(), deadline_);
    if (!h.empty()) insert(std::move(h));
  }

  void run() {
    while (!pairs_.empty()) {
      Ring::check(deadline_);
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it)
        if (std::tie(it->lcm.deg, it->j, it->i) < std::tie(best->lcm.deg, best->j, best->i))
          best = it;
      const Pair pr = *best;
      pairs_.erase(best);
      const IPoly& f = polys_[pr.i];
      const IPoly& g = polys_[pr.j];
      auto h = R_.reduce(R_.spoly(f, g), active_polys(), deadline_);
      if (!h.empty()) insert(std::move(h));
    }
  }

  // Reduced basis, sorted by increasing leading monomial.
  std::vector<IPoly> reduced() const {
    std::vector<IPoly> G;
    for (std::size_t k : active_) G.push_back(polys_[k]);
    std::vector<IPoly> out;
    for (std::size_t k = 0; k < G.size(); ++k) {
      std::vector<const IPoly*> others;
      for (std::size_t l = 0; l < G.size(); ++l)
        if (l != k) others.push_back(&G[l]);
      // the basis is minimal, so only the tail of G[k] gets reduced
      out.push_back(R_.reduce(G[k], others, deadline_));
    }
    std::sort(out.begin(), out.end(),
              [this](const IPoly& a, const IPoly& b) { return R_.cmp(a.front().m, b.front().m) < 0; });
    return out;
  }

 private:
  std::vector<const IPoly*> active_polys() const {
    std::vector<const IPoly*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(IPoly hp) {
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(hp));
    const Mon& lh = polys_[h].front().m;

    struct Cand {
      std::size_t g;
      Mon lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g : active_) {
      const Mon& lg = polys_[g].front().m;
      C.push_back({g, R_.lcm(lh, lg), R_.coprime(lh, lg)});
    }
    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Cand& c = C[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < C.size() && keep; ++l)
          if (R_.divides(C[l].lcm, c.lcm)) keep = false;
        for (std::size_t l = 0; l < D.size() && keep; ++l)
          if (R_.divides(D[l].lcm, c.lcm)) keep = false;
      }
      if (keep) D.push_back(c);
    }

    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      const bool drop = R_.divides(lh, p.lcm) && R_.lcm(polys_[p.i].front().m, lh) != p.lcm &&
                        R_.lcm(lh, polys_[p.j].front().m) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (const auto& c : D)
      if (!c.coprime)
        kept.push_back({c.g, h, c.lcm});
    pairs_ = std::move(kept);

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!R_.divides(lh, polys_[g].front().m)) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
  }

  const Ring& R_;
  Deadline deadline_;
  std::vector<IPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

std::set<Var> union_vars(std::initializer_list<std::set<Var>> sets) {
  std::set<Var> out;
  for (const auto& s : sets) out.insert(s.begin(), s.end());
  return out;
}

MonomialOrder extend(const MonomialOrder& order, const std::set<Var>& extra) {
  MonomialOrder out = order;
  for (const Var& v : extra)
    if (std::find(out.variables.begin(), out.variables.end(), v) == out.variables.end()) out.variables.push_back(v);
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::standard(const std::set<Var>& vars, OrderKind kind) {
  return MonomialOrder{kind, std::vector<Var>(vars.begin(), vars.end())};
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order, Deadline deadline) {
  const Ring R(order);
  Engine engine(R, deadline);
  std::vector<IPoly> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(R.from(g));
  // low-degree generators first so they reduce the later ones
  std::stable_sort(inputs.begin(), inputs.end(),
                   [&R](const IPoly& a, const IPoly& b) { return R.cmp(a.front().m, b.front().m) < 0; });
  for (auto& p : inputs) engine.add_input(std::move(p));
  engine.run();
  std::vector<Polynomial> out;
  for (const auto& p : engine.reduced()) out.push_back(R.to(p));
  return GroebnerBasis(order, std::move(out));
}

GroebnerBasis buchberger(const IdealGens& gens, OrderKind kind, Deadline deadline) {
  return buchberger(gens.generators(), MonomialOrder::standard(gens.variables(), kind), deadline);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
  const MonomialOrder order = extend(G.order(), p.variables());
  const Ring R(order);
  std::vector<IPoly> basis;
  for (const auto& g : G.polys()) basis.push_back(R.from(g));
  std::vector<const IPoly*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return R.to(R.reduce(R.from(p), ptrs, std::nullopt));
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of zero");
  const MonomialOrder full = extend(order, p.variables());
  const Ring R(full);
  const IPoly ip = R.from(p);
  return R.to(IPoly{{ip.front().m, Integer(1)}}).terms().front().monomial;
}

bool s_polynomials_reduce_to_zero(const GroebnerBasis& G) {
  const Ring R(G.order());
  std::vector<IPoly> basis;
  for (const auto& g : G.polys()) basis.push_back(R.from(g));
  std::vector<const IPoly*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!R.reduce(R.spoly(basis[i], basis[j]), ptrs, std::nullopt).empty()) return false;
  return true;
}

bool is_reduced(const GroebnerBasis& G) {
  const Ring R(G.order());
  std::vector<IPoly> basis;
  for (const auto& g : G.polys()) basis.push_back(R.from(g));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i])
        if (R.divides(basis[j].front().m, t.m)) return false;
    }
  return true;
}

bool ideal_member(const Polynomial& p, const IdealGens& I, Deadline deadline) {
  if (p.is_zero()) return true;
  const auto order = MonomialOrder::standard(union_vars({I.variables(), p.variables()}));
  return normal_form(p, buchberger(I.generators(), order, deadline)).is_zero();
}

bool ideal_contains(const IdealGens& J, const IdealGens& I, Deadline deadline) {
  const auto order = MonomialOrder::standard(union_vars({I.variables(), J.variables()}));
  const GroebnerBasis G = buchberger(J.generators(), order, deadline);
  for (const auto& g : I.generators())
    if (!normal_form(g, G).is_zero()) return false;
  return true;
}

bool ideal_equal(const IdealGens& I, const IdealGens& J, Deadline deadline) {
  const auto order = MonomialOrder::standard(union_vars({I.variables(), J.variables()}));
  return buchberger(I.generators(), order, deadline).polys() == buchberger(J.generators(), order, deadline).polys();
}

IdealGens ideal_intersect(const IdealGens& I, const IdealGens& J, Deadline deadline) {
  std::set<Var> vars = union_vars({I.variables(), J.variables()});
  vars.insert(Var::aux());
  const auto order = MonomialOrder::standard(vars, OrderKind::elimination);
  const Polynomial u = Polynomial::variable(Var::aux());
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(u * f);
  for (const auto& g : J.generators()) gens.push_back((Polynomial(1) - u) * g);
  const GroebnerBasis G = buchberger(gens, order, deadline);
  std::vector<Polynomial> out;
  for (const auto& g : G.polys())
    if (!g.variables().contains(Var::aux())) out.push_back(g);
  return IdealGens(out);
}

}  // namespace nilkur
