#pragma once

// Randomized property suites. Each returns how many cases ran and the first
// failure, so the doctest runner and the acceptance binary share them.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kmu/cli.hpp"
#include "kmu/error.hpp"
#include "kmu/groebner.hpp"
#include "kmu/hilbert.hpp"
#include "kmu/problem_file.hpp"
#include "kmu/resolution.hpp"
#include "kmu/unprojection.hpp"
#include "oracles.hpp"

namespace props {

using namespace kmu;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

inline RingPtr small_ring(const Field& field = Field::rationals()) {
  return make_ring({"x", "y", "z", "w"}, {1, 1, 1, 1}, field);
}

inline std::string show(const std::vector<Polynomial>& gens) {
  std::string s;
  for (const auto& g : gens) s += (s.empty() ? "" : ", ") + to_string(g);
  return "(" + s + ")";
}

/// Two or three homogeneous generators of degree 2 or 3.
inline std::vector<Polynomial> random_ideal(oracle::Random& rnd, const RingPtr& R) {
  std::vector<Polynomial> gens;
  const int n = rnd.integer(2, 3);
  for (int i = 0; i < n; ++i) gens.push_back(rnd.homogeneous(R, rnd.integer(2, 3), rnd.integer(2, 4)));
  return gens;
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  Monomial l = a.lead_monomial().lcm(b.lead_monomial());
  return a.mul_term(a.lead_coef().inverse(), l.quotient(a.lead_monomial())) -
         b.mul_term(b.lead_coef().inverse(), l.quotient(b.lead_monomial()));
}

inline SuiteResult buchberger_fixpoint(int n = 120) {
  SuiteResult r{"Buchberger fixpoint"};
  oracle::Random rnd(101);
  auto R = small_ring();
  for (int c = 0; c < n; ++c, ++r.cases) {
    Ideal I(R, random_ideal(rnd, R));
    const auto& G = I.groebner_basis();
    bool ok = true;
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) ok = ok && normal_form(s_polynomial(G[i], G[j]), I).is_zero();
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = 0; j < G.size(); ++j)
        if (i != j) ok = ok && !G[j].lead_monomial().divides(G[i].lead_monomial());
    // The basis generates the same ideal, by the Macaulay oracle.
    ok = ok && oracle::ideal_contains(I.generators(), G) && oracle::ideal_contains(G, I.generators());
    r.check(ok, show(I.generators()));
  }
  return r;
}

inline SuiteResult nf_idempotence(int n = 120) {
  SuiteResult r{"NF idempotence"};
  oracle::Random rnd(102);
  auto R = small_ring();
  for (int c = 0; c < n; ++c, ++r.cases) {
    Ideal I(R, random_ideal(rnd, R));
    auto f = rnd.homogeneous(R, rnd.integer(2, 4), 6);
    auto nf = normal_form(f, I);
    bool ok = normal_form(nf, I) == nf;
    // f - NF(f) lies in I.
    ok = ok && oracle::member(f - nf, I.generators());
    r.check(ok, to_string(f) + " mod " + show(I.generators()));
  }
  return r;
}

inline SuiteResult membership(int n = 120) {
  SuiteResult r{"membership consistency"};
  oracle::Random rnd(103);
  auto R = small_ring();
  auto Rb = with_order(R, MonomialOrder::elimination(2));
  const std::vector<int> same{0, 1, 2, 3};
  for (int c = 0; c < n; ++c, ++r.cases) {
    auto gens = random_ideal(rnd, R);
    Ideal I(R, gens);
    const int d = 4;
    Polynomial inside(R);
    for (const auto& g : gens) {
      auto a = rnd.homogeneous(R, d - *g.homogeneous_degree(), 3);
      inside += a * g;
    }
    auto probe = rnd.homogeneous(R, d, 4);
    bool ok = is_member(inside, I);
    const bool m = is_member(probe, I);
    ok = ok && m == oracle::member(probe, gens);
    // Answers do not depend on the monomial order.
    Ideal Ib = I.map_to(Rb, same);
    ok = ok && m == is_member(probe.map_to(Rb, same), Ib) && is_member(inside.map_to(Rb, same), Ib);
    r.check(ok, to_string(probe) + " in " + show(gens));
  }
  return r;
}

inline SuiteResult quotient(int n = 120) {
  SuiteResult r{"quotient correctness"};
  oracle::Random rnd(104);
  auto R = small_ring();
  for (int c = 0; c < n; ++c, ++r.cases) {
    auto gens = random_ideal(rnd, R);
    // Half the cases divide by a factor of a generator, so the colon grows.
    auto g = rnd.homogeneous(R, 1, 2);
    if (c % 2 == 0) gens[0] = gens[0] * g;
    Ideal I(R, gens);
    Ideal Q = ideal_quotient(I, g);
    bool ok = contains(Q, I);
    for (const auto& q : Q.generators()) ok = ok && oracle::member(q * g, gens);
    r.check(ok, show(gens) + " : " + to_string(g));
  }
  return r;
}

inline SuiteResult elimination(int n = 120) {
  SuiteResult r{"elimination correctness"};
  oracle::Random rnd(105);
  auto R = small_ring();
  for (int c = 0; c < n; ++c, ++r.cases) {
    auto gens = random_ideal(rnd, R);
    Ideal I(R, gens);
    Ideal E = eliminate(I, {"x"});
    bool ok = E.ring()->names() == std::vector<std::string>{"y", "z", "w"};
    const std::vector<int> back{1, 2, 3};
    for (const auto& e : E.generators()) ok = ok && oracle::member(e.map_to(R, back), gens);
    // x-free basis elements of I lie in the eliminant.
    for (const auto& g : I.groebner_basis())
      if (!g.involves(0)) ok = ok && is_member(g.map_to(E.ring(), std::vector<int>{-1, 0, 1, 2}), E);
    r.check(ok, show(gens));
  }
  return r;
}

inline SuiteResult resolutions(int n = 100) {
  SuiteResult r{"resolution complex and exactness"};
  oracle::Random rnd(106);
  auto R = small_ring();
  for (int c = 0; c < n; ++c, ++r.cases) {
    Ideal I(R, random_ideal(rnd, R));
    auto res = minimal_free_resolution(I);
    bool ok = is_complex(res) && is_exact(res, I) && is_minimal(res) && res.length() <= R->arity();
    r.check(ok, show(I.generators()));
  }
  return r;
}

inline SuiteResult koszul(int n = 100) {
  SuiteResult r{"complete intersections are Koszul"};
  oracle::Random rnd(107);
  auto R = small_ring();
  for (int c = 0; c < n; ++c, ++r.cases) {
    const int m = 1 + c % 4;
    std::vector<Polynomial> gens;
    for (int i = 0; i < m; ++i) gens.push_back(rnd.homogeneous(R, rnd.integer(1, 2), 5));
    Ideal I(R, gens);
    if (I.is_unit() || codim(I) != static_cast<std::size_t>(m)) {
      --c, --r.cases;  // not a regular sequence; draw again
      continue;
    }
    auto totals = betti_table(minimal_free_resolution(I)).totals();
    std::vector<int> binom{1};
    for (int i = 1; i <= m; ++i) binom.push_back(binom.back() * (m - i + 1) / i);
    r.check(totals == binom, show(gens));
  }
  return r;
}

inline std::vector<std::pair<std::string, Ideal>> gorenstein_corpus() {
  std::vector<std::pair<std::string, Ideal>> out;
  for (const auto& [name, text] : cli::corpus()) {
    auto pf = parse_problem(text);
    Ideal IX(pf.ring, *pf.ideal("IX"));
    out.emplace_back(name + " X", IX);
    if (!pf.ideal("ID")) continue;
    UnprojectionProblem p(pf.ring, *pf.ideal("IX"), *pf.ideal("ID"));
    p.var = pf.option("var", "S");
    out.emplace_back(name + " D", p.ID);
    auto c = validate_problem(p);
    if (c.mode != Mode::Graded) continue;
    auto u = unproject(c, compute_hom_generators(c));
    out.emplace_back(name + " Y", u.IY);
    out.emplace_back(name + " N", u.J);
  }
  return out;
}

inline SuiteResult betti_symmetry() {
  SuiteResult r{"Betti symmetry of Gorenstein quotients"};
  for (const auto& [name, I] : gorenstein_corpus()) {
    ++r.cases;
    auto w = is_gorenstein_quotient(I);
    if (!w.gorenstein) {
      r.check(false, name + ": " + w.reason);
      continue;
    }
    const std::size_t c = w.codim;
    const int top = w.betti.steps[c].begin()->first;
    bool ok = true;
    for (std::size_t i = 0; i <= c; ++i)
      for (const auto& [j, b] : w.betti.steps[i]) ok = ok && w.betti.at(c - i, top - j) == b;
    r.check(ok, name);
  }
  return r;
}

inline SuiteResult hilbert_oracle(int n = 100) {
  SuiteResult r{"Hilbert series vs brute force to degree 10"};
  oracle::Random rnd(108);
  auto R = make_ring({"x", "y", "z"}, {1, 1, 2});
  for (int c = 0; c < n; ++c, ++r.cases) {
    std::vector<Polynomial> gens;
    const int m = rnd.integer(1, 3);
    for (int i = 0; i < m; ++i) gens.push_back(rnd.homogeneous(R, rnd.integer(2, 4), 3));
    Ideal I(R, gens);
    if (I.is_unit()) continue;
    auto H = hilbert_series(I);
    bool ok = H.expand(10) == oracle::dims(gens, *R, 10);
    // Additivity along a regular element.
    auto f = rnd.homogeneous(R, 1, 2);
    if (is_nonzerodivisor(f, I)) {
      std::vector<std::int64_t> num(H.numerator.size() + 1, 0);
      for (std::size_t i = 0; i < H.numerator.size(); ++i) {
        num[i] += H.numerator[i];
        num[i + 1] -= H.numerator[i];
      }
      ok = ok && series_equal(hilbert_series(sum(I, Ideal(R, {f}))), HilbertSeries(num, H.denominator));
    }
    ok = ok && series_equal(unprojection_series(H, HilbertSeries(), 1 + c % 3), H);
    r.check(ok, show(gens));
  }
  for (const auto& [name, text] : cli::corpus()) {
    auto pf = parse_problem(text);
    Ideal I(pf.ring, *pf.ideal("IX"));
    const int depth = std::stoi(pf.option("oracle_depth", "10"));
    ++r.cases;
    r.check(hilbert_series(I).expand(depth) == oracle::dims(I.generators(), *pf.ring, depth), name);
  }
  return r;
}

/// Random cubic surfaces B x = A y through the line x = y = 0, unprojected
/// once with w = x and once with w = y.
inline SuiteResult w_invariance(int n = 100) {
  SuiteResult r{"w-choice invariance"};
  oracle::Random rnd(109);
  auto R = small_ring();
  auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
  for (int c = 0; r.cases < n && c < 10 * n; ++c) {
    auto A = rnd.homogeneous(R, 2, 4), B = rnd.homogeneous(R, 2, 4);
    auto F = B * x - A * y;
    if (F.is_zero()) continue;
    UnprojectionProblem p(R, {F}, {x, y});
    std::optional<CheckedProblem> checked;
    try {
      checked = validate_problem(p);
    } catch (const HypothesisError&) {
      continue;  // degenerate draw
    }
    if (!is_nonzerodivisor(x, p.IX) || !is_nonzerodivisor(y, p.IX)) continue;
    ++r.cases;
    try {
      auto ux = unproject(*checked, compute_hom_generators(*checked, x));
      auto uy = unproject(*checked, compute_hom_generators(*checked, y));
      auto m = match_numerators(p.IX, p.f(), ux.h, uy.h, checked->k);
      r.check(m.has_value() && !m->u.is_zero(), to_string(F));
    } catch (const std::exception& e) {
      r.check(false, to_string(F) + ": " + e.what());
    }
  }
  for (const char* name : {"cubic", "z6", "cramer"}) {
    auto pf = parse_problem(*cli::corpus_text(name));
    UnprojectionProblem p(pf.ring, *pf.ideal("IX"), *pf.ideal("ID"));
    auto checked = validate_problem(p);
    const auto& f = p.f();
    auto u0 = unproject(checked, compute_hom_generators(checked, f[0]));
    for (std::size_t i = 1; i < f.size(); ++i) {
      if (!is_nonzerodivisor(f[i], p.IX)) continue;
      ++r.cases;
      auto ui = unproject(checked, compute_hom_generators(checked, f[i]));
      auto m = match_numerators(p.IX, f, u0.h, ui.h, checked.k);
      r.check(m.has_value() && !m->u.is_zero(), std::string(name) + " w = " + to_string(f[i]));
    }
  }
  return r;
}

inline SuiteResult characteristic(int n = 100) {
  SuiteResult r{"characteristic cross-check"};
  const Field fp = Field::prime(Field::kDefaultPrime);
  for (const auto& [name, I] : gorenstein_corpus()) {
    ++r.cases;
    auto Rp = with_field(I.ring(), fp);
    std::vector<Polynomial> gp;
    for (const auto& p : I.generators()) gp.push_back(parse_polynomial(to_string(p), Rp));
    Ideal Ip(Rp, gp);
    r.check(betti_table(minimal_free_resolution(I)) == betti_table(minimal_free_resolution(Ip)), name);
  }
  oracle::Random rnd(110);
  auto R = small_ring();
  auto Rp = small_ring(fp);
  for (int c = 0; c < n; ++c, ++r.cases) {
    auto gens = random_ideal(rnd, R);
    auto probe = rnd.homogeneous(R, 4, 4);
    std::vector<Polynomial> gp;
    for (const auto& g : gens) gp.push_back(parse_polynomial(to_string(g), Rp));
    r.check(is_member(probe, Ideal(R, gens)) == is_member(parse_polynomial(to_string(probe), Rp), Ideal(Rp, gp)),
            to_string(probe) + " in " + show(gens));
  }
  return r;
}

inline std::vector<std::function<SuiteResult()>> all_suites() {
  return {[] { return buchberger_fixpoint(); }, [] { return nf_idempotence(); }, [] { return membership(); },
          [] { return quotient(); },            [] { return elimination(); },    [] { return resolutions(); },
          [] { return koszul(); },              [] { return betti_symmetry(); }, [] { return hilbert_oracle(); },
          [] { return w_invariance(); },        [] { return characteristic(); }};
}

}  // namespace props
