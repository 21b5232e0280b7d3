#include "kmu/unprojection.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "kmu/error.hpp"
#include "kmu/linalg.hpp"
#include "kmu/module.hpp"

namespace kmu {

namespace {

int degree_of(const Polynomial& p) {
  if (p.is_zero()) throw MathError("zero polynomial has no degree");
  auto d = p.homogeneous_degree();
  return d ? *d : p.max_degree();
}

std::vector<Polynomial> concat(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string join(const std::vector<Polynomial>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += ", ";
    out += to_string(p);
  }
  return out;
}

/// Drop generators one at a time (in order) while the ideal is unchanged.
Ideal greedy_minimalize(const Ideal& I) {
  std::vector<Polynomial> gens = I.generators();
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (is_member(gens[i], Ideal(I.ring(), rest))) gens = std::move(rest);
  }
  return Ideal(I.ring(), std::move(gens));
}

FreeResolution trivial_resolution(const RingPtr& ring) {
  FreeResolution res;
  res.ring = ring;
  res.modules.push_back(FreeModule{ring, {0}});
  return res;
}

}  // namespace

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Auto: return "auto";
    case Mode::Graded: return "graded";
    case Mode::Affine: return "affine";
  }
  return "auto";
}

Mode parse_mode(const std::string& text) {
  if (text == "auto") return Mode::Auto;
  if (text == "graded") return Mode::Graded;
  if (text == "affine") return Mode::Affine;
  throw MathError("unknown mode '" + text + "' (expected auto, graded or affine)");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

UnprojectionProblem::UnprojectionProblem(RingPtr r, std::vector<Polynomial> ix, std::vector<Polynomial> id)
    : ring(r), IX(r, std::move(ix)), ID(r, std::move(id)) {}

CheckedProblem validate_problem(const UnprojectionProblem& p) {
  const RingPtr& A = p.ring;
  if (!A->positively_graded()) throw HypothesisError("graded ambient", "all variable weights must be positive");
  for (const auto* I : {&p.IX, &p.ID})
    for (const auto& g : I->generators())
      if (!g.is_homogeneous()) throw HypothesisError("homogeneity", to_string(g) + " is not homogeneous");
  if (p.ID.is_zero()) throw HypothesisError("inclusion", "I_D is zero");
  if (p.ID.is_unit()) throw HypothesisError("inclusion", "I_D is the unit ideal");

  for (const auto& g : p.IX.generators())
    if (!is_member(g, p.ID)) throw HypothesisError("inclusion", to_string(g) + " is not in I_D");

  auto mins = minimal_generator_indices(A, p.ID.generators(), p.IX.generators());
  if (mins.size() <= 1)
    throw HypothesisError("principal", "I_D is principal modulo I_X (" + std::to_string(mins.size()) +
                                           " minimal generator" + (mins.size() == 1 ? "" : "s") + ")");

  CheckedProblem c{p, Mode::Graded, 0, 0, 0, 0, 0, trivial_resolution(A), trivial_resolution(A)};
  if (!p.IX.is_zero()) {
    c.res_X = minimal_free_resolution(p.IX);
    auto gx = gorenstein_witness(c.res_X, p.IX);
    if (!gx.gorenstein) throw HypothesisError("Gorenstein X", gx.reason);
    c.codim_X = gx.codim;
  }
  c.kX = canonical_degree(c.res_X);

  c.res_D = minimal_free_resolution(p.ID);
  auto gd = gorenstein_witness(c.res_D, p.ID);
  if (!gd.gorenstein) throw HypothesisError("Gorenstein D", gd.reason);
  c.codim_D = gd.codim;
  c.kD = canonical_degree(c.res_D);

  if (c.codim_D != c.codim_X + 1)
    throw HypothesisError("codimension", "codim D = " + std::to_string(c.codim_D) + ", codim X = " +
                                             std::to_string(c.codim_X) + ", expected a difference of 1");

  c.k = c.kX - c.kD;
  switch (p.mode) {
    case Mode::Auto: c.mode = c.k >= 1 ? Mode::Graded : Mode::Affine; break;
    case Mode::Graded:
      if (c.k < 1)
        throw HypothesisError("degree of s", "graded mode needs k = k_X - k_D >= 1, found " + std::to_string(c.k));
      c.mode = Mode::Graded;
      break;
    case Mode::Affine: c.mode = Mode::Affine; break;
  }
  return c;
}

bool is_injective(const CheckedProblem& p, const Polynomial& q) {
  const Ideal& IX = p.problem.IX;
  if (q.is_zero()) return false;
  if (IX.is_zero()) return true;
  return contains(IX, intersect(ideal_quotient(IX, q), p.problem.ID));
}

std::vector<Polynomial> regular_element_candidates(const CheckedProblem& p, std::size_t budget) {
  const auto& f = p.problem.f();
  const RingPtr& A = p.problem.ring;
  std::vector<Polynomial> out;
  for (const auto& g : f) {
    if (out.size() >= budget) return out;
    out.push_back(g);
  }
  const std::size_t r = f.size();
  static const int seq[] = {0, 1, -1, 2, -2, 3, -3};
  for (int m = 1; m <= 3; ++m) {
    const int width = 2 * m + 1;
    std::vector<int> digit(r, 0);
    for (;;) {
      int maxabs = 0, nonzero = 0;
      std::optional<int> deg;
      bool homogeneous = true;
      for (std::size_t i = 0; i < r; ++i) {
        const int c = seq[digit[i]];
        if (c == 0) continue;
        ++nonzero;
        maxabs = std::max(maxabs, std::abs(c));
        const int d = degree_of(f[i]);
        if (deg && *deg != d) homogeneous = false;
        deg = d;
      }
      if (maxabs == m && nonzero >= 2 && homogeneous) {
        Polynomial w(A);
        for (std::size_t i = 0; i < r; ++i)
          if (seq[digit[i]] != 0) w += Scalar(A->field(), seq[digit[i]]) * f[i];
        if (!w.is_zero()) {
          out.push_back(std::move(w));
          if (out.size() >= budget) return out;
        }
      }
      std::size_t pos = 0;
      while (pos < r && ++digit[pos] == width) digit[pos++] = 0;
      if (pos == r) break;
    }
  }
  return out;
}

HomGenerators wiggle_to_injective(const CheckedProblem& p, HomGenerators h, std::size_t budget) {
  if (is_injective(p, h.q)) return h;
  const RingPtr& A = p.problem.ring;
  std::vector<Monomial> monos;
  if (h.k >= 0) monos = monomials_of_degree(*A, h.k);
  static const int coeffs[] = {1, -1, 2, -2, 3, -3};
  const Polynomial base = h.q;
  std::size_t attempts = 0;
  for (const auto& m : monos)
    for (int c : coeffs) {
      if (attempts++ >= budget) break;
      Polynomial wig = Polynomial::monomial(A, Scalar(A->field(), c), m);
      Polynomial q = base + wig * h.w;
      if (is_injective(p, q)) {
        h.q = std::move(q);
        h.wiggle = std::move(wig);
        h.attempts = attempts;
        return h;
      }
    }
  Ideal witness = intersect(ideal_quotient(p.problem.IX, base), p.problem.ID);
  throw HypothesisError("injectivity", "s = (" + to_string(base) + ")/(" + to_string(h.w) +
                                           ") is not injective and no wiggle within " + std::to_string(budget) +
                                           " attempts fixes it; (I_X : q) ∩ I_D = (" + join(witness.generators()) +
                                           ")");
}

HomGenerators compute_hom_generators(const CheckedProblem& p, const std::optional<Polynomial>& forced_w) {
  const RingPtr& A = p.problem.ring;
  const Ideal& IX = p.problem.IX;
  const Ideal& ID = p.problem.ID;

  std::optional<Polynomial> w;
  if (forced_w) {
    if (!is_member(*forced_w, ID)) throw HypothesisError("regular element", to_string(*forced_w) + " is not in I_D");
    if (!is_nonzerodivisor(*forced_w, IX))
      throw HypothesisError("regular element", to_string(*forced_w) + " is a zero divisor modulo I_X");
    w = *forced_w;
  } else {
    auto cands = regular_element_candidates(p);
    for (const auto& c : cands)
      if (is_nonzerodivisor(c, IX)) {
        w = c;
        break;
      }
    if (!w)
      throw HypothesisError("regular element", "no regular element of I_D modulo I_X among " +
                                                   std::to_string(cands.size()) + " candidates");
  }

  Ideal wX = sum(Ideal(A, {*w}), IX);
  Ideal Q = ideal_quotient(wX, ID);
  const int target = degree_of(*w) + p.k;

  std::vector<Polynomial> cands;
  for (auto i : minimal_generator_indices(A, Q.generators())) {
    const Polynomial& g = Q.generators()[i];
    if (degree_of(g) == target && !is_member(g, wX)) cands.push_back(g);
  }
  std::stable_sort(cands.begin(), cands.end(), [&](const Polynomial& a, const Polynomial& b) {
    return A->compare_unchecked(a.lead_monomial(), b.lead_monomial()) > 0;
  });
  if (cands.empty())
    throw HypothesisError("hom-generator", "((w) + I_X) : I_D has no minimal generator of degree " +
                                               std::to_string(target) + " outside (w) + I_X, with w = " +
                                               to_string(*w));

  std::optional<HypothesisError> last;
  for (const auto& q : cands) {
    HomGenerators h{*w, q, p.k, Q, Polynomial(A), 0};
    try {
      return wiggle_to_injective(p, std::move(h));
    } catch (const HypothesisError& e) {
      last = e;
    }
  }
  throw *last;
}

UnprojectionResult unproject(const CheckedProblem& p, const HomGenerators& hom) {
  const RingPtr& A = p.problem.ring;
  const Ideal& IX = p.problem.IX;
  const auto& f = p.problem.f();
  RingPtr AS = extend_ring(A, p.problem.var, p.mode == Mode::Graded ? p.k : 0);
  const std::size_t S = A->arity();

  std::vector<ModuleVector> cols{ModuleVector{{hom.w}}};
  for (const auto& g : IX.generators()) cols.push_back(ModuleVector{{g}});
  SubmoduleLifter lifter(FreeModule{A, {0}}, cols);

  std::vector<Polynomial> h;
  for (const auto& fi : f) {
    auto c = lifter.lift(ModuleVector{{hom.q * fi}});
    if (!c) throw InternalError("q*f_i is not in (w) + I_X for f_i = " + to_string(fi));
    h.push_back(IX.normal_form((*c)[0]));
  }

  std::vector<Polynomial> gy;
  for (const auto& g : IX.generators()) gy.push_back(embed(g, AS));
  const Polynomial s = Polynomial::variable(AS, S);
  for (std::size_t i = 0; i < f.size(); ++i) gy.push_back(s * embed(f[i], AS) - embed(h[i], AS));

  Ideal IY(AS, gy);
  Ideal IYmin = p.mode == Mode::Graded ? minimalize(IY) : greedy_minimalize(IY);
  Ideal J(A, concat(IX.generators(), h));
  return UnprojectionResult{p, hom, AS, S, std::move(h), std::move(IY), std::move(IYmin), std::move(J)};
}

UnprojectionResult unproject(const UnprojectionProblem& p) {
  CheckedProblem c = validate_problem(p);
  return unproject(c, compute_hom_generators(c));
}

Ideal project(const Ideal& IY, const std::string& var) {
  if (!IY.ring()->index_of(var)) throw MathError("'" + var + "' is not a variable of the ring");
  return eliminate(IY, {var});
}

bool CertificateReport::all_passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const Certificate& c) { return c.status == Status::Fail; });
}

const Certificate* CertificateReport::find(const std::string& name) const {
  for (const auto& c : entries)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& certificate_names() {
  static const std::vector<std::string> names{"nzd-of-S",        "Gorenstein-of-Y", "codim-of-N",
                                              "Gorenstein-of-N", "Hilbert-identity", "round-trip",
                                              "cross-check",     "numerator-consistency", "oracle-agreement"};
  return names;
}

CertificateReport verify_certificates(const UnprojectionResult& r, const VerifyOptions& opts) {
  const CheckedProblem& p = r.problem;
  const Ideal& IX = p.problem.IX;
  const bool graded = p.mode == Mode::Graded;
  static const std::set<std::string> graded_only{"Gorenstein-of-Y", "codim-of-N",  "Gorenstein-of-N",
                                                 "Hilbert-identity", "cross-check", "oracle-agreement"};

  std::optional<FreeResolution> res_Y;
  auto resolution_Y = [&]() -> const FreeResolution& {
    if (!res_Y) res_Y = minimal_free_resolution(r.IY);
    return *res_Y;
  };
  std::optional<HilbertSeries> series_Y;
  auto hilbert_Y = [&]() -> const HilbertSeries& {
    if (!series_Y) series_Y = series_from_resolution(resolution_Y());
    return *series_Y;
  };

  using Check = std::function<void(Certificate&)>;
  std::map<std::string, Check> checks;
  checks["nzd-of-S"] = [&](Certificate& c) {
    Ideal quotient = ideal_quotient(r.IY, Polynomial::variable(r.ring, r.S));
    const bool ok = contains(r.IY, quotient);
    c.status = ok ? Status::Pass : Status::Fail;
    c.detail = ok ? "(I_Y : S) = I_Y" : "(I_Y : S) strictly contains I_Y";
    for (const auto& g : quotient.groebner_basis()) c.witness.push_back(to_string(g));
  };
  checks["Gorenstein-of-Y"] = [&](Certificate& c) {
    auto w = gorenstein_witness(resolution_Y(), r.IY);
    c.status = w.gorenstein ? Status::Pass : Status::Fail;
    c.detail = w.gorenstein ? "pd = codim = " + std::to_string(w.codim) + ", last rank 1" : w.reason;
    c.betti = w.betti;
  };
  checks["codim-of-N"] = [&](Certificate& c) {
    const std::size_t cj = codim(r.J);
    const bool ok = cj == p.codim_X + 1;
    c.status = ok ? Status::Pass : Status::Fail;
    c.detail = "codim J = " + std::to_string(cj) + ", codim X = " + std::to_string(p.codim_X);
  };
  checks["Gorenstein-of-N"] = [&](Certificate& c) {
    auto w = is_gorenstein_quotient(r.J);
    c.status = w.gorenstein ? Status::Pass : Status::Fail;
    c.detail = w.gorenstein ? "pd = codim = " + std::to_string(w.codim) + ", last rank 1" : w.reason;
    c.betti = w.betti;
  };
  checks["Hilbert-identity"] = [&](Certificate& c) {
    HilbertSeries px = series_from_resolution(p.res_X);
    HilbertSeries pd = series_from_resolution(p.res_D);
    HilbertSeries expected = unprojection_series(px, pd, p.k);
    const bool ok = series_equal(hilbert_Y(), expected);
    c.status = ok ? Status::Pass : Status::Fail;
    c.detail = "P_Y = " + to_string(hilbert_Y()) + "; P_X + t^k/(1-t^k) P_D = " + to_string(expected);
    c.series = hilbert_Y();
  };
  checks["round-trip"] = [&](Certificate& c) {
    Ideal back = project(r.IY, p.problem.var);
    Ideal original = IX.map_to(back.ring(), [&] {
      std::vector<int> id(p.problem.ring->arity());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      return id;
    }());
    const bool ok = equal(back, original);
    c.status = ok ? Status::Pass : Status::Fail;
    for (const auto& g : back.groebner_basis()) c.witness.push_back(to_string(g));
    c.detail = ok ? "eliminating " + p.problem.var + " returns I_X" : "eliminating " + p.problem.var +
                                                                          " does not return I_X";
  };
  checks["cross-check"] = [&](Certificate& c) {
    CrossCheck x = kustin_miller_cross_check(r);
    c.status = x.pass ? Status::Pass : Status::Fail;
    for (const auto& g : x.tail) c.witness.push_back(to_string(g));
    if (x.change)
      c.detail = "g' = u*h + h0*f with u = " + x.change->u.to_string() + ", h0 = " + to_string(x.change->h);
    else
      c.detail = "no u != 0, h0 with g' = u*h + h0*f";
  };
  checks["numerator-consistency"] = [&](Certificate& c) {
    const auto& f = p.problem.f();
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i)
      ok = is_member(r.hom.w * r.h[i] - r.hom.q * f[i], IX);
    c.status = ok ? Status::Pass : Status::Fail;
    c.detail = ok ? "w*h_i - q*f_i in I_X for all i" : "w*h_i - q*f_i not in I_X";
  };
  checks["oracle-agreement"] = [&](Certificate& c) {
    auto brute = brute_dims(r.IY, opts.oracle_depth);
    auto series = hilbert_Y().expand(opts.oracle_depth);
    const bool ok = brute == series;
    c.status = ok ? Status::Pass : Status::Fail;
    c.detail = "Macaulay-matrix dimensions vs series expansion to degree " + std::to_string(opts.oracle_depth);
    std::string dims;
    for (auto d : brute) dims += (dims.empty() ? "" : " ") + std::to_string(d);
    c.witness.push_back(dims);
  };

  CertificateReport report;
  for (const auto& name : certificate_names()) {
    Certificate c;
    c.name = name;
    if (opts.skip.count(name)) {
      c.status = Status::Skipped;
      c.detail = "skipped by request";
    } else if (!graded && graded_only.count(name)) {
      c.status = Status::Skipped;
      c.detail = "affine mode, deg S = 0";
    } else {
      auto start = std::chrono::steady_clock::now();
      try {
        checks.at(name)(c);
      } catch (const MathError& e) {
        c.status = Status::Fail;
        c.detail = e.what();
      } catch (const HypothesisError& e) {
        c.status = Status::Fail;
        c.detail = e.what();
      }
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    report.entries.push_back(std::move(c));
  }
  return report;
}

std::optional<CoordinateChange> match_numerators(const Ideal& IX, std::span<const Polynomial> f,
                                                 std::span<const Polynomial> numerators,
                                                 std::span<const Polynomial> target, int k) {
  if (f.size() != numerators.size() || f.size() != target.size())
    throw MathError("numerator lists must match the generators of I_D");
  const RingPtr& A = IX.ring();
  const Field& field = A->field();
  std::vector<Monomial> monos;
  if (k >= 0) monos = monomials_of_degree(*A, k);
  const std::size_t ncols = 1 + monos.size();

  // One column per unknown (u, then c_m), one row per (i, monomial).
  std::vector<std::vector<Polynomial>> columns(ncols);
  std::vector<Polynomial> rhs;
  for (std::size_t i = 0; i < f.size(); ++i) {
    columns[0].push_back(IX.normal_form(numerators[i]));
    for (std::size_t j = 0; j < monos.size(); ++j)
      columns[1 + j].push_back(IX.normal_form(Polynomial::monomial(A, Scalar::one(field), monos[j]) * f[i]));
    rhs.push_back(IX.normal_form(target[i]));
  }

  std::vector<std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>>> rows;
  auto cmp = [&A](const Monomial& a, const Monomial& b) { return A->compare_unchecked(a, b) > 0; };
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    rows.emplace_back(cmp);
    auto note = [&](const Polynomial& p) {
      for (const auto& t : p.terms())
        if (rows[i].emplace(t.mono, nrows).second) ++nrows;
    };
    for (std::size_t c = 0; c < ncols; ++c) note(columns[c][i]);
    note(rhs[i]);
  }

  Matrix a(nrows, std::vector<Scalar>(ncols, Scalar::zero(field)));
  std::vector<Scalar> b(nrows, Scalar::zero(field));
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t c = 0; c < ncols; ++c)
      for (const auto& t : columns[c][i].terms()) a[rows[i].at(t.mono)][c] = t.coef;
    for (const auto& t : rhs[i].terms()) b[rows[i].at(t.mono)] = t.coef;
  }

  auto sol = solve(a, b, ncols, field);
  if (!sol) return std::nullopt;
  std::vector<Scalar> x = sol->particular;
  if (x[0].is_zero()) {
    auto it = std::find_if(sol->kernel.begin(), sol->kernel.end(),
                           [](const std::vector<Scalar>& v) { return !v[0].is_zero(); });
    if (it == sol->kernel.end()) return std::nullopt;
    for (std::size_t c = 0; c < ncols; ++c) x[c] += (*it)[c];
  }
  Polynomial h(A);
  for (std::size_t j = 0; j < monos.size(); ++j)
    if (!x[1 + j].is_zero()) h += Polynomial::monomial(A, x[1 + j], monos[j]);
  return CoordinateChange{x[0], std::move(h)};
}

CrossCheck kustin_miller_cross_check(const UnprojectionResult& r) {
  const CheckedProblem& p = r.problem;
  if (p.mode != Mode::Graded) throw MathError("cross-check needs graded mode");
  ChainMap phi = lift_chain_map(p.res_X, p.res_D);
  if (!commutes(p.res_X, p.res_D, phi)) throw InternalError("lifted chain map does not commute");
  CrossCheck out;
  out.tail = dual_tail(p.res_X, p.res_D, phi, p.problem.IX, p.problem.f());
  out.change = match_numerators(p.problem.IX, p.problem.f(), r.h, out.tail, p.k);
  out.pass = out.change.has_value();
  return out;
}

}  // namespace kmu
