#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kmu/cli.hpp"
#include "kmu/error.hpp"
#include "kmu/problem_file.hpp"
#include "kmu/unprojection.hpp"
#include "oracles.hpp"

using namespace kmu;

namespace {

UnprojectionProblem corpus_problem(const std::string& name) {
  auto pf = parse_problem(*cli::corpus_text(name));
  UnprojectionProblem p(pf.ring, *pf.ideal("IX"), *pf.ideal("ID"));
  p.var = pf.option("var", "S");
  return p;
}

std::vector<Polynomial> polys(const RingPtr& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

bool same_ideal(const Ideal& a, const std::vector<Polynomial>& b) { return equal(a, Ideal(a.ring(), b)); }

std::string hypothesis_of(const UnprojectionProblem& p) {
  try {
    validate_problem(p);
  } catch (const HypothesisError& e) {
    return e.hypothesis();
  }
  return "";
}

}  // namespace

TEST_CASE("validation") {
  auto cubic = validate_problem(corpus_problem("cubic"));
  CHECK(cubic.k == 1);
  CHECK(cubic.mode == Mode::Graded);
  CHECK(cubic.kX == -1);
  CHECK(cubic.kD == -2);

  auto cramer = validate_problem(corpus_problem("cramer"));
  CHECK(cramer.kX == -10);
  CHECK(cramer.kD == -12);
  CHECK(cramer.k == 2);
  CHECK(cramer.codim_X == 3);
  CHECK(cramer.codim_D == 4);

  auto nodal = validate_problem(corpus_problem("nodal"));
  CHECK(nodal.k == 0);
  CHECK(nodal.mode == Mode::Affine);

  auto R = make_ring({"x", "y"}, {1, 1});
  CHECK(hypothesis_of(UnprojectionProblem(R, {}, polys(R, {"x"}))) == "principal");
  CHECK(hypothesis_of(UnprojectionProblem(R, polys(R, {"x^2"}), polys(R, {"y"}))) == "inclusion");
  auto R3 = make_ring({"x", "y", "z"}, {1, 1, 1});
  CHECK(hypothesis_of(UnprojectionProblem(R3, polys(R3, {"x^2", "x*y", "y^2"}), polys(R3, {"x", "y"}))) ==
        "Gorenstein X");
  CHECK(hypothesis_of(UnprojectionProblem(R3, {}, polys(R3, {"x", "y"}))) == "codimension");
}

TEST_CASE("every corpus unprojection instance validates") {
  for (const auto& [name, text] : cli::corpus()) {
    auto pf = parse_problem(text);
    if (!pf.ideal("ID")) continue;
    CAPTURE(name);
    CHECK_NOTHROW(validate_problem(UnprojectionProblem(pf.ring, *pf.ideal("IX"), *pf.ideal("ID"))));
  }
}

TEST_CASE("hom generators on the corpus") {
  auto nodal = validate_problem(corpus_problem("nodal"));
  auto hn = compute_hom_generators(nodal);
  auto& An = nodal.problem.ring;
  CHECK(hn.w == parse_polynomial("x", An));
  CHECK(hn.q == parse_polynomial("y", An));
  CHECK(same_ideal(hn.Q, polys(An, {"x", "y"})));
  CHECK(hn.wiggle.is_zero());

  auto cubic = validate_problem(corpus_problem("cubic"));
  auto hc = compute_hom_generators(cubic);
  auto& Ac = cubic.problem.ring;
  auto A = parse_polynomial("z^2 + y*w", Ac);
  CHECK(hc.w == parse_polynomial("x", Ac));
  CHECK(hc.q == A);
  CHECK(contains(hc.Q, Ideal(Ac, {parse_polynomial("x", Ac), A})));
  CHECK(hc.wiggle.is_zero());

  auto z6 = validate_problem(corpus_problem("z6"));
  auto hz = compute_hom_generators(z6);
  auto& Az = z6.problem.ring;
  CHECK(hz.w == parse_polynomial("x0", Az));
  CHECK(hz.q == parse_polynomial("z", Az));
  auto f2 = z6.problem.f()[1];
  CHECK(oracle::member(hz.q * f2, {hz.w, z6.problem.IX.generators()[0]}));
}

TEST_CASE("choosing another regular element") {
  auto cubic = validate_problem(corpus_problem("cubic"));
  auto y = parse_polynomial("y", cubic.problem.ring);
  auto h = compute_hom_generators(cubic, y);
  CHECK(h.w == y);
  CHECK(h.q == parse_polynomial("w^2 + x*z", cubic.problem.ring));
  auto z = parse_polynomial("z", cubic.problem.ring);
  CHECK_THROWS_AS(compute_hom_generators(cubic, z), HypothesisError);
}

TEST_CASE("wiggle on a reducible curve") {
  // X = V(xy): the first candidate q = x vanishes on the component x = 0.
  auto R = make_ring({"x", "y"}, {1, 1});
  auto c = validate_problem(UnprojectionProblem(R, polys(R, {"x*y"}), polys(R, {"x", "y"})));
  auto x = parse_polynomial("x", R), y = parse_polynomial("y", R);
  CHECK_FALSE(is_injective(c, x));

  auto h = compute_hom_generators(c);
  CHECK(h.w == x + y);
  CHECK_FALSE(h.wiggle.is_zero());
  CHECK(is_injective(c, h.q));
  // Independently: neither generator of I_D is killed by q modulo xy.
  CHECK_FALSE(oracle::member(x * h.q, {x * y}));
  CHECK_FALSE(oracle::member(y * h.q, {x * y}));

  HomGenerators ok = compute_hom_generators(validate_problem(corpus_problem("cubic")));
  auto same = wiggle_to_injective(validate_problem(corpus_problem("cubic")), ok);
  CHECK(same.q == ok.q);
  CHECK(same.wiggle.is_zero());
}

TEST_CASE("unprojection ideals") {
  auto n = unproject(corpus_problem("nodal"));
  auto& Rn = n.ring;
  CHECK(n.S == 2);
  CHECK(Rn->weights()[n.S] == 0);
  CHECK(same_ideal(n.IY, polys(Rn, {"x^2 - y^2", "S*x - y", "S*y - x"})));
  for (const auto& g : polys(Rn, {"S*x - y", "S*y - x"}))
    CHECK(oracle::member_bounded(g, n.IY.generators(), 2));
  CHECK(oracle::member_bounded(parse_polynomial("x^2 - y^2", Rn), polys(Rn, {"S*x - y", "S*y - x"}), 3));

  auto c = unproject(corpus_problem("cubic"));
  auto& Rc = c.ring;
  CHECK(c.IY_minimal.size() == 2);
  for (const auto& g : c.IY_minimal.generators()) CHECK(g.homogeneous_degree() == 2);
  CHECK(same_ideal(c.IY, polys(Rc, {"S*x - z^2 - y*w", "S*y - w^2 - x*z"})));
  CHECK(oracle::ideal_contains(polys(Rc, {"S*x - z^2 - y*w", "S*y - w^2 - x*z"}), c.IY.generators()));

  auto r = unproject(corpus_problem("cramer"));
  CHECK(r.IY_minimal.size() == 7);
  int quadrics = 0, cubics = 0;
  for (const auto& g : r.IY_minimal.generators()) (g.homogeneous_degree() == 2 ? quadrics : cubics)++;
  CHECK(quadrics == 3);
  CHECK(cubics == 4);
  // s*x_4 is the 3x3 minor on the first three columns, up to sign and scale.
  auto minor = parse_polynomial(
      "a11*(a22*a33 - a23*a32) - a12*(a21*a33 - a23*a31) + a13*(a21*a32 - a22*a31)", r.problem.problem.ring);
  auto h4 = r.h[3];
  const Scalar u = h4.lead_coef() / minor.lead_coef();
  CHECK(h4 == u * minor);
}

TEST_CASE("certificates") {
  auto c = unproject(corpus_problem("cubic"));
  auto rep = verify_certificates(c);
  CHECK(rep.all_passed());
  for (const auto& e : rep.entries) CHECK(e.status == Status::Pass);
  REQUIRE(rep.find("Gorenstein-of-Y"));
  REQUIRE(rep.find("Gorenstein-of-Y")->betti);
  CHECK(rep.find("Gorenstein-of-Y")->betti->totals() == std::vector<int>{1, 2, 1});

  auto n = unproject(corpus_problem("nodal"));
  auto rn = verify_certificates(n);
  CHECK(rn.all_passed());
  CHECK(rn.find("nzd-of-S")->status == Status::Pass);
  CHECK(rn.find("round-trip")->status == Status::Pass);
  for (const char* name : {"Gorenstein-of-Y", "codim-of-N", "Gorenstein-of-N", "Hilbert-identity"}) {
    CHECK(rn.find(name)->status == Status::Skipped);
    CHECK(rn.find(name)->detail == "affine mode, deg S = 0");
  }

  VerifyOptions skip;
  skip.skip = {"cross-check"};
  auto rs = verify_certificates(c, skip);
  CHECK(rs.find("cross-check")->status == Status::Skipped);
  CHECK(rs.entries.size() == certificate_names().size());
}

TEST_CASE("broken numerators fail certificates") {
  auto c = unproject(corpus_problem("cubic"));
  auto bad = c;
  auto& R = c.ring;
  bad.h[0] = c.h[0] + parse_polynomial("w^2", c.problem.problem.ring);
  bad.IY = Ideal(R, {embed(c.problem.problem.IX.generators()[0], R), parse_polynomial("S*x", R) - embed(bad.h[0], R),
                     parse_polynomial("S*y", R) - embed(bad.h[1], R)});
  auto rep = verify_certificates(bad);
  CHECK_FALSE(rep.all_passed());
  CHECK(rep.find("numerator-consistency")->status == Status::Fail);
}

TEST_CASE("projection") {
  auto c = unproject(corpus_problem("cubic"));
  auto X = project(c.IY, "S");
  CHECK(same_ideal(X, polys(X.ring(), {"(w^2 + x*z)*x - (z^2 + y*w)*y"})));
  CHECK_THROWS_AS(project(c.IY, "T"), MathError);

  auto z = unproject(corpus_problem("z6"));
  auto X5 = project(z.IY, "z");
  CHECK(X5.ring()->names() == std::vector<std::string>{"x0", "x1", "x2", "x3", "y"});
  CHECK(same_ideal(X5, polys(X5.ring(), {"x0*y^2 + (x1^3 + x2^3 + x3^3 + x0*x1*x2)*y + x1^5 + x2^5 + x3^5 + "
                                         "x0^2*x1*x2*x3"})));

  auto R = make_ring({"x", "y", "S"}, {1, 1, 1});
  Ideal plain(R, polys(R, {"x^2 - y^2"}));
  auto P = project(plain, "S");
  CHECK(same_ideal(P, polys(P.ring(), {"x^2 - y^2"})));
}

TEST_CASE("cross-check") {
  auto c = unproject(corpus_problem("cubic"));
  auto x = kustin_miller_cross_check(c);
  CHECK(x.pass);
  REQUIRE(x.change);
  CHECK(x.change->h.is_zero());

  auto r = unproject(corpus_problem("cramer"));
  CHECK(kustin_miller_cross_check(r).pass);

  // S -> S + x shifts every numerator by x*f_i.
  const auto& A = c.problem.problem.ring;
  const auto& f = c.problem.problem.f();
  auto shift = parse_polynomial("x", A);
  std::vector<Polynomial> moved;
  for (std::size_t i = 0; i < f.size(); ++i) moved.push_back(c.h[i] + shift * f[i]);
  auto m = match_numerators(c.problem.problem.IX, f, c.h, moved, c.problem.k);
  REQUIRE(m);
  CHECK(m->u.is_one());
  CHECK(m->h == shift);

  std::vector<Polynomial> wrong{c.h[0] + parse_polynomial("z", A) * f[0], c.h[1]};
  CHECK_FALSE(match_numerators(c.problem.problem.IX, f, c.h, wrong, c.problem.k));
}

TEST_CASE("modes") {
  CHECK(parse_mode("affine") == Mode::Affine);
  CHECK(to_string(Mode::Graded) == "graded");
  CHECK_THROWS(parse_mode("local"));
  auto p = corpus_problem("nodal");
  p.mode = Mode::Graded;
  CHECK(hypothesis_of(p) == "degree of s");
}
