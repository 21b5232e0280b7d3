#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmu/groebner.hpp"
#include "kmu/hilbert.hpp"
#include "kmu/resolution.hpp"

namespace kmu {

enum class Mode { Auto, Graded, Affine };

std::string to_string(Mode m);
Mode parse_mode(const std::string& text);

/// I_X ⊂ I_D in the ambient ring A; f are the generators of I_D as listed.
struct UnprojectionProblem {
  RingPtr ring;
  Ideal IX;
  Ideal ID;
  Mode mode = Mode::Auto;
  std::string var = "S";

  UnprojectionProblem(RingPtr ring, std::vector<Polynomial> ix, std::vector<Polynomial> id);
  const std::vector<Polynomial>& f() const { return ID.generators(); }
};

/// A problem whose hypotheses have been checked, with the resolutions that
/// certified them.
struct CheckedProblem {
  UnprojectionProblem problem;
  Mode mode;  // Graded or Affine
  int k;      // k_X - k_D
  int kX;
  int kD;
  std::size_t codim_X;
  std::size_t codim_D;
  FreeResolution res_X;
  FreeResolution res_D;
};

/// Checks, in order: inclusion, I_D not principal modulo I_X, Gorenstein X,
/// Gorenstein D, codimension difference 1, degree of s. Throws
/// HypothesisError naming the first failure.
CheckedProblem validate_problem(const UnprojectionProblem& p);

/// s = q / w generating Hom(I_D/I_X, O_X) together with the inclusion.
struct HomGenerators {
  Polynomial w;
  Polynomial q;
  int k = 0;
  Ideal Q;                // ((w) + I_X) : I_D
  Polynomial wiggle;      // h with q = q_0 + h·w; zero when none was needed
  std::size_t attempts = 0;
};

/// (I_X : q) ∩ I_D ⊆ I_X.
bool is_injective(const CheckedProblem& p, const Polynomial& q);

/// Candidates for w: the f_i in order, then small integer combinations.
std::vector<Polynomial> regular_element_candidates(const CheckedProblem& p, std::size_t budget = 200);

/// Lemma-1.1 generator s. With `w`, that element is used (it must be regular).
HomGenerators compute_hom_generators(const CheckedProblem& p, const std::optional<Polynomial>& w = std::nullopt);

/// Replace q by q + h·w (h of degree k, deterministic sequence) until s is
/// injective. Throws HypothesisError("injectivity", ...) when the budget runs out.
HomGenerators wiggle_to_injective(const CheckedProblem& p, HomGenerators h, std::size_t budget = 200);

struct UnprojectionResult {
  CheckedProblem problem;
  HomGenerators hom;
  RingPtr ring;          // A[S]
  std::size_t S = 0;     // index of S in ring
  std::vector<Polynomial> h;   // q·f_i ≡ w·h_i mod I_X, reduced mod I_X
  Ideal IY;              // I_X + (S f_i - h_i)
  Ideal IY_minimal;
  Ideal J;               // I_X + (h_i), in A
};

UnprojectionResult unproject(const CheckedProblem& p, const HomGenerators& h);
UnprojectionResult unproject(const UnprojectionProblem& p);

/// Eliminate S; the result lives in the ring without S.
Ideal project(const Ideal& IY, const std::string& var);

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

struct Certificate {
  std::string name;
  Status status = Status::Fail;
  std::string detail;
  std::optional<BettiTable> betti;
  std::optional<HilbertSeries> series;
  std::vector<std::string> witness;
  double seconds = 0;
};

struct CertificateReport {
  std::vector<Certificate> entries;

  bool all_passed() const;
  const Certificate* find(const std::string& name) const;
};

struct VerifyOptions {
  std::set<std::string> skip;
  int oracle_depth = 10;
};

/// Names of all certificates, in report order.
const std::vector<std::string>& certificate_names();

CertificateReport verify_certificates(const UnprojectionResult& r, const VerifyOptions& opts = {});

/// S ↦ uS + h: g_i ≡ u·h_i + h·f_i modulo I_X for all i.
struct CoordinateChange {
  Scalar u;
  Polynomial h;
};

/// Solve for a coordinate change matching `target` against `numerators`, by
/// linear algebra in the graded pieces (h ranges over A_k).
std::optional<CoordinateChange> match_numerators(const Ideal& IX, std::span<const Polynomial> f,
                                                 std::span<const Polynomial> numerators,
                                                 std::span<const Polynomial> target, int k);

struct CrossCheck {
  bool pass = false;
  std::vector<Polynomial> tail;  // g'_i from the chain-map tail
  std::optional<CoordinateChange> change;
};

/// Independent reconstruction of s from the resolutions of X and D.
CrossCheck kustin_miller_cross_check(const UnprojectionResult& r);

}  // namespace kmu
