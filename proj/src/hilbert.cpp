#include "kmu/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "kmu/error.hpp"
#include "kmu/linalg.hpp"

namespace kmu {

namespace {

using Coeffs = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("Hilbert series coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("Hilbert series coefficient overflow");
  return r;
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  trim(out);
  return out;
}

Coeffs plus(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], b[i]);
  trim(out);
  return out;
}

Coeffs one_minus(int a) {
  Coeffs c(static_cast<std::size_t>(a) + 1, 0);
  c[0] = 1;
  c[static_cast<std::size_t>(a)] = -1;
  return c;
}

Coeffs product(const std::vector<int>& weights) {
  Coeffs out{1};
  for (int a : weights) out = mul(out, one_minus(a));
  return out;
}

/// Exact quotient by (1 - t^a), if it exists.
std::optional<Coeffs> divide_one_minus(const Coeffs& num, int a) {
  const std::size_t s = static_cast<std::size_t>(a);
  if (num.size() <= s) return std::nullopt;
  Coeffs q(num.size(), 0);
  for (std::size_t i = 0; i < num.size(); ++i) q[i] = checked_add(num[i], i >= s ? q[i - s] : 0);
  for (std::size_t i = num.size() - s; i < num.size(); ++i)
    if (q[i] != 0) return std::nullopt;
  q.resize(num.size() - s);
  trim(q);
  return q;
}

/// Weights (with multiplicity) in `have` but missing from `want`'s multiset.
std::vector<int> missing(const std::vector<int>& have, const std::vector<int>& want) {
  std::map<int, int> count;
  for (int a : have) ++count[a];
  std::vector<int> out;
  for (int a : want)
    if (count[a] > 0)
      --count[a];
    else
      out.push_back(a);
  return out;
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int w : missing(a, b)) out.push_back(w);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<std::int64_t> num, std::vector<int> den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  trim(numerator);
  for (int a : denominator)
    if (a <= 0) throw MathError("Hilbert series denominator weights must be positive");
  std::sort(denominator.rbegin(), denominator.rend());
}

std::vector<std::int64_t> HilbertSeries::expand(int d_max) const {
  if (d_max < 0) throw MathError("negative expansion depth");
  Coeffs c(static_cast<std::size_t>(d_max) + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i < c.size(); ++i) c[i] = numerator[i];
  for (int a : denominator)
    for (std::size_t i = static_cast<std::size_t>(a); i < c.size(); ++i)
      c[i] = checked_add(c[i], c[i - static_cast<std::size_t>(a)]);
  return c;
}

HilbertSeries HilbertSeries::canonical() const {
  if (numerator.empty()) return HilbertSeries{};
  Coeffs num = numerator;
  std::vector<int> den = denominator;
  std::vector<int> kept;
  for (int a : den) {
    if (auto q = divide_one_minus(num, a))
      num = std::move(*q);
    else
      kept.push_back(a);
  }
  return HilbertSeries(std::move(num), std::move(kept));
}

HilbertSeries series_from_resolution(const FreeResolution& res) {
  Coeffs num;
  for (std::size_t i = 0; i < res.modules.size(); ++i) {
    for (int t : res.modules[i].twists) {
      if (t < 0) throw MathError("negative twist in resolution");
      const std::size_t d = static_cast<std::size_t>(t);
      if (num.size() <= d) num.resize(d + 1, 0);
      num[d] = checked_add(num[d], i % 2 == 0 ? 1 : -1);
    }
  }
  return HilbertSeries(std::move(num), res.ring->weights()).canonical();
}

HilbertSeries hilbert_series(const Ideal& I) {
  for (const auto& g : I.generators())
    if (!g.is_homogeneous()) throw MathError("Hilbert series needs homogeneous generators: " + to_string(g));
  if (!I.ring()->positively_graded()) throw MathError("Hilbert series needs a positively graded ring");
  if (I.is_unit()) return HilbertSeries{};
  return series_from_resolution(minimal_free_resolution(I));
}

std::vector<std::int64_t> brute_dims(const Ideal& I, int d_max) {
  if (d_max < 0) throw MathError("d_max must be non-negative");
  const Ring& ring = *I.ring();
  if (!ring.positively_graded()) throw MathError("brute-force dimensions need a positively graded ring");
  std::vector<std::pair<int, const Polynomial*>> gens;
  for (const auto& g : I.generators()) {
    auto d = g.homogeneous_degree();
    if (!d) throw MathError("brute-force dimensions need homogeneous generators: " + to_string(g));
    if (*d == 0) throw MathError("brute-force dimensions need a proper ideal");
    gens.emplace_back(*d, &g);
  }
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= d_max; ++n) {
    std::vector<Monomial> basis = monomials_of_degree(ring, n);
    std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>> index(
        [&ring](const Monomial& a, const Monomial& b) { return ring.compare_unchecked(a, b) > 0; });
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    RowEchelon echelon(ring.field());
    for (const auto& [deg, g] : gens) {
      if (deg > n) continue;
      for (const auto& mm : monomials_of_degree(ring, n - deg)) {
        SparseRow row;
        for (const auto& t : g->terms()) row.emplace_back(index.at(t.mono * mm), t.coef);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        echelon.insert(std::move(row));
      }
    }
    dims.push_back(static_cast<std::int64_t>(basis.size() - echelon.rank()));
  }
  return dims;
}

bool series_equal(const HilbertSeries& p, const HilbertSeries& q) {
  return mul(p.numerator, product(q.denominator)) == mul(q.numerator, product(p.denominator));
}

HilbertSeries add(const HilbertSeries& p, const HilbertSeries& q) {
  if (p.is_zero()) return q.canonical();
  if (q.is_zero()) return p.canonical();
  std::vector<int> den = merged(p.denominator, q.denominator);
  Coeffs a = mul(p.numerator, product(missing(p.denominator, den)));
  Coeffs b = mul(q.numerator, product(missing(q.denominator, den)));
  return HilbertSeries(plus(a, b), den).canonical();
}

HilbertSeries unprojection_series(const HilbertSeries& px, const HilbertSeries& pd, int k) {
  if (k <= 0) throw MathError("unprojection series needs k >= 1, got " + std::to_string(k));
  Coeffs shift(static_cast<std::size_t>(k) + 1, 0);
  shift[static_cast<std::size_t>(k)] = 1;
  std::vector<int> den = pd.denominator;
  den.push_back(k);
  HilbertSeries term(mul(pd.numerator, shift), den);
  return add(px, term);
}

std::string poly_to_string(const std::vector<std::int64_t>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = coeffs[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const std::uint64_t mag = neg ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i > 0) {
      if (mag != 1) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const HilbertSeries& s) {
  std::string num = "(" + poly_to_string(s.numerator) + ")";
  if (s.denominator.empty()) return num;
  std::map<int, int> count;
  for (int a : s.denominator) ++count[a];
  std::string den;
  for (const auto& [a, e] : count) {
    if (!den.empty()) den += "*";
    den += a == 1 ? "(1-t)" : "(1-t^" + std::to_string(a) + ")";
    if (e > 1) den += "^" + std::to_string(e);
  }
  if (count.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

}  // namespace kmu
