#pragma once

// Buchberger engine over graded free modules A^n. Ideals are the rank-1 case.
// Internal to the library; the public surface lives in groebner.hpp and
// module.hpp.

#include <cstdint>
#include <limits>
#include <set>
#include <vector>

#include "kmu/ring.hpp"
#include "kmu/scalar.hpp"

namespace kmu::detail {

struct VTerm {
  Scalar coef;
  Monomial mono;
  std::uint32_t comp;
  int deg;  // wdeg(mono) + twist(comp)
};

/// Terms strictly descending under the module order.
using Vec = std::vector<VTerm>;

/// Term order on A^n: components [0, elim) dominate the rest when elim > 0;
/// then (for graded ring orders) twisted degree, ring order, lower component first.
class ModuleOrder {
 public:
  ModuleOrder(RingPtr ring, std::vector<int> twists, std::size_t elim = 0);

  int compare(const VTerm& a, const VTerm& b) const;
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<int>& twists() const { return twists_; }
  std::size_t elim() const { return elim_; }
  std::size_t rank() const { return twists_.size(); }

  int term_degree(const Monomial& m, std::uint32_t comp) const { return ring_->wdeg(m) + twists_[comp]; }
  void sort(Vec& v) const;

 private:
  RingPtr ring_;
  std::vector<int> twists_;
  std::size_t elim_;
  bool degree_first_;
};

/// result = a[from..] - c * m * b[skip..], assuming equal lead terms were cancelled.
Vec sub_mul(const ModuleOrder& ord, const Vec& a, std::size_t from, const Scalar& c, const Monomial& m, const Vec& b,
            std::size_t skip);
void make_monic(Vec& v);
int max_degree(const Vec& v);

class Engine {
 public:
  explicit Engine(ModuleOrder order) : ord_(std::move(order)) {}

  /// Run Buchberger on the given generators, interleaving them by degree with
  /// the S-pairs. Generators flagged `background` are always inserted but never
  /// reported as minimal. Returns, for each input, whether it contributed a new
  /// basis element when it was reached; for homogeneous input over a positively
  /// graded ring these are exactly the minimal generators (modulo background).
  std::vector<bool> run(const std::vector<Vec>& gens, const std::vector<bool>& background = {},
                        int max_degree = std::numeric_limits<int>::max());

  /// Adopt `basis` (already a Gröbner basis) for reduction only.
  void load(std::vector<Vec> basis);

  /// Full reduction. With `stop_block`, terms in components >= stop_block are
  /// carried along but never used as reduction heads.
  Vec reduce(Vec p, std::size_t stop_block = std::numeric_limits<std::size_t>::max()) const;

  /// Minimal, tail-reduced, monic basis sorted ascending by lead term.
  std::vector<Vec> reduced_basis() const;

  /// Schreyer mode: remainders whose lead lies in components >= block are
  /// recorded as syzygies instead of joining the basis.
  void set_syzygy_block(std::size_t block) { syz_block_ = block; }
  const std::vector<Vec>& syzygies() const { return syzygies_; }

  const ModuleOrder& order() const { return ord_; }
  std::size_t basis_size() const { return basis_.size(); }

 private:
  struct Element {
    Vec v;
    int sugar;
    std::uint32_t support;
    bool redundant = false;
  };
  struct Pair {
    int sugar;
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    bool operator<(const Pair& o) const {
      if (sugar != o.sugar) return sugar < o.sugar;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };

  int find_reducer(const VTerm& t) const;
  void insert(Vec v, int sugar);
  void process_pair(const Pair& p);

  ModuleOrder ord_;
  std::vector<Element> basis_;
  std::set<Pair> pairs_;
  std::size_t syz_block_ = std::numeric_limits<std::size_t>::max();
  std::vector<Vec> syzygies_;
};

}  // namespace kmu::detail
