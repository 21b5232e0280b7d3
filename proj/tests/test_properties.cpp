#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "properties.hpp"

namespace {

void expect(const props::SuiteResult& r, int min_cases = 100) {
  INFO(r.name << ": " << r.cases << " cases, first failure " << r.first_failure);
  CHECK(r.cases >= min_cases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("Buchberger fixpoint") { expect(props::buchberger_fixpoint()); }
TEST_CASE("NF idempotence") { expect(props::nf_idempotence()); }
TEST_CASE("membership consistency and order independence") { expect(props::membership()); }
TEST_CASE("quotient correctness") { expect(props::quotient()); }
TEST_CASE("elimination correctness") { expect(props::elimination()); }
TEST_CASE("resolutions are exact minimal complexes") { expect(props::resolutions()); }
TEST_CASE("complete intersections resolve by Koszul") { expect(props::koszul()); }
TEST_CASE("Betti symmetry on the Gorenstein corpus") { expect(props::betti_symmetry(), 10); }
TEST_CASE("Hilbert series against the Macaulay oracle") { expect(props::hilbert_oracle()); }
TEST_CASE("unprojection does not depend on w") { expect(props::w_invariance()); }
TEST_CASE("rational and prime field runs agree") { expect(props::characteristic()); }
