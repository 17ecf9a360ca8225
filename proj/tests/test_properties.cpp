#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "property_checks.hpp"

using namespace conlat::test;

namespace {

void expect(const PropertyResult& r) {
  CAPTURE(r.name);
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.cases > 0);
  CHECK(r.failure_count == 0);
}

}  // namespace

TEST_CASE("adjunction") { expect(check_adjunction()); }
TEST_CASE("join preservation") { expect(check_join_preservation()); }
TEST_CASE("composition") { expect(check_composition()); }
TEST_CASE("commutator oracle") { expect(check_commutator_oracle()); }
TEST_CASE("radical laws") { expect(check_radical_laws()); }
TEST_CASE("homeomorphism of spectra") { expect(check_homeo()); }
TEST_CASE("admissibility, prime-or-top form") { expect(check_admfret_refined()); }
TEST_CASE("reticulation of quotients") { expect(check_presquo()); }
TEST_CASE("semiprime quotients") { expect(check_quosprime()); }
TEST_CASE("GU, GD, LO transfer") { expect(check_gugdloid()); }
TEST_CASE("dually Brouwerian morphisms") { expect(check_brougu()); }
TEST_CASE("CBLP of products") { expect(check_prodcblp()); }

// The literal five-way agreement is not a theorem for these fixtures: some
// primes pull back to the full congruence. Recorded, not asserted.
TEST_CASE("admissibility, literal form") {
  const PropertyResult r = check_admfret_literal();
  for (const auto& f : r.failures) MESSAGE(f);
  CHECK(r.cases > 0);
}
