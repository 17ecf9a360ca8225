#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conlat/algebra.hpp"
#include "conlat/congruence.hpp"
#include "conlat/constructions.hpp"
#include "support.hpp"

using namespace conlat;
using namespace conlat::test;

namespace {

RawAlgebra raw_unary(std::vector<std::string> labels,
                     std::vector<std::pair<std::string, std::string>> rows) {
  RawAlgebra raw;
  raw.name = "A";
  raw.labels = std::move(labels);
  RawOperation op;
  op.name = "f";
  op.arity = 1;
  for (auto& [x, y] : rows) op.rows.push_back({{x}, y});
  raw.ops.push_back(op);
  return raw;
}

}  // namespace

TEST_CASE("validation rejects malformed algebras") {
  CHECK(error_code_of([] { validate_algebra(raw_unary({}, {})); }) == ErrorCode::EmptyCarrier);
  CHECK(error_code_of([] { validate_algebra(raw_unary({"a", "a"}, {{"a", "a"}})); }) ==
        ErrorCode::DuplicateLabel);
  CHECK(error_code_of([] { validate_algebra(raw_unary({"a", "b"}, {{"a", "a"}})); }) ==
        ErrorCode::NonTotalTable);
  CHECK(error_code_of([] {
          validate_algebra(raw_unary({"a", "b"}, {{"a", "a"}, {"b", "z"}}));
        }) == ErrorCode::TableEntryOutOfRange);

  RawAlgebra bad_arity = raw_unary({"a"}, {{"a", "a"}});
  bad_arity.ops[0].rows[0].args.push_back("a");
  CHECK(error_code_of([&] { validate_algebra(bad_arity); }) == ErrorCode::ArityMismatch);

  RawAlgebra dup = raw_unary({"a"}, {{"a", "a"}});
  dup.ops.push_back(dup.ops[0]);
  CHECK(error_code_of([&] { validate_algebra(dup); }) == ErrorCode::DuplicateOperation);
}

TEST_CASE("fixture algebras load with their published sizes") {
  CHECK(fixture("N5").size() == 5);
  CHECK(fixture("L22").size() == 4);
  CHECK(fixture("N").size() == 5);
  CHECK(fixture("P").size() == 4);
  CHECK(fixture("R").size() == 3);
  CHECK(fixture("U").size() == 5);
  CHECK(fixture("V").size() == 3);
  const FiniteAlgebra v = fixture("V");
  CHECK(v.apply(0, {1, 1}) == 0);
  CHECK(v.apply(0, {2, 2}) == 0);
  CHECK(v.apply(0, {1, 2}) == 2);
}

TEST_CASE("homomorphism validation") {
  const FiniteAlgebra n5 = fixture("N5");
  const FiniteAlgebra l22 = fixture("L22");
  // 0->0, a->a, b->b, c->a, 1->1 breaks b∨c.
  CHECK(error_code_of([&] {
          validate_morphism("bad", n5, l22,
                            {{"0", "0"}, {"a", "a"}, {"b", "b"}, {"c", "a"}, {"1", "1"}});
        }) == ErrorCode::NotAHomomorphism);
  CHECK(error_code_of([&] {
          validate_morphism("partial", n5, l22, {{"0", "0"}, {"a", "a"}});
        }) == ErrorCode::MissingMapping);
  CHECK(error_code_of([&] { validate_morphism("sig", n5, fixture("V"), {}); }) ==
        ErrorCode::SignatureMismatch);

  const Morphism h = fixture_morphism("ex3", "h");
  CHECK(h.map() == std::vector<Element>{0, 0, 2, 2, 2});
  const Morphism id = Morphism::identity(n5);
  CHECK(id.is_injective());
  CHECK(id.is_surjective());
}

TEST_CASE("composition is map composition") {
  const Morphism i = fixture_morphism("ex3", "i");
  const Morphism t = fixture_morphism("ex3", "t");
  const Morphism ti = compose(t, i);
  CHECK(ti.source().name() == "T");
  CHECK(ti.target().name() == "T");
  for (Element x = 0; x < ti.source().size(); ++x) CHECK(ti(x) == t(i(x)));
}

TEST_CASE("quotients") {
  const FiniteAlgebra n5 = fixture("N5");
  const Congruence gamma = parse_blocks(n5, "{b,c}");
  const Quotient q = quotient_algebra(n5, gamma);
  CHECK(q.algebra.size() == 4);
  CHECK(q.algebra.labels() == std::vector<std::string>{"0", "a", "b", "1"});
  CHECK(q.projection.is_surjective());
  CHECK(kernel(q.projection) == gamma);

  const Quotient qd = quotient_algebra(n5, Congruence::identity(5));
  CHECK(algebras_isomorphic(qd.algebra, n5));
  CHECK(quotient_algebra(n5, Congruence::full(5)).algebra.size() == 1);

  const Congruence bad = Congruence::from_pairs(5, std::vector<ElementPair>{{0, 1}});
  CHECK(error_code_of([&] { quotient_algebra(n5, bad); }) == ErrorCode::NotACongruence);
}

TEST_CASE("products") {
  const FiniteAlgebra l2 = fixture("L2");
  const FiniteAlgebra p = product_algebra(l2, l2);
  CHECK(p.size() == 4);
  CHECK(algebras_isomorphic(p, fixture("L22")));
  CHECK_FALSE(has_skew_congruences(l2, l2));
  CHECK(con(p).size() == 4);

  const FiniteAlgebra one = quotient_algebra(fixture("N5"), Congruence::full(5)).algebra;
  CHECK(algebras_isomorphic(product_algebra(fixture("N5"), one), fixture("N5")));

  const Morphism p1 = first_projection(p, l2, l2);
  CHECK(p1.is_surjective());
  CHECK(error_code_of([&] { product_algebra(l2, fixture("V")); }) ==
        ErrorCode::SignatureMismatch);
}
