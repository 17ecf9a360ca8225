#include "conlat/constructions.hpp"

#include "conlat/error.hpp"

namespace conlat {

Quotient quotient_algebra(const FiniteAlgebra& a, const Congruence& theta) {
  if (theta.size() != a.size() || !is_congruence(a, theta))
    throw Error(ErrorCode::NotACongruence,
                "cannot form a quotient of '" + a.name() + "' by a non-congruence");
  const std::size_t n = a.size();
  const std::size_t k = theta.block_count();
  std::vector<Element> proj(n);
  std::vector<Element> reps;
  std::vector<std::string> labels;
  for (const auto& block : theta.blocks()) {
    for (Element x : block) proj[x] = static_cast<Element>(reps.size());
    reps.push_back(block.front());
    labels.push_back(a.label(block.front()));
  }

  std::vector<Operation> ops;
  for (std::size_t o = 0; o < a.ops().size(); ++o) {
    const Operation& op = a.ops()[o];
    const std::size_t count = tuple_count(k, op.arity);
    std::vector<Element> table(count);
    std::vector<Element> args(op.arity), lifted(op.arity);
    for (std::size_t t = 0; t < count; ++t) {
      decode_tuple(t, k, args);
      for (std::size_t i = 0; i < op.arity; ++i) lifted[i] = reps[args[i]];
      table[t] = proj[a.apply(o, lifted)];
    }
    ops.push_back(Operation{op.name, op.arity, std::move(table)});
  }
  FiniteAlgebra q = FiniteAlgebra::make(a.name() + "/" + format_partition(a, theta),
                                        std::move(labels), std::move(ops));
  Morphism p = Morphism::make("p", a, q, std::move(proj));
  return Quotient{std::move(q), std::move(p)};
}

FiniteAlgebra product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.same_signature(b))
    throw Error(ErrorCode::SignatureMismatch, "algebras '" + a.name() + "' and '" +
                                                  b.name() + "' have different signatures");
  const std::size_t m = b.size();
  const std::size_t n = a.size() * m;
  if (n > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge, "product of '" + a.name() + "' and '" +
                                                b.name() + "' is too large");
  std::vector<std::string> labels;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < m; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");

  std::vector<Operation> ops;
  for (std::size_t k = 0; k < a.ops().size(); ++k) {
    const std::size_t arity = a.ops()[k].arity;
    const std::size_t count = tuple_count(n, arity);
    std::vector<Element> table(count);
    std::vector<Element> args(arity), left(arity), right(arity);
    for (std::size_t t = 0; t < count; ++t) {
      decode_tuple(t, n, args);
      for (std::size_t i = 0; i < arity; ++i) {
        left[i] = static_cast<Element>(args[i] / m);
        right[i] = static_cast<Element>(args[i] % m);
      }
      table[t] = static_cast<Element>(a.apply(k, left) * m + b.apply(k, right));
    }
    ops.push_back(Operation{a.ops()[k].name, arity, std::move(table)});
  }
  return FiniteAlgebra::make(a.name() + "x" + b.name(), std::move(labels), std::move(ops));
}

Morphism first_projection(const FiniteAlgebra& product, const FiniteAlgebra& a,
                          const FiniteAlgebra& b) {
  std::vector<Element> map(product.size());
  for (Element x = 0; x < map.size(); ++x) map[x] = static_cast<Element>(x / b.size());
  return Morphism::make("pi1", product, a, std::move(map));
}

Morphism second_projection(const FiniteAlgebra& product, const FiniteAlgebra&,
                           const FiniteAlgebra& b) {
  std::vector<Element> map(product.size());
  for (Element x = 0; x < map.size(); ++x) map[x] = static_cast<Element>(x % b.size());
  return Morphism::make("pi2", product, b, std::move(map));
}

Congruence product_congruence(const Congruence& theta, const Congruence& zeta) {
  const std::size_t m = zeta.size();
  std::vector<std::size_t> labels(theta.size() * m);
  for (std::size_t x = 0; x < theta.size(); ++x)
    for (std::size_t y = 0; y < m; ++y) labels[x * m + y] = theta.rep(static_cast<Element>(x)) * m +
                                                            zeta.rep(static_cast<Element>(y));
  return Congruence::from_labels(labels);
}

bool has_skew_congruences(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const ConLattice ca = con(a), cb = con(b);
  const ConLattice cp = con(product_algebra(a, b));
  return cp.size() != ca.size() * cb.size();
}

}  // namespace conlat
