#include <algorithm>

#include "csr/colimits.hpp"

namespace csr {

Homomorphism copair(const TensorQuotient& t, const Homomorphism& p,
                    const Homomorphism& q) {
  if (!(p.source() == t.left_factor.algebra()) ||
      !(q.source() == t.right_factor.algebra())) {
    throw std::invalid_argument("copair: cocone legs do not start at the factors");
  }
  if (!(p.target() == q.target())) {
    throw std::invalid_argument("copair: cocone legs have different targets");
  }
  const auto& c = p.target();
  const std::size_t n = t.algebra().order();
  std::vector<Elem> map(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t u = 0; u < t.universe.size(); ++u) {
    Elem value = c.zero();
    for (const auto& g : t.universe[u].members()) {
      value = c.add(value, c.mul(p(g.left), q(g.right)));
    }
    Elem cls = t.class_of[u];
    if (!seen[cls]) {
      seen[cls] = true;
      map[cls] = value;
    } else if (map[cls] != value) {
      throw IllDefined("IllDefined: class " + std::to_string(cls) + " of " +
                       t.algebra().name() + " maps to both " +
                       std::to_string(map[cls]) + " and " +
                       std::to_string(value) + " (at " +
                       t.universe[u].to_string() + ")");
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw std::logic_error("copair: a class has no member in the universe");
  }
  return validate_hom(std::move(map), t.algebra(), c);
}

Quotient coequalizer(const Homomorphism& f, const Homomorphism& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) {
    throw std::invalid_argument("coequalizer: maps must share source and target");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < f.source().order(); ++a) {
    if (f(a) != g(a)) {
      pairs.emplace_back(f(a), g(a));
    }
  }
  return quotient(congruence_generated(f.target(), pairs));
}

Pushout pushout(const SAlgebra& a, const SAlgebra& b, const Homomorphism& f,
                const Homomorphism& g, const TensorOptions& options) {
  if (!(f.source() == g.source())) {
    throw std::invalid_argument("pushout: maps must share their source");
  }
  if (!(f.target() == a.algebra()) || !(g.target() == b.algebra())) {
    throw std::invalid_argument("pushout: maps must land in the given algebras");
  }
  auto t = tensor_coproduct(a, b, options);
  auto q = coequalizer(compose(t.left_injection, f),
                       compose(t.right_injection, g));
  auto left = compose(q.projection, t.left_injection);
  auto right = compose(q.projection, t.right_injection);
  return Pushout{std::move(q.algebra), std::move(left), std::move(right)};
}

Pushout pushout(const Homomorphism& f, const Homomorphism& g,
                const TensorOptions& options) {
  return pushout(over_naturals(f.target()), over_naturals(g.target()), f, g,
                 options);
}

Colimit colimit_diagram(const Diagram& d, const TensorOptions& options) {
  if (d.objects.empty()) {
    throw EmptyDiagram();
  }
  for (const auto& arrow : d.arrows) {
    if (arrow.source >= d.objects.size() || arrow.target >= d.objects.size()) {
      throw std::invalid_argument("diagram arrow endpoint out of range");
    }
    if (!(arrow.map.source() == d.objects[arrow.source].algebra()) ||
        !(arrow.map.target() == d.objects[arrow.target].algebra())) {
      throw std::invalid_argument("diagram arrow does not match its endpoints");
    }
  }
  for (const auto& object : d.objects) {
    if (!(object.base() == d.objects.front().base())) {
      throw BaseMismatch("BaseMismatch: diagram objects over different bases");
    }
  }

  SAlgebra wide = d.objects.front();
  std::vector<Homomorphism> legs{identity_hom(wide.algebra())};
  for (std::size_t i = 1; i < d.objects.size(); ++i) {
    auto t = tensor_coproduct(wide, d.objects[i], options);
    for (auto& leg : legs) {
      leg = compose(t.left_injection, leg);
    }
    legs.push_back(t.right_injection);
    wide = t.result;
  }

  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& arrow : d.arrows) {
    const auto& from = legs[arrow.source];
    const auto& to = legs[arrow.target];
    for (Elem x = 0; x < arrow.map.source().order(); ++x) {
      pairs.emplace_back(from(x), to(arrow.map(x)));
    }
  }
  auto q = quotient(congruence_generated(wide.algebra(), pairs));
  for (auto& leg : legs) {
    leg = compose(q.projection, leg);
  }
  return Colimit{std::move(q.algebra), std::move(legs)};
}

}  // namespace csr
