#include "csr/salgebra.hpp"

#include <algorithm>

#include "csr/builtins.hpp"
#include "csr/term.hpp"

namespace csr {

const FiniteSemiring& BaseSemiring::finite() const {
  if (is_naturals()) {
    throw std::logic_error("base is the naturals, not a finite semiring");
  }
  return std::get<FiniteSemiring>(v_);
}

std::string BaseSemiring::name() const {
  if (is_naturals()) {
    return "naturals";
  }
  const auto& s = std::get<FiniteSemiring>(v_);
  return s.name().empty() ? "?" : s.name();
}

NaturalsScalarMap::NaturalsScalarMap(const FiniteSemiring& a) {
  std::vector<std::size_t> first_seen(a.order(), a.order() + 1);
  Elem v = a.zero();
  while (first_seen[v] > a.order()) {
    first_seen[v] = values_.size();
    values_.push_back(v);
    v = a.add(v, a.one());
  }
  cycle_start_ = first_seen[v];
}

Elem NaturalsScalarMap::operator()(std::uint64_t n) const {
  if (n < values_.size()) {
    return values_[n];
  }
  return values_[cycle_start_ + (n - cycle_start_) % period()];
}

std::vector<Elem> SAlgebra::scalar_images() const {
  if (base_.is_naturals()) {
    auto images = naturals_.images();
    return {images.begin(), images.end()};
  }
  std::vector<Elem> out;
  for (Elem v : structure_->map()) {
    if (std::find(out.begin(), out.end(), v) == out.end()) {
      out.push_back(v);
    }
  }
  return out;
}

Elem SAlgebra::act(std::uint64_t s, Elem a) const {
  if (base_.is_naturals()) {
    return algebra_.mul(naturals_(s), a);
  }
  return algebra_.mul((*structure_)(static_cast<Elem>(s)), a);
}

SAlgebra validate_salgebra(BaseSemiring base, FiniteSemiring algebra,
                           std::optional<std::vector<Elem>> structure_map) {
  std::optional<Homomorphism> structure;
  if (base.is_naturals()) {
    if (structure_map) {
      throw std::invalid_argument(
          "the structure map from the naturals is determined; none may be "
          "given");
    }
  } else if (structure_map) {
    structure = validate_hom(std::move(*structure_map), base.finite(), algebra);
  } else {
    auto homs = hom_enumerate(base.finite(), algebra);
    if (homs.empty()) {
      throw NotAHomomorphism(
          {HomLaw::PreservesOne, 0, 0,
           "no homomorphism " + base.name() + " -> " + algebra.name()});
    }
    if (homs.size() > 1) {
      throw std::invalid_argument("structure map from " + base.name() +
                                  " is not unique; give it explicitly");
    }
    structure = std::move(homs.front());
  }
  SAlgebra result(std::move(base), std::move(algebra), std::move(structure));
  // s(ab) = (sa)b, by table scan.
  const auto& a = result.algebra();
  for (Elem e : result.scalar_images()) {
    for (Elem x = 0; x < a.order(); ++x) {
      for (Elem y = 0; y < a.order(); ++y) {
        if (a.mul(e, a.mul(x, y)) != a.mul(a.mul(e, x), y)) {
          throw std::logic_error("scalar action violates s(ab) = (sa)b");
        }
      }
    }
  }
  return result;
}

SAlgebra over_naturals(const FiniteSemiring& a) {
  return validate_salgebra(Naturals{}, a);
}

std::vector<std::pair<Elem, Elem>> star_generators(const FiniteSemiring& s) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < s.order(); ++x) {
    pairs.emplace_back(s.add(s.one(), s.add(x, x)), s.one());
    pairs.emplace_back(s.mul(x, x), x);
  }
  return pairs;
}

InitialObject initial_object(const BaseSemiring& base) {
  if (base.is_naturals()) {
    return InitialObject{over_naturals(builtins::nstar()), std::nullopt,
                         std::nullopt};
  }
  const auto& s = base.finite();
  auto e = congruence_generated(s, star_generators(s));
  auto q = quotient(e);
  auto algebra = q.algebra.renamed(s.name().empty() ? "I" : "I(" + s.name() + ")");
  std::vector<Elem> map(q.projection.map().begin(), q.projection.map().end());
  auto projection = validate_hom(map, s, algebra);
  auto salg = validate_salgebra(base, algebra, std::move(map));
  return InitialObject{std::move(salg), std::move(e), std::move(projection)};
}

bool is_over_initial(const SAlgebra& a) {
  const auto& alg = a.algebra();
  if (a.base().is_naturals()) {
    Elem one = alg.one();
    return alg.add(one, alg.add(one, one)) == one;
  }
  const auto& s = a.base().finite();
  auto e = congruence_generated(s, star_generators(s));
  const auto& f = *a.structure();
  for (Elem x = 0; x < s.order(); ++x) {
    if (f(x) != f(e.representative(x))) {
      return false;
    }
  }
  return true;
}

Subset star_subset(const SAlgebra& a) {
  if (!is_over_initial(a)) {
    throw NotOverInitial(a.algebra().name());
  }
  const auto& alg = a.algebra();
  std::vector<Elem> members;
  for (Elem x = 0; x < alg.order(); ++x) {
    if (alg.add(alg.one(), alg.add(x, x)) == alg.one() && alg.mul(x, x) == x) {
      members.push_back(x);
    }
  }
  return Subset(alg, std::move(members));
}

Coreflection coreflect(const SAlgebra& a) {
  auto subset = star_subset(a);
  auto sub = subalgebra_close(subset);
  if (sub.subset.size() != subset.size()) {
    throw std::logic_error("star subset of " + a.algebra().name() +
                           " is not closed under the operations");
  }
  std::optional<std::vector<Elem>> structure;
  if (!a.base().is_naturals()) {
    const auto incl = sub.inclusion.map();
    std::vector<Elem> map;
    for (Elem v : a.structure()->map()) {
      auto it = std::find(incl.begin(), incl.end(), v);
      if (it == incl.end()) {
        throw std::logic_error("structure map leaves the star subset");
      }
      map.push_back(static_cast<Elem>(it - incl.begin()));
    }
    structure = std::move(map);
  }
  auto salg = validate_salgebra(a.base(), sub.algebra, std::move(structure));
  return Coreflection{std::move(salg), std::move(sub.inclusion),
                      std::move(subset)};
}

std::string_view to_string(Flag f) {
  switch (f) {
    case Flag::CRings2:
      return "CRings2";
    case Flag::AICSR:
      return "AICSR";
    case Flag::BRings:
      return "BRings";
    case Flag::DLat:
      return "DLat";
    case Flag::CSRstar:
      return "CSRstar";
  }
  return "?";
}

Flag parse_flag(std::string_view name) {
  for (Flag f : all_flags) {
    if (to_string(f) == name) {
      return f;
    }
  }
  throw std::invalid_argument("unknown flag '" + std::string(name) + "'");
}

std::string Flags::to_string() const {
  std::string out;
  for (Flag f : all_flags) {
    if (has(f)) {
      if (!out.empty()) {
        out += ',';
      }
      out += csr::to_string(f);
    }
  }
  return out.empty() ? "-" : out;
}

Flags classify(const FiniteSemiring& a) {
  namespace id = identities;
  auto holds = [&](const Identity& law) {
    return check_identity(a, law).holds;
  };
  Flags flags;
  bool char2 = a.add(a.one(), a.one()) == a.zero();
  bool inverses = true;
  for (Elem x = 0; x < a.order() && inverses; ++x) {
    bool found = false;
    for (Elem y = 0; y < a.order() && !found; ++y) {
      found = a.add(x, y) == a.zero();
    }
    inverses = found;
  }
  bool idempotent = holds(id::x_squared_is_x());
  if (char2 && inverses) {
    flags.set(Flag::CRings2);
    if (idempotent) {
      flags.set(Flag::BRings);
    }
  }
  if (holds(id::two_x_is_x())) {
    flags.set(Flag::AICSR);
  }
  if (holds(id::x_plus_x_is_x()) && idempotent &&
      holds(id::one_plus_x_is_one())) {
    flags.set(Flag::DLat);
  }
  if (holds(id::one_plus_two_x_is_one()) && idempotent) {
    flags.set(Flag::CSRstar);
  }
  return flags;
}

}  // namespace csr
