#include <algorithm>
#include <map>
#include <sstream>

#include "csr/colimits.hpp"
#include "csr/congruence.hpp"
#include "csr/homomorphism.hpp"
#include "csr/isomorphism.hpp"
#include "csr/report.hpp"
#include "csr/term.hpp"

namespace csr {

namespace {

std::string show_map(std::span<const Elem> map) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    out << (i > 0 ? "," : "") << map[i];
  }
  out << "]";
  return out.str();
}

std::string show_set(const std::vector<Elem>& members) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    out << (i > 0 ? "," : "") << members[i];
  }
  out << "}";
  return out.str();
}

// Runs one per-item report builder over [0, n) and concatenates in index
// order.
template <class Build>
Report fan_out(std::string suite, std::size_t n, Exec exec, Build&& build) {
  std::vector<Report> parts(n);
  for_each_index(n, exec, [&](std::size_t i) { parts[i] = build(i); });
  Report r{std::move(suite), {}};
  for (const auto& p : parts) {
    r.append(p);
  }
  return r;
}

Report coreflection_checks(const CatalogEntry& entry, const Catalog& partners) {
  Report r;
  const auto& a = entry.algebra;
  const std::string& name = a.name();
  const std::string where = " in " + compact(a);
  auto sa = over_naturals(a);
  if (!is_over_initial(sa)) {
    r.skip(name, "NotOverInitial: 1+1+1 = " +
                     std::to_string(a.add(a.add(a.one(), a.one()), a.one())) +
                     " != 1");
    return r;
  }
  auto star = star_subset(sa);

  if (star.contains(a.one())) {
    r.pass(name + "/contains-one");
  } else {
    r.fail(name + "/contains-one", "1 not in A'" + where);
  }

  std::string bad_add;
  std::string bad_mul;
  for (Elem x : star.members()) {
    for (Elem y : star.members()) {
      if (bad_add.empty() && !star.contains(a.add(x, y))) {
        bad_add = "a=" + std::to_string(x) + " b=" + std::to_string(y) +
                  " a+b=" + std::to_string(a.add(x, y)) + " not in A'" + where;
      }
      if (bad_mul.empty() && !star.contains(a.mul(x, y))) {
        bad_mul = "a=" + std::to_string(x) + " b=" + std::to_string(y) +
                  " ab=" + std::to_string(a.mul(x, y)) + " not in A'" + where;
      }
    }
  }
  if (bad_add.empty()) {
    r.pass(name + "/closed-add");
  } else {
    r.fail(name + "/closed-add", bad_add);
  }

  std::string bad_scalar;
  for (Elem s1 : sa.scalar_images()) {
    if (!star.contains(s1)) {
      bad_scalar = "s1=" + std::to_string(s1) + " not in A'" + where;
      break;
    }
    for (Elem x : star.members()) {
      if (!star.contains(a.mul(s1, x))) {
        bad_scalar = "s1=" + std::to_string(s1) + " a=" + std::to_string(x) +
                     " sa=" + std::to_string(a.mul(s1, x)) + " not in A'" + where;
        break;
      }
    }
    if (!bad_scalar.empty()) {
      break;
    }
  }
  if (bad_scalar.empty()) {
    r.pass(name + "/closed-scalar");
  } else {
    r.fail(name + "/closed-scalar", bad_scalar);
  }

  if (bad_mul.empty()) {
    r.pass(name + "/closed-mul");
  } else {
    r.fail(name + "/closed-mul", bad_mul);
  }

  auto closed = subalgebra_close(star);
  if (closed.subset == star) {
    r.pass(name + "/subalgebra", "A'=" + show_set(star.members()));
  } else {
    r.fail(name + "/subalgebra", "closure of A'=" + show_set(star.members()) +
                                     " is " + show_set(closed.subset.members()) +
                                     where);
    return r;
  }

  auto c = coreflect(sa);
  auto again = star_subset(c.algebra);
  if (again.is_full()) {
    r.pass(name + "/idempotent");
  } else {
    r.fail(name + "/idempotent",
           "star subset of A' is " + show_set(again.members()) + " in " +
               compact(c.algebra.algebra()));
  }

  for (const auto& b : partners.entries()) {
    const std::string id = name + "/couniversal/" + b.algebra.name();
    auto into_core = hom_enumerate(b.algebra, c.algebra.algebra());
    auto into_a = hom_enumerate(b.algebra, a);
    std::vector<std::vector<Elem>> images;
    for (const auto& g : into_core) {
      auto h = compose(c.inclusion, g);
      images.emplace_back(h.map().begin(), h.map().end());
    }
    std::vector<std::vector<Elem>> expected;
    for (const auto& h : into_a) {
      expected.emplace_back(h.map().begin(), h.map().end());
    }
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    bool injective =
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    if (!injective) {
      r.fail(id, "two maps B->A' agree after inclusion; B=" + compact(b.algebra) +
                     " A=" + compact(a));
      continue;
    }
    auto missing = std::find_if(expected.begin(), expected.end(), [&](const auto& m) {
      return !std::binary_search(sorted.begin(), sorted.end(), m);
    });
    if (missing != expected.end() || sorted.size() != expected.size()) {
      r.fail(id, "map " +
                     (missing != expected.end() ? show_map(*missing)
                                                : std::string("?")) +
                     " : B->A does not factor through A'; B=" +
                     compact(b.algebra) + " A=" + compact(a));
      continue;
    }
    r.pass(id, std::to_string(expected.size()) + " maps");
  }
  return r;
}

SAlgebra nat(const FiniteSemiring& a) { return over_naturals(a); }

Report closure_checks(const CatalogEntry& x, const CatalogEntry& y, Flag flag) {
  Report r;
  const auto& a = x.algebra;
  const auto& b = y.algebra;
  const std::string pair = a.name() + "+" + b.name();
  const std::string inputs = "A=" + compact(a) + " B=" + compact(b);
  const std::string flag_name(to_string(flag));

  TensorOptions serial;
  serial.exec = Exec::serial;
  try {
    auto t = tensor_coproduct(nat(a), nat(b), serial);
    const auto& c = t.algebra();
    if (classify(c).has(flag)) {
      r.pass(pair + "/coproduct", "order " + std::to_string(c.order()) +
                                      " bound " + std::to_string(t.bound));
    } else {
      r.fail(pair + "/coproduct", "coproduct " + compact(c) + " lacks " +
                                      flag_name + "; " + inputs);
    }
  } catch (const BoundUnstable& e) {
    r.fail(pair + "/coproduct", std::string(e.what()) + "; " + inputs);
  }

  auto homs = hom_enumerate(a, b);
  if (homs.empty()) {
    return r;
  }
  const auto& f = homs.front();
  const auto& g = homs.back();
  auto q = coequalizer(f, g);
  if (!(compose(q.projection, f) == compose(q.projection, g))) {
    r.fail(pair + "/coequalizer", "projection does not coequalize f=" +
                                      show_map(f.map()) + " g=" + show_map(g.map()) +
                                      "; " + inputs);
  } else if (!classify(q.algebra).has(flag)) {
    r.fail(pair + "/coequalizer", "quotient " + compact(q.algebra) + " lacks " +
                                      flag_name + "; f=" + show_map(f.map()) +
                                      " g=" + show_map(g.map()) + "; " + inputs);
  } else {
    r.pass(pair + "/coequalizer", "order " + std::to_string(q.algebra.order()));
  }

  try {
    auto p = pushout(identity_hom(a), f, serial);
    bool commutes = compose(p.left_leg, identity_hom(a)) == compose(p.right_leg, f);
    if (!commutes) {
      r.fail(pair + "/pushout", "legs do not commute for h=" + show_map(f.map()) +
                                    "; " + inputs);
    } else if (!find_isomorphism(p.algebra, b)) {
      r.fail(pair + "/pushout", "pushout of (id, h=" + show_map(f.map()) +
                                    ") is " + compact(p.algebra) +
                                    ", not isomorphic to B; " + inputs);
    } else if (!classify(p.algebra).has(flag)) {
      r.fail(pair + "/pushout", "pushout lacks " + flag_name + "; " + inputs);
    } else {
      r.pass(pair + "/pushout");
    }
  } catch (const BoundUnstable& e) {
    r.fail(pair + "/pushout", std::string(e.what()) + "; " + inputs);
  }
  return r;
}

std::vector<Elem> where_holds(const FiniteSemiring& a,
                              const std::vector<Identity>& laws) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.order(); ++x) {
    bool all = true;
    for (const auto& law : laws) {
      Assignment env{{law.variables().front(), x}};
      if (eval_term(a, law.lhs(), env) != eval_term(a, law.rhs(), env)) {
        all = false;
        break;
      }
    }
    if (all) {
      out.push_back(x);
    }
  }
  return out;
}

void specialization_branch(Report& r, const FiniteSemiring& a, const Subset& star,
                     const Coreflection& core, const std::string& branch,
                     const Identity& first_law, Flag expected) {
  const std::string id = a.name() + "/" + branch;
  auto set = where_holds(a, {first_law, identities::x_squared_is_x()});
  if (set != star.members()) {
    r.fail(id + "/set", "A'=" + show_set(star.members()) + " but {a | " +
                            first_law.to_string() + ", a^2=a}=" + show_set(set) +
                            " in " + compact(a));
  } else {
    r.pass(id + "/set", show_set(set));
  }
  if (classify(core.algebra.algebra()).has(expected)) {
    r.pass(id + "/coreflection", std::string(to_string(expected)) + ", order " +
                                     std::to_string(core.algebra.algebra().order()));
  } else {
    r.fail(id + "/coreflection", "coreflection " +
                                     compact(core.algebra.algebra()) + " lacks " +
                                     std::string(to_string(expected)) + "; A=" +
                                     compact(a));
  }
}

Report specialization_checks(const CatalogEntry& entry) {
  Report r;
  const auto& a = entry.algebra;
  bool rings = entry.flags.has(Flag::CRings2);
  bool idempotent = entry.flags.has(Flag::AICSR);
  if (!rings && !idempotent) {
    r.skip(a.name(), "neither CRings2 nor AICSR");
    return r;
  }
  auto sa = over_naturals(a);
  auto star = star_subset(sa);
  auto core = coreflect(sa);
  if (rings) {
    specialization_branch(r, a, star, core, "CRings2", identities::two_x_is_zero(),
                    Flag::BRings);
  }
  if (idempotent) {
    specialization_branch(r, a, star, core, "AICSR", identities::one_plus_x_is_one(),
                    Flag::DLat);
  }
  return r;
}

Report universality_checks(const CatalogEntry& x, const CatalogEntry& y,
                           const Catalog& targets) {
  Report r;
  const auto& a = x.algebra;
  const auto& b = y.algebra;
  const std::string pair = a.name() + "+" + b.name();
  TensorOptions serial;
  serial.exec = Exec::serial;
  std::optional<TensorQuotient> t;
  try {
    t = tensor_coproduct(nat(a), nat(b), serial);
  } catch (const BoundUnstable& e) {
    r.fail(pair, std::string(e.what()) + "; A=" + compact(a) + " B=" + compact(b));
    return r;
  }
  for (const auto& target : targets.entries()) {
    const auto& c = target.algebra;
    const std::string id = pair + "->" + c.name();
    const std::string inputs =
        "; A=" + compact(a) + " B=" + compact(b) + " C=" + compact(c);
    // (h o inl, h o inr) -> number of mediating h
    std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::size_t> count;
    for (const auto& h : hom_enumerate(t->algebra(), c)) {
      auto l = compose(h, t->left_injection);
      auto m = compose(h, t->right_injection);
      ++count[{std::vector<Elem>(l.map().begin(), l.map().end()),
               std::vector<Elem>(m.map().begin(), m.map().end())}];
    }
    std::string failure;
    std::size_t cocones = 0;
    for (const auto& p : hom_enumerate(a, c)) {
      for (const auto& q : hom_enumerate(b, c)) {
        ++cocones;
        const std::string legs = "p=" + show_map(p.map()) + " q=" + show_map(q.map());
        try {
          auto u = copair(*t, p, q);
          if (!(compose(u, t->left_injection) == p) ||
              !(compose(u, t->right_injection) == q)) {
            failure = "copair does not commute for " + legs + inputs;
          } else {
            auto key = std::make_pair(std::vector<Elem>(p.map().begin(), p.map().end()),
                                      std::vector<Elem>(q.map().begin(), q.map().end()));
            auto it = count.find(key);
            std::size_t k = it == count.end() ? 0 : it->second;
            if (k != 1) {
              failure = std::to_string(k) + " mediating maps for " + legs + inputs;
            }
          }
        } catch (const std::exception& e) {
          failure = std::string(e.what()) + " for " + legs + inputs;
        }
        if (!failure.empty()) {
          break;
        }
      }
      if (!failure.empty()) {
        break;
      }
    }
    if (failure.empty()) {
      r.pass(id, std::to_string(cocones) + " cocones");
    } else {
      r.fail(id, failure);
    }
  }
  return r;
}

}  // namespace

Report verify_coreflection_suite(const Catalog& catalog,
                                 const SuiteOptions& options) {
  auto partners = catalog.up_to(options.partner_order).with(Flag::CSRstar);
  const auto& entries = catalog.entries();
  return fan_out("coreflection", entries.size(), options.exec, [&](std::size_t i) {
    return coreflection_checks(entries[i], partners);
  });
}

Report verify_closure_suite(const Catalog& catalog, Flag flag,
                            const SuiteOptions& options) {
  auto flagged = catalog.up_to(options.partner_order).with(flag);
  const auto& e = flagged.entries();
  const std::size_t n = e.size();
  return fan_out("closure " + std::string(to_string(flag)), n * n, options.exec,
                 [&](std::size_t k) { return closure_checks(e[k / n], e[k % n], flag); });
}

Report verify_specialization_suite(const Catalog& catalog, const SuiteOptions& options) {
  const auto& entries = catalog.entries();
  return fan_out("specializations", entries.size(), options.exec,
                 [&](std::size_t i) { return specialization_checks(entries[i]); });
}

Report verify_coproduct_universality(const Catalog& catalog,
                                     const SuiteOptions& options) {
  auto flagged = catalog.up_to(options.partner_order).with(Flag::CSRstar);
  auto targets = catalog.up_to(options.cocone_order);
  const auto& e = flagged.entries();
  const std::size_t n = e.size();
  return fan_out("universality", n * n, options.exec, [&](std::size_t k) {
    return universality_checks(e[k / n], e[k % n], targets);
  });
}

}  // namespace csr
