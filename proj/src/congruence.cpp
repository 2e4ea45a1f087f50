#include "csr/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "csr/union_find.hpp"

namespace csr {

Subset::Subset(FiniteSemiring algebra, std::vector<Elem> members)
    : algebra_(std::move(algebra)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= algebra_.order()) {
    throw std::invalid_argument("subset member outside the carrier");
  }
}

bool Subset::contains(Elem e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

namespace {

// Induced algebra on a closed set; index order 0, 1, then increasing.
Subalgebra induce(const FiniteSemiring& a, std::vector<Elem> closed) {
  std::sort(closed.begin(), closed.end());
  std::vector<Elem> order;  // new index -> old element
  order.push_back(a.zero());
  if (a.one() != a.zero()) {
    order.push_back(a.one());
  }
  for (Elem e : closed) {
    if (e != a.zero() && e != a.one()) {
      order.push_back(e);
    }
  }
  std::vector<Elem> index(a.order(), 0);
  for (Elem i = 0; i < order.size(); ++i) {
    index[order[i]] = i;
  }
  const std::size_t m = order.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = index[a.add(order[i], order[j])];
      mul[i * m + j] = index[a.mul(order[i], order[j])];
    }
  }
  auto sub = FiniteSemiring::make(m, std::move(add), std::move(mul),
                                  a.name().empty() ? "" : a.name() + "'");
  auto inclusion = validate_hom(order, sub, a);
  return Subalgebra{Subset(a, std::move(closed)), std::move(sub),
                    std::move(inclusion)};
}

}  // namespace

Subalgebra subalgebra_close(const FiniteSemiring& a,
                            std::span<const Elem> seed) {
  std::vector<bool> in(a.order(), false);
  std::vector<Elem> members;
  auto insert = [&](Elem e) {
    if (e >= a.order()) {
      throw std::invalid_argument("seed element outside the carrier");
    }
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  insert(a.zero());
  insert(a.one());
  for (Elem e : seed) {
    insert(e);
  }
  // Each new member is combined with everything present when it is
  // processed; later members combine with it in their own turn.
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Elem x = members[k];
      Elem y = members[j];
      insert(a.add(x, y));
      insert(a.mul(x, y));
    }
  }
  return induce(a, std::move(members));
}

Subalgebra subalgebra_close(const Subset& seed) {
  return subalgebra_close(seed.algebra(), seed.members());
}

bool is_compatible_partition(const FiniteSemiring& a,
                             std::span<const Elem> rep) {
  const auto n = static_cast<Elem>(a.order());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (rep[x] != rep[y]) {
        continue;
      }
      for (Elem c = 0; c < n; ++c) {
        if (rep[a.add(x, c)] != rep[a.add(y, c)] ||
            rep[a.mul(x, c)] != rep[a.mul(y, c)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Congruence::Congruence(FiniteSemiring algebra, std::vector<Elem> rep)
    : algebra_(std::move(algebra)), rep_(std::move(rep)) {
  if (rep_.size() != algebra_.order()) {
    throw std::invalid_argument("congruence must label every element");
  }
  for (Elem a = 0; a < rep_.size(); ++a) {
    if (rep_[a] > a || rep_[rep_[a]] != rep_[a]) {
      throw std::invalid_argument(
          "congruence labels must be least class members");
    }
  }
  if (!is_compatible_partition(algebra_, rep_)) {
    throw std::invalid_argument("partition is not compatible with + and *");
  }
}

std::size_t Congruence::number_of_classes() const {
  std::size_t count = 0;
  for (Elem a = 0; a < rep_.size(); ++a) {
    count += rep_[a] == a ? 1 : 0;
  }
  return count;
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::map<Elem, std::vector<Elem>> by_rep;
  for (Elem a = 0; a < rep_.size(); ++a) {
    by_rep[rep_[a]].push_back(a);
  }
  std::vector<std::vector<Elem>> out;
  for (auto& [r, members] : by_rep) {
    out.push_back(std::move(members));
  }
  return out;
}

Congruence congruence_generated(const FiniteSemiring& a,
                                std::span<const std::pair<Elem, Elem>> pairs) {
  const auto n = static_cast<Elem>(a.order());
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (x >= n || y >= n) {
      throw std::invalid_argument("generating pair outside the carrier");
    }
    if (!uf.unite(x, y)) {
      continue;
    }
    for (Elem c = 0; c < n; ++c) {
      work.emplace_back(a.add(x, c), a.add(y, c));
      work.emplace_back(a.mul(x, c), a.mul(y, c));
    }
  }
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    rep[x] = static_cast<Elem>(uf.find(x));
  }
  return Congruence(a, std::move(rep));
}

Congruence identity_congruence(const FiniteSemiring& a) {
  return congruence_generated(a, {});
}

Quotient quotient(const Congruence& e) {
  const auto& a = e.algebra();
  // Class of 0 first, then class of 1, then by least member.
  std::vector<Elem> reps;
  reps.push_back(e.representative(a.zero()));
  if (e.representative(a.one()) != reps[0]) {
    reps.push_back(e.representative(a.one()));
  }
  for (Elem x = 0; x < a.order(); ++x) {
    if (e.representative(x) == x &&
        std::find(reps.begin(), reps.end(), x) == reps.end()) {
      reps.push_back(x);
    }
  }
  std::vector<Elem> index_of_rep(a.order(), 0);
  for (Elem i = 0; i < reps.size(); ++i) {
    index_of_rep[reps[i]] = i;
  }
  auto cls = [&](Elem x) { return index_of_rep[e.representative(x)]; };
  const std::size_t m = reps.size();
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      add[i * m + j] = cls(a.add(reps[i], reps[j]));
      mul[i * m + j] = cls(a.mul(reps[i], reps[j]));
    }
  }
  auto q = FiniteSemiring::make(m, std::move(add), std::move(mul),
                                a.name().empty() ? "" : a.name() + "/E");
  std::vector<Elem> proj(a.order());
  for (Elem x = 0; x < a.order(); ++x) {
    proj[x] = cls(x);
  }
  auto projection = validate_hom(std::move(proj), a, q);
  return Quotient{std::move(q), std::move(projection)};
}

Product direct_product(const FiniteSemiring& a, const FiniteSemiring& b) {
  std::vector<std::pair<Elem, Elem>> components;
  components.emplace_back(a.zero(), b.zero());
  if (a.order() * b.order() > 1) {
    components.emplace_back(a.one(), b.one());
  }
  for (Elem x = 0; x < a.order(); ++x) {
    for (Elem y = 0; y < b.order(); ++y) {
      std::pair<Elem, Elem> p{x, y};
      if (p != components[0] && (components.size() < 2 || p != components[1])) {
        components.push_back(p);
      }
    }
  }
  const std::size_t m = components.size();
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (Elem i = 0; i < m; ++i) {
    index[components[i]] = i;
  }
  std::vector<Elem> add(m * m), mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto [x1, y1] = components[i];
      auto [x2, y2] = components[j];
      add[i * m + j] = index.at({a.add(x1, x2), b.add(y1, y2)});
      mul[i * m + j] = index.at({a.mul(x1, x2), b.mul(y1, y2)});
    }
  }
  std::string name;
  if (!a.name().empty() && !b.name().empty()) {
    name = a.name() + "x" + b.name();
  }
  auto p = FiniteSemiring::make(m, std::move(add), std::move(mul), name);
  std::vector<Elem> first(m), second(m);
  for (Elem i = 0; i < m; ++i) {
    first[i] = components[i].first;
    second[i] = components[i].second;
  }
  auto f = validate_hom(std::move(first), p, a);
  auto s = validate_hom(std::move(second), p, b);
  return Product{std::move(p), std::move(f), std::move(s),
                 std::move(components)};
}

}  // namespace csr
