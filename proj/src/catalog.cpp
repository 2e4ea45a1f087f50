#include "csr/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string_view>

#include "csr/builtins.hpp"
#include "csr/isomorphism.hpp"

namespace csr {

std::size_t enumeration_cap() {
  const char* env = std::getenv("SEMIRING_MAX_ORDER");
  if (env == nullptr) {
    return default_max_enumeration_order;
  }
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return default_max_enumeration_order;
  }
  return value;
}

Catalog::Catalog(const std::vector<FiniteSemiring>& algebras) {
  for (const auto& a : algebras) {
    insert(a);
  }
  sort();
}

void Catalog::insert(const FiniteSemiring& a) {
  auto form = canonical_form(a, std::max(a.order(), default_canonical_bound));
  for (const auto& e : entries_) {
    if (e.canonical == form) {
      return;
    }
  }
  entries_.push_back({a, classify(a), std::move(form)});
}

void Catalog::sort() {
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const CatalogEntry& x, const CatalogEntry& y) {
                     if (x.algebra.order() != y.algebra.order()) {
                       return x.algebra.order() < y.algebra.order();
                     }
                     return x.canonical < y.canonical;
                   });
}

Catalog Catalog::up_to(std::size_t max_order) const {
  Catalog c;
  for (const auto& e : entries_) {
    if (e.algebra.order() <= max_order) {
      c.entries_.push_back(e);
    }
  }
  return c;
}

Catalog Catalog::with(Flag flag) const {
  Catalog c;
  for (const auto& e : entries_) {
    if (e.flags.has(flag)) {
      c.entries_.push_back(e);
    }
  }
  return c;
}

std::optional<std::size_t> Catalog::find(const FiniteSemiring& a) const {
  auto form = canonical_form(a, std::max(a.order(), default_canonical_bound));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].canonical == form) {
      return i;
    }
  }
  return std::nullopt;
}

Catalog& Catalog::add(const Catalog& other) {
  for (const auto& e : other.entries_) {
    if (std::none_of(entries_.begin(), entries_.end(),
                     [&](const CatalogEntry& x) { return x.canonical == e.canonical; })) {
      entries_.push_back(e);
    }
  }
  sort();
  return *this;
}

namespace {

constexpr Elem unset = static_cast<Elem>(-1);

// Associativity of a partially filled table on every fully determined
// instance.
bool associative_so_far(const std::vector<Elem>& t, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Elem xy = t[x * n + y];
      if (xy == unset) {
        continue;
      }
      for (std::size_t z = 0; z < n; ++z) {
        Elem yz = t[y * n + z];
        if (yz == unset) {
          continue;
        }
        Elem l = t[xy * n + z];
        Elem r = t[x * n + yz];
        if (l != unset && r != unset && l != r) {
          return false;
        }
      }
    }
  }
  return true;
}

bool distributive_so_far(const std::vector<Elem>& add,
                         const std::vector<Elem>& mul, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Elem ab = mul[a * n + b];
      if (ab == unset) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        Elem ac = mul[a * n + c];
        if (ac == unset) {
          continue;
        }
        Elem lhs = mul[a * n + add[b * n + c]];
        if (lhs != unset && lhs != add[ab * n + ac]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Upper-triangle cells (i, j), i <= j, with both coordinates >= from.
std::vector<std::pair<std::size_t, std::size_t>> free_cells(std::size_t n,
                                                            std::size_t from) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = from; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cells.emplace_back(i, j);
    }
  }
  return cells;
}

template <class Accept, class Emit>
void fill(std::vector<Elem>& t, std::size_t n,
          const std::vector<std::pair<std::size_t, std::size_t>>& cells,
          std::size_t k, const Accept& accept, const Emit& emit) {
  if (k == cells.size()) {
    emit(t);
    return;
  }
  auto [i, j] = cells[k];
  for (Elem v = 0; v < n; ++v) {
    t[i * n + j] = v;
    t[j * n + i] = v;
    if (accept(t)) {
      fill(t, n, cells, k + 1, accept, emit);
    }
  }
  t[i * n + j] = unset;
  t[j * n + i] = unset;
}

std::vector<FiniteSemiring> semirings_over(const std::vector<Elem>& add,
                                           std::size_t n) {
  std::vector<FiniteSemiring> out;
  std::vector<Elem> mul(n * n, unset);
  for (std::size_t x = 0; x < n; ++x) {
    mul[x] = 0;
    mul[x * n] = 0;
    if (n > 1) {
      mul[n + x] = static_cast<Elem>(x);
      mul[x * n + 1] = static_cast<Elem>(x);
    }
  }
  auto accept = [&](const std::vector<Elem>& m) {
    return associative_so_far(m, n) && distributive_so_far(add, m, n);
  };
  auto emit = [&](const std::vector<Elem>& m) {
    if (validate_semiring(n, add, m).ok()) {
      out.push_back(FiniteSemiring::make(n, add, m));
    }
  };
  fill(mul, n, free_cells(n, 2), 0, accept, emit);
  return out;
}

}  // namespace

std::vector<std::vector<Elem>> enumerate_additive_monoids(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  if (n == 0) {
    return out;
  }
  std::vector<Elem> add(n * n, unset);
  for (std::size_t x = 0; x < n; ++x) {
    add[x] = static_cast<Elem>(x);
    add[x * n] = static_cast<Elem>(x);
  }
  auto accept = [&](const std::vector<Elem>& t) {
    return associative_so_far(t, n);
  };
  auto emit = [&](const std::vector<Elem>& t) { out.push_back(t); };
  fill(add, n, free_cells(n, 1), 0, accept, emit);
  return out;
}

Catalog enumerate_semirings(std::size_t n, Exec exec, std::size_t max_order) {
  if (n > max_order) {
    throw OrderTooLarge(n, max_order);
  }
  if (n == 0) {
    return Catalog();
  }
  auto monoids = enumerate_additive_monoids(n);
  std::vector<std::vector<FiniteSemiring>> found(monoids.size());
  for_each_index(monoids.size(), exec, [&](std::size_t i) {
    found[i] = semirings_over(monoids[i], n);
  });

  // Canonical forms dominate the cost; compute them per labelled table in
  // parallel, then deduplicate serially.
  std::vector<FiniteSemiring> all;
  for (auto& group : found) {
    all.insert(all.end(), group.begin(), group.end());
  }
  const std::size_t bound = std::max(n, default_canonical_bound);
  std::vector<std::string> forms(all.size());
  for_each_index(all.size(), exec,
                 [&](std::size_t i) { forms[i] = canonical_form(all[i], bound); });
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return forms[x] < forms[y]; });
  std::vector<FiniteSemiring> distinct;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || forms[order[k]] != forms[order[k - 1]]) {
      distinct.push_back(all[order[k]]);
    }
  }

  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& b : builtins::all()) {
    if (b.order() == n) {
      named.emplace_back(canonical_form(b, bound), b.name());
    }
  }
  std::size_t anonymous = 0;
  std::vector<FiniteSemiring> labelled;
  for (const auto& a : distinct) {
    auto form = canonical_form(a, bound);
    auto hit = std::find_if(named.begin(), named.end(),
                            [&](const auto& p) { return p.first == form; });
    if (hit != named.end()) {
      labelled.push_back(a.renamed(hit->second));
    } else {
      labelled.push_back(a.renamed("S" + std::to_string(n) + "_" +
                                   std::to_string(++anonymous)));
    }
  }
  return Catalog(labelled);
}

Catalog enumerate_up_to(std::size_t max_order, Exec exec, std::size_t cap) {
  Catalog c;
  for (std::size_t n = 1; n <= max_order; ++n) {
    c.add(enumerate_semirings(n, exec, cap));
  }
  return c;
}

}  // namespace csr
