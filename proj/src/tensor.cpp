#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "csr/colimits.hpp"
#include "csr/isomorphism.hpp"
#include "csr/union_find.hpp"

namespace csr {

TensorElement::TensorElement(std::vector<TensorGenerator> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
}

std::string TensorElement::to_string() const {
  if (members_.empty()) {
    return "0";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    out << (i > 0 ? "+" : "") << "(" << members_[i].left << ","
        << members_[i].right << ")";
  }
  return out.str();
}

TensorElement tensor_sum(const TensorElement& x, const TensorElement& y) {
  std::vector<TensorGenerator> m = x.members();
  m.insert(m.end(), y.members().begin(), y.members().end());
  return TensorElement(std::move(m));
}

TensorElement tensor_product(const TensorElement& x, const TensorElement& y,
                             const FiniteSemiring& left,
                             const FiniteSemiring& right) {
  std::vector<TensorGenerator> m;
  m.reserve(x.size() * y.size());
  for (const auto& g : x.members()) {
    for (const auto& h : y.members()) {
      m.push_back({left.mul(g.left, h.left), right.mul(g.right, h.right)});
    }
  }
  return TensorElement(std::move(m));
}

TensorElement tensor_normalize(const TensorElement& x,
                               const FiniteSemiring& left,
                               const FiniteSemiring& right) {
  std::vector<TensorGenerator> m;
  for (const auto& g : x.members()) {
    if (g.left != left.zero() && g.right != right.zero()) {
      m.push_back(g);
    }
  }
  std::sort(m.begin(), m.end());
  auto merge_first = [&](bool shared_right) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        TensorGenerator merged;
        if (shared_right && m[i].right == m[j].right) {
          merged = {left.add(m[i].left, m[j].left), m[i].right};
        } else if (!shared_right && m[i].left == m[j].left) {
          merged = {m[i].left, right.add(m[i].right, m[j].right)};
        } else {
          continue;
        }
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(j));
        m.erase(m.begin() + static_cast<std::ptrdiff_t>(i));
        if (merged.left != left.zero() && merged.right != right.zero()) {
          m.insert(std::lower_bound(m.begin(), m.end(), merged), merged);
        }
        return true;
      }
    }
    return false;
  };
  while (merge_first(true) || merge_first(false)) {
  }
  return TensorElement(std::move(m));
}

namespace {

using Code = std::uint32_t;
using Codes = std::vector<Code>;

struct CodesHash {
  std::size_t operator()(const Codes& c) const noexcept {
    std::size_t h = c.size();
    for (Code x : c) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::size_t multiset_count(std::size_t generators, std::size_t bound,
                           std::size_t cap) {
  // sum over sizes s <= bound of C(generators + s - 1, s), saturating at
  // cap + 1.
  std::size_t total = 0;
  long double term = 1;  // C(g + s - 1, s) for s = 0
  for (std::size_t s = 0; s <= bound; ++s) {
    if (s > 0) {
      if (generators == 0) {
        break;
      }
      term = term * static_cast<long double>(generators + s - 1) /
             static_cast<long double>(s);
    }
    total += static_cast<std::size_t>(std::min<long double>(term, cap + 1));
    if (total > cap) {
      return cap + 1;
    }
  }
  return total;
}

// One attempt at a fixed bound.
class TensorBuilder {
 public:
  TensorBuilder(const SAlgebra& a, const SAlgebra& b, std::size_t bound,
                Exec exec)
      : a_(a), b_(b), A_(a.algebra()), B_(b.algebra()), bound_(bound),
        exec_(exec) {
    for (Elem x = 1; x < A_.order(); ++x) {
      for (Elem y = 1; y < B_.order(); ++y) {
        gens_.push_back({x, y});
      }
    }
  }

  TensorQuotient build(std::size_t max_universe) {
    std::size_t count = multiset_count(gens_.size(), bound_, max_universe);
    if (count > max_universe) {
      throw BoundUnstable("tensor universe at bound " +
                          std::to_string(bound_) + " exceeds " +
                          std::to_string(max_universe) + " multisets");
    }
    enumerate_universe();
    unite_relations();
    collect_normal_forms();
    build_tables();
    close_and_repair();
    return emit();
  }

 private:
  Code code_of(const TensorGenerator& g) const {
    return (g.left - 1) * static_cast<Code>(B_.order() - 1) + (g.right - 1);
  }

  Codes codes_of(const TensorElement& x) const {
    Codes c;
    c.reserve(x.size());
    for (const auto& g : x.members()) {
      c.push_back(code_of(g));
    }
    return c;
  }

  TensorElement element_of(const Codes& c) const {
    std::vector<TensorGenerator> m;
    m.reserve(c.size());
    for (Code x : c) {
      m.push_back(gens_[x]);
    }
    return TensorElement(std::move(m));
  }

  std::size_t lookup(const Codes& c) const { return index_.at(c); }

  void enumerate_universe() {
    Codes current;
    // Non-decreasing sequences, by size then lexicographically.
    for (std::size_t size = 0; size <= bound_; ++size) {
      if (size > 0 && gens_.empty()) {
        break;
      }
      current.assign(size, 0);
      while (true) {
        index_.emplace(current, codes_.size());
        codes_.push_back(current);
        std::size_t i = size;
        while (i > 0 && current[i - 1] + 1 == gens_.size()) {
          --i;
        }
        if (i == 0) {
          break;
        }
        Code next = current[i - 1] + 1;
        std::fill(current.begin() + static_cast<std::ptrdiff_t>(i - 1),
                  current.end(), next);
      }
    }
  }

  // Replace positions i (and j, if given) by g, dropping g if it has a
  // zero coordinate.
  Codes rewrite(const Codes& c, std::size_t i, std::optional<std::size_t> j,
                TensorGenerator g) const {
    Codes out;
    out.reserve(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k != i && (!j || k != *j)) {
        out.push_back(c[k]);
      }
    }
    if (g.left != A_.zero() && g.right != B_.zero()) {
      Code code = code_of(g);
      out.insert(std::lower_bound(out.begin(), out.end(), code), code);
    }
    return out;
  }

  void unite_relations() {
    const std::size_t n = codes_.size();
    std::vector<Elem> left_scalars, right_scalars;
    if (!a_.base().is_naturals()) {
      const auto& f = *a_.structure();
      const auto& g = *b_.structure();
      for (Elem s = 0; s < f.source().order(); ++s) {
        left_scalars.push_back(f(s));
        right_scalars.push_back(g(s));
      }
    }
    // Each element is related to its single merges and, over a finite
    // base, to the rewrites moving a scalar across the tensor sign.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> related(n);
    for_each_index(n, exec_, [&](std::size_t u) {
      const Codes& c = codes_[u];
      auto& out = related[u];
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto gi = gens_[c[i]];
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          const auto gj = gens_[c[j]];
          if (gi.right == gj.right) {
            out.emplace_back(
                u, lookup(rewrite(c, i, j,
                                  {A_.add(gi.left, gj.left), gi.right})));
          }
          if (gi.left == gj.left) {
            out.emplace_back(
                u, lookup(rewrite(c, i, j,
                                  {gi.left, B_.add(gi.right, gj.right)})));
          }
        }
        for (std::size_t s = 0; s < left_scalars.size(); ++s) {
          auto x = lookup(rewrite(
              c, i, std::nullopt,
              {A_.mul(left_scalars[s], gi.left), gi.right}));
          auto y = lookup(rewrite(
              c, i, std::nullopt,
              {gi.left, B_.mul(right_scalars[s], gi.right)}));
          out.emplace_back(x, y);
        }
      }
    });
    universe_classes_ = UnionFind(n);
    for (const auto& rel : related) {
      for (auto [x, y] : rel) {
        universe_classes_.unite(x, y);
      }
    }
  }

  void collect_normal_forms() {
    normal_index_.assign(codes_.size(), npos);
    for (std::size_t u = 0; u < codes_.size(); ++u) {
      const Codes& c = codes_[u];
      bool normal = true;
      for (std::size_t i = 0; i < c.size() && normal; ++i) {
        for (std::size_t j = i + 1; j < c.size() && normal; ++j) {
          normal = gens_[c[i]].left != gens_[c[j]].left &&
                   gens_[c[i]].right != gens_[c[j]].right;
        }
      }
      if (normal) {
        normal_index_[u] = normals_.size();
        normals_.push_back(u);
      }
    }
  }

  std::size_t normal_of(const TensorElement& x) const {
    auto idx = normal_index_[lookup(codes_of(tensor_normalize(x, A_, B_)))];
    if (idx == npos) {
      throw std::logic_error("tensor_normalize left a reducible element");
    }
    return idx;
  }

  void build_tables() {
    const std::size_t m = normals_.size();
    add_.assign(m * m, 0);
    mul_.assign(m * m, 0);
    for_each_index(m, exec_, [&](std::size_t i) {
      auto x = element_of(codes_[normals_[i]]);
      for (std::size_t j = 0; j < m; ++j) {
        auto y = element_of(codes_[normals_[j]]);
        add_[i * m + j] = normal_of(tensor_sum(x, y));
        mul_[i * m + j] = normal_of(tensor_product(x, y, A_, B_));
      }
    });
    zero_ = normal_of(TensorElement{});
    one_ = normal_of(TensorElement({{A_.one(), B_.one()}}));
    for (Elem x = 0; x < A_.order(); ++x) {
      left_inj_.push_back(normal_of(TensorElement({{x, B_.one()}})));
    }
    for (Elem y = 0; y < B_.order(); ++y) {
      right_inj_.push_back(normal_of(TensorElement({{A_.one(), y}})));
    }
  }

  // Congruence closure of the normal forms under the induced operations,
  // followed by a scan of the semiring axioms and the injection laws. Every
  // pair ever united is an equality of the true tensor product, so a
  // failed law is repaired by uniting its two sides and closing again.
  void close_and_repair() {
    const std::size_t m = normals_.size();
    classes_ = UnionFind(m);
    std::deque<std::pair<std::size_t, std::size_t>> work;
    std::vector<std::size_t> first_in_universe_class(codes_.size(), npos);
    for (std::size_t i = 0; i < m; ++i) {
      auto root = universe_classes_.find(normals_[i]);
      if (first_in_universe_class[root] == npos) {
        first_in_universe_class[root] = i;
      } else {
        work.emplace_back(first_in_universe_class[root], i);
      }
    }
    while (true) {
      while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        if (!classes_.unite(x, y)) {
          continue;
        }
        for (std::size_t c = 0; c < m; ++c) {
          work.emplace_back(add_[x * m + c], add_[y * m + c]);
          work.emplace_back(mul_[x * m + c], mul_[y * m + c]);
        }
      }
      work = violated_laws();
      if (work.empty()) {
        break;
      }
      ++repairs_;
    }
  }

  std::deque<std::pair<std::size_t, std::size_t>> violated_laws() {
    const std::size_t m = normals_.size();
    std::deque<std::pair<std::size_t, std::size_t>> out;
    auto check = [&](std::size_t x, std::size_t y) {
      if (classes_.find(x) != classes_.find(y)) {
        out.emplace_back(x, y);
      }
    };
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < m; ++i) {
      if (classes_.find(i) == i) {
        roots.push_back(i);
      }
    }
    auto add = [&](std::size_t x, std::size_t y) { return add_[x * m + y]; };
    auto mul = [&](std::size_t x, std::size_t y) { return mul_[x * m + y]; };
    for (auto p : roots) {
      for (auto q : roots) {
        for (auto r : roots) {
          check(add(add(p, q), r), add(p, add(q, r)));
          check(mul(mul(p, q), r), mul(p, mul(q, r)));
          check(mul(p, add(q, r)), add(mul(p, q), mul(p, r)));
        }
      }
    }
    const auto na = static_cast<Elem>(A_.order());
    for (Elem x = 0; x < na; ++x) {
      for (Elem y = 0; y < na; ++y) {
        check(left_inj_[A_.add(x, y)], add(left_inj_[x], left_inj_[y]));
        check(left_inj_[A_.mul(x, y)], mul(left_inj_[x], left_inj_[y]));
      }
    }
    const auto nb = static_cast<Elem>(B_.order());
    for (Elem x = 0; x < nb; ++x) {
      for (Elem y = 0; y < nb; ++y) {
        check(right_inj_[B_.add(x, y)], add(right_inj_[x], right_inj_[y]));
        check(right_inj_[B_.mul(x, y)], mul(right_inj_[x], right_inj_[y]));
      }
    }
    check(left_inj_[A_.one()], one_);
    check(right_inj_[B_.one()], one_);
    if (!a_.base().is_naturals()) {
      const auto& f = *a_.structure();
      const auto& g = *b_.structure();
      for (Elem s = 0; s < f.source().order(); ++s) {
        check(left_inj_[f(s)], right_inj_[g(s)]);
      }
    }
    return out;
  }

  TensorQuotient emit() {
    const std::size_t m = normals_.size();
    // Result order: class of 0, class of 1, then by least normal form.
    std::vector<std::size_t> roots;
    roots.push_back(classes_.find(zero_));
    if (classes_.find(one_) != roots[0]) {
      roots.push_back(classes_.find(one_));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (classes_.find(i) == i &&
          std::find(roots.begin(), roots.end(), i) == roots.end()) {
        roots.push_back(i);
      }
    }
    std::vector<Elem> element_of_root(m, 0);
    for (Elem e = 0; e < roots.size(); ++e) {
      element_of_root[roots[e]] = e;
    }
    auto cls = [&](std::size_t normal) {
      return element_of_root[classes_.find(normal)];
    };
    const std::size_t k = roots.size();
    std::vector<Elem> add(k * k), mul(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        add[i * k + j] = cls(add_[roots[i] * m + roots[j]]);
        mul[i * k + j] = cls(mul_[roots[i] * m + roots[j]]);
      }
    }
    // Representative independence over every pair of normal forms.
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (add[cls(i) * k + cls(j)] != cls(add_[i * m + j]) ||
            mul[cls(i) * k + cls(j)] != cls(mul_[i * m + j])) {
          throw std::logic_error(
              "tensor operations depend on the representative");
        }
      }
    }
    auto name = [](const FiniteSemiring& s) {
      return s.name().empty() ? std::string("?") : s.name();
    };
    auto result = FiniteSemiring::make(k, std::move(add), std::move(mul),
                                       name(A_) + "(x)" + name(B_));

    std::vector<Elem> class_of(codes_.size());
    for_each_index(codes_.size(), exec_, [&](std::size_t u) {
      auto normal = normal_of(element_of(codes_[u]));
      class_of[u] = cls(normal);
    });
    // Universe classes must refine the result's classes.
    std::vector<Elem> by_root(codes_.size(), static_cast<Elem>(-1));
    for (std::size_t u = 0; u < codes_.size(); ++u) {
      auto root = universe_classes_.find(u);
      if (by_root[root] == static_cast<Elem>(-1)) {
        by_root[root] = class_of[u];
      } else if (by_root[root] != class_of[u]) {
        throw std::logic_error("universe class split by the tensor quotient");
      }
    }

    std::vector<Elem> left_map, right_map;
    for (auto n : left_inj_) {
      left_map.push_back(cls(n));
    }
    for (auto n : right_inj_) {
      right_map.push_back(cls(n));
    }
    auto left_injection = validate_hom(std::move(left_map), A_, result);
    auto right_injection = validate_hom(std::move(right_map), B_, result);

    std::optional<std::vector<Elem>> structure;
    if (!a_.base().is_naturals()) {
      auto f = compose(left_injection, *a_.structure());
      structure = std::vector<Elem>(f.map().begin(), f.map().end());
    }
    auto salg = validate_salgebra(a_.base(), result, std::move(structure));

    std::vector<TensorElement> universe;
    universe.reserve(codes_.size());
    for (const auto& c : codes_) {
      universe.push_back(element_of(c));
    }
    std::vector<TensorElement> representatives;
    for (auto r : roots) {
      representatives.push_back(element_of(codes_[normals_[r]]));
    }
    return TensorQuotient{a_,
                          b_,
                          bound_,
                          std::move(universe),
                          std::move(class_of),
                          std::move(representatives),
                          std::move(salg),
                          std::move(left_injection),
                          std::move(right_injection)};
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const SAlgebra& a_;
  const SAlgebra& b_;
  const FiniteSemiring& A_;
  const FiniteSemiring& B_;
  std::size_t bound_;
  Exec exec_;

  std::vector<TensorGenerator> gens_;  // nonzero generators, code order
  std::vector<Codes> codes_;           // the universe
  std::unordered_map<Codes, std::size_t, CodesHash> index_;
  UnionFind universe_classes_;

  std::vector<std::size_t> normals_;       // normal-form index -> universe
  std::vector<std::size_t> normal_index_;  // universe -> normal-form index
  std::vector<std::size_t> add_, mul_;     // over normal forms
  std::size_t zero_ = 0, one_ = 0;
  std::vector<std::size_t> left_inj_, right_inj_;
  UnionFind classes_;
  std::size_t repairs_ = 0;
};

void require_same_base(const SAlgebra& a, const SAlgebra& b) {
  if (!(a.base() == b.base())) {
    throw BaseMismatch("BaseMismatch: " + a.algebra().name() + " is over " +
                       a.base().name() + " but " + b.algebra().name() +
                       " is over " + b.base().name());
  }
}

}  // namespace

TensorQuotient tensor_quotient_at(const SAlgebra& a, const SAlgebra& b,
                                  std::size_t bound, Exec exec,
                                  std::size_t max_universe) {
  require_same_base(a, b);
  return TensorBuilder(a, b, bound, exec).build(max_universe);
}

TensorQuotient tensor_coproduct(const SAlgebra& a, const SAlgebra& b,
                                const TensorOptions& options) {
  require_same_base(a, b);
  const std::size_t start =
      std::min(a.algebra().order(), b.algebra().order()) + 1;
  const std::size_t last =
      std::max(options.max_bound == 0 ? start + 2 : options.max_bound,
               start + 1);
  auto previous =
      tensor_quotient_at(a, b, start, options.exec, options.max_universe);
  for (std::size_t bound = start + 1; bound <= last; ++bound) {
    std::optional<TensorQuotient> next;
    try {
      next = tensor_quotient_at(a, b, bound, options.exec,
                                options.max_universe);
    } catch (const BoundUnstable& e) {
      throw BoundUnstable("BoundUnstable: " + a.algebra().name() + " (x) " +
                          b.algebra().name() + ": " + e.what());
    }
    if (find_isomorphism(previous.algebra(), next->algebra())) {
      return previous;
    }
    previous = std::move(*next);
  }
  throw BoundUnstable("BoundUnstable: " + a.algebra().name() + " (x) " +
                      b.algebra().name() + " not stable up to bound " +
                      std::to_string(last));
}

}  // namespace csr
