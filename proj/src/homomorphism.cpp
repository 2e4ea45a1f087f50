#include "csr/homomorphism.hpp"

#include <algorithm>
#include <sstream>

namespace csr {

bool Homomorphism::is_injective() const {
  std::vector<bool> seen(target_.order(), false);
  for (Elem v : map_) {
    if (seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const {
  std::vector<bool> seen(target_.order(), false);
  for (Elem v : map_) {
    seen[v] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool operator==(const Homomorphism& f, const Homomorphism& g) {
  return f.map_ == g.map_ && f.source_ == g.source_ && f.target_ == g.target_;
}

std::optional<HomViolation> hom_violation(std::span<const Elem> map,
                                          const FiniteSemiring& source,
                                          const FiniteSemiring& target) {
  if (map.size() != source.order()) {
    throw std::invalid_argument("map is not total on the source carrier");
  }
  for (Elem v : map) {
    if (v >= target.order()) {
      throw std::invalid_argument("map leaves the target carrier");
    }
  }
  if (map[source.zero()] != target.zero()) {
    std::ostringstream d;
    d << "f(0)=" << map[source.zero()] << " != 0";
    return HomViolation{HomLaw::PreservesZero, 0, 0, d.str()};
  }
  if (map[source.one()] != target.one()) {
    std::ostringstream d;
    d << "f(1)=" << map[source.one()] << " != " << target.one();
    return HomViolation{HomLaw::PreservesOne, source.one(), 0, d.str()};
  }
  const auto n = static_cast<Elem>(source.order());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem lhs = map[source.add(a, b)];
      Elem rhs = target.add(map[a], map[b]);
      if (lhs != rhs) {
        std::ostringstream d;
        d << "f(" << a << "+" << b << ")=f(" << source.add(a, b) << ")=" << lhs
          << " != " << rhs << "=f(" << a << ")+f(" << b << ")";
        return HomViolation{HomLaw::PreservesAdd, a, b, d.str()};
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem lhs = map[source.mul(a, b)];
      Elem rhs = target.mul(map[a], map[b]);
      if (lhs != rhs) {
        std::ostringstream d;
        d << "f(" << a << "*" << b << ")=f(" << source.mul(a, b) << ")=" << lhs
          << " != " << rhs << "=f(" << a << ")*f(" << b << ")";
        return HomViolation{HomLaw::PreservesMul, a, b, d.str()};
      }
    }
  }
  return std::nullopt;
}

Homomorphism validate_hom(std::vector<Elem> map, const FiniteSemiring& source,
                          const FiniteSemiring& target) {
  if (auto v = hom_violation(map, source, target)) {
    throw NotAHomomorphism(std::move(*v));
  }
  return Homomorphism(source, target, std::move(map));
}

Homomorphism identity_hom(const FiniteSemiring& a) {
  std::vector<Elem> map(a.order());
  for (Elem i = 0; i < map.size(); ++i) {
    map[i] = i;
  }
  return validate_hom(std::move(map), a, a);
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!(f.target() == g.source())) {
    throw std::invalid_argument("compose: f's target is not g's source");
  }
  std::vector<Elem> map(f.source().order());
  for (Elem i = 0; i < map.size(); ++i) {
    map[i] = g(f(i));
  }
  return validate_hom(std::move(map), f.source(), g.target());
}

namespace {

// Depth-first search over images of 0..n-1 in increasing index order. After
// each assignment every table entry whose three indices are assigned is
// checked, so a complete assignment is a homomorphism.
class HomSearch {
 public:
  HomSearch(const FiniteSemiring& s, const FiniteSemiring& t)
      : s_(s), t_(t), image_(s.order(), 0) {}

  std::vector<Homomorphism> run() {
    // 0 and 1 are pinned; for a one-element source they coincide, so the
    // target must be trivial as well.
    if (s_.order() == 1 && t_.order() != 1) {
      return {};
    }
    image_[0] = 0;
    if (s_.order() >= 2) {
      image_[1] = t_.one();
      if (!consistent(1)) {
        return {};
      }
    }
    extend(std::min<std::size_t>(2, s_.order()));
    return std::move(found_);
  }

 private:
  bool consistent(Elem k) const {
    for (Elem i = 0; i <= k; ++i) {
      for (Elem j = 0; j <= k; ++j) {
        if (i != k && j != k) {
          continue;
        }
        Elem sum = s_.add(i, j);
        if (sum <= k && image_[sum] != t_.add(image_[i], image_[j])) {
          return false;
        }
        Elem prod = s_.mul(i, j);
        if (prod <= k && image_[prod] != t_.mul(image_[i], image_[j])) {
          return false;
        }
      }
    }
    // Entries of earlier pairs that land on k.
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        if (s_.add(i, j) == k && image_[k] != t_.add(image_[i], image_[j])) {
          return false;
        }
        if (s_.mul(i, j) == k && image_[k] != t_.mul(image_[i], image_[j])) {
          return false;
        }
      }
    }
    return true;
  }

  void extend(std::size_t k) {
    if (k == s_.order()) {
      found_.push_back(validate_hom(image_, s_, t_));
      return;
    }
    for (Elem v = 0; v < t_.order(); ++v) {
      image_[k] = v;
      if (consistent(static_cast<Elem>(k))) {
        extend(k + 1);
      }
    }
  }

  const FiniteSemiring& s_;
  const FiniteSemiring& t_;
  std::vector<Elem> image_;
  std::vector<Homomorphism> found_;
};

}  // namespace

std::vector<Homomorphism> hom_enumerate(const FiniteSemiring& source,
                                        const FiniteSemiring& target) {
  return HomSearch(source, target).run();
}

}  // namespace csr
