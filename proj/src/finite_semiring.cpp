#include "csr/finite_semiring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace csr {

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::NonAssociative:
      return "NonAssociative";
    case Axiom::NonCommutative:
      return "NonCommutative";
    case Axiom::BadIdentityElement:
      return "BadIdentityElement";
    case Axiom::AbsorptionFails:
      return "AbsorptionFails";
    case Axiom::DistributivityFails:
      return "DistributivityFails";
  }
  return "?";
}

std::string Violation::describe() const {
  static constexpr std::array<char, 3> names = {'x', 'y', 'z'};
  std::ostringstream out;
  out << to_string(axiom) << ": " << law << " fails at";
  for (std::size_t i = 0; i < arity; ++i) {
    out << (i == 0 ? " " : ", ") << names[i] << "=" << witness[i];
  }
  return out.str();
}

bool ValidationReport::contains(Axiom axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const Violation& v) { return v.axiom == axiom; });
}

const Violation& ValidationReport::first(Axiom axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) {
      return v;
    }
  }
  throw std::out_of_range("no violation of kind " +
                          std::string(to_string(axiom)));
}

std::string ValidationReport::describe() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) {
      out += '\n';
    }
    out += v.describe();
  }
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("not a commutative semiring:\n" + report.describe()),
      report_(std::move(report)) {}

namespace {

class AxiomScan {
 public:
  AxiomScan(std::size_t n, std::span<const Elem> add, std::span<const Elem> mul)
      : n_(n), add_(add), mul_(mul) {}

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }

  // Records the first x in lexicographic order at which law(x) is false.
  void unary(Axiom axiom, std::string law,
             const std::function<bool(Elem)>& holds) {
    for (Elem x = 0; x < n_; ++x) {
      if (!holds(x)) {
        report_.violations.push_back({axiom, std::move(law), {x, 0, 0}, 1});
        return;
      }
    }
  }

  void binary(Axiom axiom, std::string law,
              const std::function<bool(Elem, Elem)>& holds) {
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        if (!holds(x, y)) {
          report_.violations.push_back({axiom, std::move(law), {x, y, 0}, 2});
          return;
        }
      }
    }
  }

  void ternary(Axiom axiom, std::string law,
               const std::function<bool(Elem, Elem, Elem)>& holds) {
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        for (Elem z = 0; z < n_; ++z) {
          if (!holds(x, y, z)) {
            report_.violations.push_back(
                {axiom, std::move(law), {x, y, z}, 3});
            return;
          }
        }
      }
    }
  }

  ValidationReport take() { return std::move(report_); }

 private:
  std::size_t n_;
  std::span<const Elem> add_;
  std::span<const Elem> mul_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_semiring(std::size_t order,
                                   std::span<const Elem> add,
                                   std::span<const Elem> mul) {
  if (order == 0) {
    throw std::invalid_argument("semiring order must be positive");
  }
  if (add.size() != order * order || mul.size() != order * order) {
    throw std::invalid_argument("operation tables must be order x order");
  }
  auto in_range = [order](Elem e) { return e < order; };
  if (!std::all_of(add.begin(), add.end(), in_range) ||
      !std::all_of(mul.begin(), mul.end(), in_range)) {
    throw std::invalid_argument("table entry outside the carrier");
  }

  AxiomScan s(order, add, mul);
  const Elem one = order == 1 ? 0 : 1;

  s.ternary(Axiom::NonAssociative, "(x+y)+z = x+(y+z)",
            [&](Elem x, Elem y, Elem z) {
              return s.add(s.add(x, y), z) == s.add(x, s.add(y, z));
            });
  s.ternary(Axiom::NonAssociative, "(xy)z = x(yz)",
            [&](Elem x, Elem y, Elem z) {
              return s.mul(s.mul(x, y), z) == s.mul(x, s.mul(y, z));
            });
  s.binary(Axiom::NonCommutative, "x+y = y+x",
           [&](Elem x, Elem y) { return s.add(x, y) == s.add(y, x); });
  s.binary(Axiom::NonCommutative, "xy = yx",
           [&](Elem x, Elem y) { return s.mul(x, y) == s.mul(y, x); });
  s.unary(Axiom::BadIdentityElement, "0+x = x = x+0",
          [&](Elem x) { return s.add(0, x) == x && s.add(x, 0) == x; });
  s.unary(Axiom::BadIdentityElement, "1x = x = x1",
          [&](Elem x) { return s.mul(one, x) == x && s.mul(x, one) == x; });
  s.unary(Axiom::AbsorptionFails, "x0 = 0 = 0x",
          [&](Elem x) { return s.mul(x, 0) == 0 && s.mul(0, x) == 0; });
  s.ternary(Axiom::DistributivityFails, "x(y+z) = xy+xz",
            [&](Elem x, Elem y, Elem z) {
              return s.mul(x, s.add(y, z)) == s.add(s.mul(x, y), s.mul(x, z));
            });
  s.ternary(Axiom::DistributivityFails, "(y+z)x = yx+zx",
            [&](Elem x, Elem y, Elem z) {
              return s.mul(s.add(y, z), x) == s.add(s.mul(y, x), s.mul(z, x));
            });
  return s.take();
}

FiniteSemiring FiniteSemiring::make(std::size_t order, std::vector<Elem> add,
                                    std::vector<Elem> mul, std::string name) {
  auto report = validate_semiring(order, add, mul);
  if (!report.ok()) {
    throw ValidationError(std::move(report));
  }
  return FiniteSemiring(std::make_shared<const Impl>(
      Impl{order, std::move(add), std::move(mul), std::move(name)}));
}

FiniteSemiring FiniteSemiring::renamed(std::string name) const {
  return FiniteSemiring(std::make_shared<const Impl>(
      Impl{impl_->order, impl_->add, impl_->mul, std::move(name)}));
}

bool operator==(const FiniteSemiring& x, const FiniteSemiring& y) {
  if (x.impl_ == y.impl_) {
    return true;
  }
  return x.impl_->order == y.impl_->order && x.impl_->add == y.impl_->add &&
         x.impl_->mul == y.impl_->mul;
}

std::string compact(const FiniteSemiring& a) {
  std::ostringstream out;
  auto table = [&](std::span<const Elem> t) {
    for (std::size_t i = 0; i < a.order(); ++i) {
      if (i > 0) {
        out << '/';
      }
      for (std::size_t j = 0; j < a.order(); ++j) {
        out << (j > 0 ? "," : "") << t[i * a.order() + j];
      }
    }
  };
  out << (a.name().empty() ? "?" : a.name()) << "[n=" << a.order() << ";add=";
  table(a.add_table());
  out << ";mul=";
  table(a.mul_table());
  out << "]";
  return out.str();
}

}  // namespace csr
