#include "csr/term.hpp"

#include <algorithm>
#include <functional>

namespace csr {

struct Term::Node {
  Kind kind;
  std::string name;
  std::vector<Term> children;
};

Term Term::zero() { return Term(std::make_shared<const Node>(Node{Kind::Zero, {}, {}})); }

Term Term::one() { return Term(std::make_shared<const Node>(Node{Kind::One, {}, {}})); }

Term Term::var(std::string name) {
  if (name.empty()) {
    throw std::invalid_argument("variable name must not be empty");
  }
  return Term(
      std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Term operator+(const Term& x, const Term& y) {
  return Term(std::make_shared<const Term::Node>(
      Term::Node{Term::Kind::Sum, {}, {x, y}}));
}

Term operator*(const Term& x, const Term& y) {
  return Term(std::make_shared<const Term::Node>(
      Term::Node{Term::Kind::Prod, {}, {x, y}}));
}

Term Term::times(unsigned k, const Term& t) {
  if (k == 0) {
    return zero();
  }
  Term result = t;
  for (unsigned i = 1; i < k; ++i) {
    result = result + t;
  }
  return result;
}

Term Term::power(const Term& t, unsigned k) {
  if (k == 0) {
    return one();
  }
  Term result = t;
  for (unsigned i = 1; i < k; ++i) {
    result = result * t;
  }
  return result;
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

const std::string& Term::name() const {
  if (node_->kind != Kind::Var) {
    throw std::logic_error("Term::name on a non-variable");
  }
  return node_->name;
}

const Term& Term::left() const {
  if (node_->children.size() != 2) {
    throw std::logic_error("Term::left on a leaf");
  }
  return node_->children[0];
}

const Term& Term::right() const {
  if (node_->children.size() != 2) {
    throw std::logic_error("Term::right on a leaf");
  }
  return node_->children[1];
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (t.kind() == Kind::Var) {
      if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
        out.push_back(t.name());
      }
    } else if (t.kind() == Kind::Sum || t.kind() == Kind::Prod) {
      walk(t.left());
      walk(t.right());
    }
  };
  walk(*this);
  return out;
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Var:
      return name();
    case Kind::Sum:
      return left().to_string() + "+" + right().to_string();
    case Kind::Prod: {
      auto factor = [](const Term& t) {
        return t.kind() == Kind::Sum ? "(" + t.to_string() + ")"
                                     : t.to_string();
      };
      return factor(left()) + "*" + factor(right());
    }
  }
  return "?";
}

Elem eval_term(const FiniteSemiring& a, const Term& t,
               const Assignment& assignment) {
  switch (t.kind()) {
    case Term::Kind::Zero:
      return a.zero();
    case Term::Kind::One:
      return a.one();
    case Term::Kind::Var: {
      auto it = assignment.find(t.name());
      if (it == assignment.end()) {
        throw UnboundVariable(t.name());
      }
      if (it->second >= a.order()) {
        throw std::out_of_range("variable '" + t.name() +
                                "' assigned outside the carrier");
      }
      return it->second;
    }
    case Term::Kind::Sum:
      return a.add(eval_term(a, t.left(), assignment),
                   eval_term(a, t.right(), assignment));
    case Term::Kind::Prod:
      return a.mul(eval_term(a, t.left(), assignment),
                   eval_term(a, t.right(), assignment));
  }
  throw std::logic_error("unreachable term kind");
}

Identity::Identity(Term lhs, Term rhs, std::vector<std::string> variables)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)),
      variables_(std::move(variables)) {
  for (const Term* side : {&lhs_, &rhs_}) {
    for (const auto& v : side->variables()) {
      if (std::find(variables_.begin(), variables_.end(), v) ==
          variables_.end()) {
        throw std::invalid_argument("identity mentions undeclared variable '" +
                                    v + "'");
      }
    }
  }
}

Identity::Identity(Term lhs, Term rhs)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  variables_ = lhs_.variables();
  for (const auto& v : rhs_.variables()) {
    if (std::find(variables_.begin(), variables_.end(), v) ==
        variables_.end()) {
      variables_.push_back(v);
    }
  }
}

std::string Identity::to_string() const {
  return lhs_.to_string() + " = " + rhs_.to_string();
}

IdentityCheck check_identity(const FiniteSemiring& a, const Identity& id) {
  const auto& vars = id.variables();
  std::vector<Elem> values(vars.size(), 0);
  Assignment assignment;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      assignment[vars[i]] = values[i];
    }
    if (eval_term(a, id.lhs(), assignment) !=
        eval_term(a, id.rhs(), assignment)) {
      return {false, assignment};
    }
    // Odometer step, last variable fastest.
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++values[i] < a.order()) {
        break;
      }
      values[i] = 0;
      if (i == 0) {
        return {};
      }
    }
    if (vars.empty()) {
      return {};
    }
  }
}

namespace identities {

namespace {
Term x_var() { return Term::var("x"); }
}  // namespace

Identity one_plus_two_x_is_one() {
  return Identity(Term::one() + Term::times(2, x_var()), Term::one());
}

Identity x_squared_is_x() { return Identity(Term::power(x_var(), 2), x_var()); }

Identity two_x_is_x() { return Identity(Term::times(2, x_var()), x_var()); }

Identity x_plus_x_is_x() { return Identity(x_var() + x_var(), x_var()); }

Identity one_plus_x_is_one() { return Identity(Term::one() + x_var(), Term::one()); }

Identity two_x_is_zero() { return Identity(Term::times(2, x_var()), Term::zero()); }

}  // namespace identities

}  // namespace csr
