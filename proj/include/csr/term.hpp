#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "csr/finite_semiring.hpp"

namespace csr {

// Immutable expression tree over 0, 1, variables, + and *.
class Term {
 public:
  enum class Kind { Zero, One, Var, Sum, Prod };

  static Term zero();
  static Term one();
  static Term var(std::string name);
  // k copies of t summed; times(0, t) is 0.
  static Term times(unsigned k, const Term& t);
  // t multiplied by itself k times; power(t, 0) is 1.
  static Term power(const Term& t, unsigned k);

  friend Term operator+(const Term& x, const Term& y);
  friend Term operator*(const Term& x, const Term& y);

  Kind kind() const noexcept;
  const std::string& name() const;  // Var only
  const Term& left() const;         // Sum, Prod only
  const Term& right() const;

  // Variable names in order of first occurrence.
  std::vector<std::string> variables() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, Elem>;

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

Elem eval_term(const FiniteSemiring& a, const Term& t,
               const Assignment& assignment);

// lhs = rhs, universally quantified over the declared variables.
class Identity {
 public:
  // Throws std::invalid_argument if lhs or rhs mentions an undeclared
  // variable.
  Identity(Term lhs, Term rhs, std::vector<std::string> variables);
  // Declares the variables of lhs and rhs in order of first occurrence.
  Identity(Term lhs, Term rhs);

  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }
  std::string to_string() const;

 private:
  Term lhs_;
  Term rhs_;
  std::vector<std::string> variables_;
};

struct IdentityCheck {
  bool holds = true;
  Assignment counterexample;  // set iff !holds

  explicit operator bool() const noexcept { return holds; }
};

// Exhaustive over all n^k assignments, in lexicographic order of the value
// vector (first declared variable most significant).
IdentityCheck check_identity(const FiniteSemiring& a, const Identity& id);

namespace identities {

Identity one_plus_two_x_is_one();  // 1+2x = 1
Identity x_squared_is_x();         // x^2 = x
Identity two_x_is_x();             // 2x = x
Identity x_plus_x_is_x();          // x+x = x, same law as 2x = x
Identity one_plus_x_is_one();      // 1+x = 1
Identity two_x_is_zero();          // 2x = 0

}  // namespace identities

}  // namespace csr
