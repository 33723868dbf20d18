#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rackbi {

class BasisMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A product would leave the declared filtration window.
class DegreeCapExceeded : public std::runtime_error {
public:
  DegreeCapExceeded(int degree, int cap)
      : std::runtime_error("filtration degree " + std::to_string(degree) + " exceeds cap " +
                           std::to_string(cap)),
        degree(degree), cap(cap)
  {
  }
  int degree;
  int cap;
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string& what, std::size_t needed, std::size_t allowed)
      : std::runtime_error(what + ": needs " + std::to_string(needed) + ", budget " +
                           std::to_string(allowed)),
        needed(needed), allowed(allowed)
  {
  }
  std::size_t needed;
  std::size_t allowed;
};

/// Base for failed identities; carries basis witnesses and both evaluated sides.
class AxiomViolation : public std::runtime_error {
public:
  AxiomViolation(std::string axiom, std::vector<std::size_t> witness, std::string lhs, std::string rhs)
      : std::runtime_error(axiom + " fails at " + join(witness) + ": " + lhs + " != " + rhs),
        axiom(std::move(axiom)), witness(std::move(witness)), lhs(std::move(lhs)), rhs(std::move(rhs))
  {
  }
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string lhs;
  std::string rhs;

  static std::string join(const std::vector<std::size_t>& w)
  {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i]);
    }
    return s + ")";
  }
};

class LeibnizViolation : public AxiomViolation {
public:
  LeibnizViolation(std::size_t j, std::size_t k, std::size_t l, std::string lhs, std::string rhs)
      : AxiomViolation("leibniz identity", {j, k, l}, std::move(lhs), std::move(rhs))
  {
  }
};

class IdealSandwichViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class GaugeEquivarianceViolation : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};

class DecompositionFailure : public AxiomViolation {
public:
  using AxiomViolation::AxiomViolation;
};

} // namespace rackbi
