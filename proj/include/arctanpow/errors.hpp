#pragma once

#include <stdexcept>
#include <string>

namespace arctanpow {

// Argument outside the mathematical domain of an operation (poles, |x| >= 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The five-term recursion has a vanishing denominator at 2k = n + 2.
class DegenerateRecursion : public DomainError {
 public:
  DegenerateRecursion(long k, long n)
      : DomainError("five-term recursion is degenerate at (k=" + std::to_string(k) +
                    ", n=" + std::to_string(n) + "); use the single-sum recursion"),
        k_(k),
        n_(n) {}

  long k() const noexcept { return k_; }
  long n() const noexcept { return n_; }

 private:
  long k_;
  long n_;
};

// A terminating hypergeometric sum hit a zero Pochhammer denominator.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Two algorithms produced different values for the same coefficient cell.
class CoeffClash : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A digamma expression expected to be rational still carries gamma or ln 2.
class BasisOverflow : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A coefficient of the wrong parity survived in the Lemma polynomial.
class ParityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arctanpow
