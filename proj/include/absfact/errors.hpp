#pragma once

#include <stdexcept>
#include <string>

namespace absfact {

// All library failures carry a stable machine-readable code next to the
// human message; the CLI maps the code straight into its report.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define ABSFACT_ERROR(NAME, CODE)                         \
  class NAME : public Error {                             \
   public:                                                \
    explicit NAME(const std::string& message)             \
        : Error(CODE, message) {}                         \
  }

ABSFACT_ERROR(ParseError, "parse_error");
ABSFACT_ERROR(ZeroPolynomial, "zero_polynomial");
ABSFACT_ERROR(MonomialInput, "monomial_input");
ABSFACT_ERROR(H1Violation, "h1_violation");
ABSFACT_ERROR(H2Violation, "h2_violation");
ABSFACT_ERROR(NewtonStall, "newton_stall");
ABSFACT_ERROR(ZeroConstantTerm, "zero_constant_term");
ABSFACT_ERROR(InsufficientOrder, "insufficient_order");
ABSFACT_ERROR(NoSolution, "no_solution");
ABSFACT_ERROR(Ambiguous, "ambiguous_kernel");
ABSFACT_ERROR(VerificationFailed, "verification_failed");
ABSFACT_ERROR(BudgetExceeded, "budget_exceeded");
ABSFACT_ERROR(SummandCapExceeded, "summand_cap_exceeded");
ABSFACT_ERROR(PrecisionError, "precision_error");

#undef ABSFACT_ERROR

}  // namespace absfact
