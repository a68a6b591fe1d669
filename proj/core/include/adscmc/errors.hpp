#ifndef ADSCMC_ERRORS_HPP
#define ADSCMC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adscmc {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class UnknownIdentifier : public Error {
public:
  UnknownIdentifier(const std::string& token, std::size_t offset)
      : Error("unknown identifier '" + token + "' at offset " + std::to_string(offset)),
        token_(token), offset_(offset) {}
  const std::string& token() const { return token_; }
  std::size_t offset() const { return offset_; }

private:
  std::string token_;
  std::size_t offset_;
};

#define ADSCMC_SIMPLE_ERROR(Name)           \
  class Name : public Error {               \
  public:                                   \
    using Error::Error;                     \
  };

ADSCMC_SIMPLE_ERROR(DomainError)
ADSCMC_SIMPLE_ERROR(EvaluationError)
ADSCMC_SIMPLE_ERROR(NotUnimodular)
ADSCMC_SIMPLE_ERROR(NotInvertible)
ADSCMC_SIMPLE_ERROR(NotTraceless)
ADSCMC_SIMPLE_ERROR(StepFailure)
ADSCMC_SIMPLE_ERROR(QuadratureError)
ADSCMC_SIMPLE_ERROR(DegenerateMetric)
ADSCMC_SIMPLE_ERROR(NormalSolveError)
ADSCMC_SIMPLE_ERROR(CompatibilityError)
ADSCMC_SIMPLE_ERROR(PoleError)
ADSCMC_SIMPLE_ERROR(HyperquadricError)
ADSCMC_SIMPLE_ERROR(TagMismatch)
ADSCMC_SIMPLE_ERROR(DivisionError)
ADSCMC_SIMPLE_ERROR(UnknownName)
ADSCMC_SIMPLE_ERROR(NoClosedForm)
ADSCMC_SIMPLE_ERROR(FormatError)
ADSCMC_SIMPLE_ERROR(IoError)

#undef ADSCMC_SIMPLE_ERROR

}  // namespace adscmc

#endif
