#ifndef TSDD_ERRORS_HPP
#define TSDD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsdd {

// Bad configuration or parameters (CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Bad input data: unparsable or non-finite values (CLI exit code 3).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// The series admits no non-self match at the requested subsequence length.
class InfeasibleInputError : public ParameterError {
 public:
  explicit InfeasibleInputError(const std::string& what) : ParameterError(what) {}
};

}  // namespace tsdd

#endif  // TSDD_ERRORS_HPP
