#ifndef SUGRA47_ERRORS_HPP
#define SUGRA47_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sugra47 {

/// Malformed or mismatched data: wrong frame, wrong degree, bad JSON, non-closed
/// matrix span, and so on. The CLI maps these to exit code 3.
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called outside its stated precondition (e.g. classify_type
/// on a candidate whose residuals do not vanish).
class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sugra47

#endif
