#ifndef TORIC_ERROR_HPP
#define TORIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace toric {

/// Domain-level failure (bad cone, unsupported dimension, precondition
/// violation on mathematical input). The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toric

#endif  // TORIC_ERROR_HPP
