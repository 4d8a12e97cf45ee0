#ifndef UNICOB_ERRORS_HPP
#define UNICOB_ERRORS_HPP

#include <stdexcept>

namespace unicob {

// Parameters outside an operation's domain (negative dimension, i > j,
// composite modulus base, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace unicob

#endif  // UNICOB_ERRORS_HPP
