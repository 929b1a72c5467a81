#ifndef SNSIM_ERRORS_HPP_
#define SNSIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace snsim {

/// A physical quantity or angle outside its allowed range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two sites closer than the minimum resolvable separation; the discrete
/// self-potential is undefined there.
class DegenerateGeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Infeasible integration setup (zero/negative step, t_final in the past).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad command line (unknown flag, missing flag, unparsable number).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; not a failure.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output destination could not be written; message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace snsim

#endif  // SNSIM_ERRORS_HPP_
