#ifndef CAPELLI_ERROR_HPP
#define CAPELLI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace capelli {

/// Thrown when a request exceeds a configured size cap (n!, 2^m blowups).
/// Distinct from std::domain_error so callers can map it to a dedicated
/// exit code.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capelli

#endif
