#include "smoothsum/error.hpp"

namespace smoothsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::config:
      return "ConfigError";
    case ErrorKind::domain:
      return "DomainError";
    case ErrorKind::count_cap_exceeded:
      return "CountCapExceeded";
    case ErrorKind::tolerance_unachievable:
      return "ToleranceUnachievable";
    case ErrorKind::unwrap:
      return "UnwrapError";
    case ErrorKind::precision_loss:
      return "PrecisionLoss";
    case ErrorKind::singular_factor:
      return "SingularFactor";
    case ErrorKind::eta_too_small:
      return "EtaTooSmall";
  }
  return "Error";
}

}  // namespace smoothsum
