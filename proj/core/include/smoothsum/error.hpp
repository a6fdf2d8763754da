#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace smoothsum {

enum class ErrorKind {
  config,
  domain,
  count_cap_exceeded,
  tolerance_unachievable,
  unwrap,
  precision_loss,
  singular_factor,
  eta_too_small,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every failure raised by the library. The kind is what
/// the CLI reports and maps to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SMOOTHSUM_DEFINE_ERROR(Name, Kind)                     \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(Kind, what) {} \
  };

SMOOTHSUM_DEFINE_ERROR(ConfigError, ErrorKind::config)
SMOOTHSUM_DEFINE_ERROR(DomainError, ErrorKind::domain)
SMOOTHSUM_DEFINE_ERROR(CountCapExceeded, ErrorKind::count_cap_exceeded)
SMOOTHSUM_DEFINE_ERROR(ToleranceUnachievable, ErrorKind::tolerance_unachievable)
SMOOTHSUM_DEFINE_ERROR(UnwrapError, ErrorKind::unwrap)
SMOOTHSUM_DEFINE_ERROR(PrecisionLoss, ErrorKind::precision_loss)
SMOOTHSUM_DEFINE_ERROR(SingularFactor, ErrorKind::singular_factor)
SMOOTHSUM_DEFINE_ERROR(EtaTooSmall, ErrorKind::eta_too_small)

#undef SMOOTHSUM_DEFINE_ERROR

}  // namespace smoothsum
