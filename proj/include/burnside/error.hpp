#ifndef BURNSIDE_ERROR_HPP_
#define BURNSIDE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace burnside {

  enum class ErrorKind {
    // input validation
    not_a_group,
    invalid_permutation,
    ambient_mismatch,
    class_mismatch,
    not_effective,
    not_p_isotropy,
    invalid_input,
    // size limits
    order_cap_exceeded,
    size_cap_exceeded,
    // invariants the theory guarantees; hitting one of these is a bug
    p_adic_integrality_violation,
    singular_diagonal,
    dependent_basis,
    internal
  };

  inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_a_group: return "NotAGroup";
      case ErrorKind::invalid_permutation: return "InvalidPermutation";
      case ErrorKind::ambient_mismatch: return "AmbientMismatch";
      case ErrorKind::class_mismatch: return "ClassMismatch";
      case ErrorKind::not_effective: return "NotEffective";
      case ErrorKind::not_p_isotropy: return "NotPIsotropy";
      case ErrorKind::invalid_input: return "InvalidInput";
      case ErrorKind::order_cap_exceeded: return "OrderCapExceeded";
      case ErrorKind::size_cap_exceeded: return "SizeCapExceeded";
      case ErrorKind::p_adic_integrality_violation:
        return "PAdicIntegralityViolation";
      case ErrorKind::singular_diagonal: return "SingularDiagonal";
      case ErrorKind::dependent_basis: return "DependentBasis";
      case ErrorKind::internal: return "InternalError";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  // Process exit status used by the command line tool.
  inline int exit_status(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::order_cap_exceeded:
      case ErrorKind::size_cap_exceeded: return 3;
      case ErrorKind::p_adic_integrality_violation:
      case ErrorKind::singular_diagonal:
      case ErrorKind::dependent_basis:
      case ErrorKind::internal: return 4;
      default: return 2;
    }
  }

}  // namespace burnside

#endif  // BURNSIDE_ERROR_HPP_
