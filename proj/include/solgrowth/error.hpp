#ifndef SOLGROWTH_ERROR_HPP_
#define SOLGROWTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace solgrowth {

  enum class ErrorKind {
    CapExceeded,
    MixedVariants,
    InvalidElement,
    NotNormal,
    NotTransitive,
    NotSoluble,
    Trivial,
    ContextViolated,
    UnknownName,
    DegenerateWindow,
    HypothesisViolated,
    WitnessDegenerate,
    SeriesMismatch,
    RankDeficient,
    NotSelfCentralizing,
    ParseError,
    UnknownSubcommand,
  };

  inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
      case ErrorKind::CapExceeded: return "CapExceeded";
      case ErrorKind::MixedVariants: return "MixedVariants";
      case ErrorKind::InvalidElement: return "InvalidElement";
      case ErrorKind::NotNormal: return "NotNormal";
      case ErrorKind::NotTransitive: return "NotTransitive";
      case ErrorKind::NotSoluble: return "NotSoluble";
      case ErrorKind::Trivial: return "Trivial";
      case ErrorKind::ContextViolated: return "ContextViolated";
      case ErrorKind::UnknownName: return "UnknownName";
      case ErrorKind::DegenerateWindow: return "DegenerateWindow";
      case ErrorKind::HypothesisViolated: return "HypothesisViolated";
      case ErrorKind::WitnessDegenerate: return "WitnessDegenerate";
      case ErrorKind::SeriesMismatch: return "SeriesMismatch";
      case ErrorKind::RankDeficient: return "RankDeficient";
      case ErrorKind::NotSelfCentralizing: return "NotSelfCentralizing";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::UnknownSubcommand: return "UnknownSubcommand";
    }
    return "Unknown";
  }

  /// Every failure raised by the library carries one of the kinds above.
  class GroupError : public std::runtime_error {
   public:
    GroupError(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& what) {
    throw GroupError(kind, what);
  }

}  // namespace solgrowth

#endif  // SOLGROWTH_ERROR_HPP_
