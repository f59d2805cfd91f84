#pragma once

#include <stdexcept>
#include <string>

namespace linkwidth {

enum class Errc {
  MalformedInput,
  BadIncidence,
  BadCoefficient,
  Disconnected,
  NonSpherical,
  TooLarge,
  TooSmall,
  DomainError,
  HypothesisViolated,
  InconsistentInputs,
  NotABijection,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::BadIncidence: return "BadIncidence";
    case Errc::BadCoefficient: return "BadCoefficient";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonSpherical: return "NonSpherical";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::DomainError: return "DomainError";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::InconsistentInputs: return "InconsistentInputs";
    case Errc::NotABijection: return "NotABijection";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace linkwidth
