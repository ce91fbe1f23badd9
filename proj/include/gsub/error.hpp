#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsub {

/// Every failure the library reports carries one of these codes so that
/// callers (the CLI in particular) can map them to exit statuses.
enum class ErrorCode {
  InvalidGraph,
  ParseError,
  GammaNotAutomorphism,
  GammaDoesNotSwapAB,
  VMinusBDisconnected,
  EmptyInterior,
  CyclesNotOdd,
  GridTooCoarse,
  NoConvergence,
  TooCloseToInteriorSpectrum,
  KernelPole,
  RankAmbiguous,
  S2ConsistencyFailure,
  InvalidTypeCombination,
  TotalMismatch,
  PreconditionNotMet,
  NoSuchCluster,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsub
