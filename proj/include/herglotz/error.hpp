#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace herglotz {

/// Failure categories raised by the library. Each maps to one named error of
/// the public operations; the CLI maps them onto exit codes.
enum class Errc {
  EndpointIsRoot,
  ZeroPolynomial,
  ZeroFunction,
  NonRealRoots,
  EndpointOnSupport,
  Undecided,
  InterlacingViolated,
  NotNInterlacing,
  NotSharpReal,
  NotRepresentable,
  SingularOnContour,
  RootNearAxis,
  NotHermitian,
  IndexOutOfRange,
  RankDeficient,
  ConstantKernelViolated,
  KernelAdjointMismatch,
  NonSimplePole,
  HermitianViolation,
  NotVerifiedHerglotz,
  PoleOnGrid,
  SingularEPlus,
  SingularE,
  SubspaceTooSmall,
  DimensionMismatch,
  DivisionByZero,
  MalformedInput,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Budget for certified interval refinement. Every sign or ordering decision
/// on an irrational point may halve isolating intervals at most
/// `max_refine` times before it gives up with Errc::Undecided.
struct Limits {
  int max_refine = 64;
};

}  // namespace herglotz
