#include "herglotz/error.hpp"

namespace herglotz {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EndpointIsRoot: return "EndpointIsRoot";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::NonRealRoots: return "NonRealRoots";
    case Errc::EndpointOnSupport: return "EndpointOnSupport";
    case Errc::Undecided: return "Undecided";
    case Errc::InterlacingViolated: return "InterlacingViolated";
    case Errc::NotNInterlacing: return "NotNInterlacing";
    case Errc::NotSharpReal: return "NotSharpReal";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::SingularOnContour: return "SingularOnContour";
    case Errc::RootNearAxis: return "RootNearAxis";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::ConstantKernelViolated: return "ConstantKernelViolated";
    case Errc::KernelAdjointMismatch: return "KernelAdjointMismatch";
    case Errc::NonSimplePole: return "NonSimplePole";
    case Errc::HermitianViolation: return "HermitianViolation";
    case Errc::NotVerifiedHerglotz: return "NotVerifiedHerglotz";
    case Errc::PoleOnGrid: return "PoleOnGrid";
    case Errc::SingularEPlus: return "SingularEPlus";
    case Errc::SingularE: return "SingularE";
    case Errc::SubspaceTooSmall: return "SubspaceTooSmall";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace herglotz
