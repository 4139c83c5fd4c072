#include "qforge/error.hpp"

namespace qforge {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MixedDegree: return "MixedDegree";
    case ErrorCode::MixedField: return "MixedField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ResourceBound: return "ResourceBound";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotClifford: return "NotClifford";
    case ErrorCode::PBWFailure: return "PBWFailure";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::NotFrobeniusTop: return "NotFrobeniusTop";
    case ErrorCode::NondegeneracyFailure: return "NondegeneracyFailure";
    case ErrorCode::InhomogeneousRadical: return "InhomogeneousRadical";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::WNotCentral: return "WNotCentral";
    case ErrorCode::NameClash: return "NameClash";
    case ErrorCode::FieldLacksI: return "FieldLacksI";
    case ErrorCode::RelationNotKilled: return "RelationNotKilled";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DegreeError: return "DegreeError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InconsistentTheta: return "InconsistentTheta";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PBWFailure:
    case ErrorCode::NotClifford:
    case ErrorCode::NotFrobeniusTop:
    case ErrorCode::NondegeneracyFailure:
    case ErrorCode::InhomogeneousRadical:
    case ErrorCode::NotStabilized:
    case ErrorCode::NotRegular:
    case ErrorCode::WNotCentral:
    case ErrorCode::RelationNotKilled:
    case ErrorCode::CertificateFailure:
      return false;
    default:
      return true;
  }
}

}  // namespace qforge
