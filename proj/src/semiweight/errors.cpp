#include "semiweight/errors.hpp"

namespace semiweight {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::empty_generators: return "EmptyGenerators";
    case ErrorCode::non_coprime_generators: return "NonCoprimeGenerators";
    case ErrorCode::not_closed: return "NotClosed";
    case ErrorCode::wrong_cardinality: return "WrongCardinality";
    case ErrorCode::genus_mismatch: return "GenusMismatch";
    case ErrorCode::no_nonzero_residue_element: return "NoNonzeroResidueElement";
    case ErrorCode::hypothesis_violated: return "HypothesisViolated";
    case ErrorCode::construction_out_of_domain: return "ConstructionOutOfDomain";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::genus_too_small: return "GenusTooSmall";
    case ErrorCode::empty_gap_set: return "EmptyGapSet";
    case ErrorCode::resource_limit: return "ResourceLimit";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace semiweight
