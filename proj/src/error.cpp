#include "linfiso/error.hpp"

namespace linfiso {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::bounds: return "bounds";
    case ErrorCode::singular: return "singular";
    case ErrorCode::invalid_basis: return "invalid-basis";
    case ErrorCode::inadmissible_set: return "inadmissible-set";
    case ErrorCode::wrong_codimension: return "wrong-codimension";
    case ErrorCode::parse: return "parse";
    case ErrorCode::usage: return "usage";
    case ErrorCode::model: return "model";
    case ErrorCode::contract: return "contract";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace linfiso
