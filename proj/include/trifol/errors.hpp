#pragma once

#include <stdexcept>
#include <string>

namespace trifol {

// Base for every error this library throws. `code` is a stable machine
// readable tag; `what()` carries the human diagnostic.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

#define TRIFOL_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                                   \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}          \
  }

TRIFOL_DEFINE_ERROR(SyntaxError);
TRIFOL_DEFINE_ERROR(Degenerate);
TRIFOL_DEFINE_ERROR(NotClosed);
TRIFOL_DEFINE_ERROR(BadLink);
TRIFOL_DEFINE_ERROR(UnknownVertex);
TRIFOL_DEFINE_ERROR(UnknownEdge);
TRIFOL_DEFINE_ERROR(DuplicateEdge);
TRIFOL_DEFINE_ERROR(MissingEdge);
TRIFOL_DEFINE_ERROR(NoTotalOrder);
TRIFOL_DEFINE_ERROR(NotRecurrent);
TRIFOL_DEFINE_ERROR(BadWeights);
TRIFOL_DEFINE_ERROR(EmptyMatrix);
TRIFOL_DEFINE_ERROR(ThetaCollision);
TRIFOL_DEFINE_ERROR(BadSurface);
TRIFOL_DEFINE_ERROR(TooFewLayers);
TRIFOL_DEFINE_ERROR(BudgetTooLarge);
TRIFOL_DEFINE_ERROR(InvalidVector);
TRIFOL_DEFINE_ERROR(DomainError);
TRIFOL_DEFINE_ERROR(IoError);

#undef TRIFOL_DEFINE_ERROR

} // namespace trifol
