#pragma once

#include <stdexcept>
#include <string>

namespace ela {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ELA_ERROR(Name)                                     \
    struct Name : Error {                                   \
        explicit Name(const std::string& w) : Error(w) {}   \
    }

ELA_ERROR(UnsupportedType);
ELA_ERROR(NotAPositiveRoot);
ELA_ERROR(DiagramMismatch);
ELA_ERROR(MissingAssignment);
ELA_ERROR(MissingGenerator);
ELA_ERROR(DimensionMismatch);
ELA_ERROR(SizeMismatch);
ELA_ERROR(NotFaithfulAtThisRank);
ELA_ERROR(NotClosed);
ELA_ERROR(ClosureDiverged);
ELA_ERROR(InconsistentPresentation);
ELA_ERROR(Underdetermined);
ELA_ERROR(NonDominant);
ELA_ERROR(ExpansionFailed);
ELA_ERROR(BasisMismatch);
ELA_ERROR(ParseError);

#undef ELA_ERROR

}  // namespace ela
