#ifndef HCSUPER_ERRORS_HPP
#define HCSUPER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcsuper {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HCSUPER_DECLARE_ERROR(Name)                                                                \
    class Name : public Error {                                                                    \
    public:                                                                                        \
        using Error::Error;                                                                        \
    }

// scalar / linear algebra
HCSUPER_DECLARE_ERROR(ContextMismatch);
HCSUPER_DECLARE_ERROR(ParseError);
HCSUPER_DECLARE_ERROR(DimensionMismatch);
HCSUPER_DECLARE_ERROR(CommutationFailure);
HCSUPER_DECLARE_ERROR(IrrationalSpectrum);
HCSUPER_DECLARE_ERROR(NotDiagonalizable);

// Lie superalgebras
HCSUPER_DECLARE_ERROR(MixedAlgebras);
HCSUPER_DECLARE_ERROR(MissingInvolution);
HCSUPER_DECLARE_ERROR(MissingForm);
HCSUPER_DECLARE_ERROR(InvalidAlgebra);

// symmetric pairs
HCSUPER_DECLARE_ERROR(NotAbelian);
HCSUPER_DECLARE_ERROR(NotInEvenP);
HCSUPER_DECLARE_ERROR(CentralizerTooLarge);
HCSUPER_DECLARE_ERROR(DegenerateFormOnA);
HCSUPER_DECLARE_ERROR(DirectionOnWall);

// Harish-Chandra projection
HCSUPER_DECLARE_ERROR(OrderNotIwasawa);

// invariant rings and rank-one models
HCSUPER_DECLARE_ERROR(NotInSA);
HCSUPER_DECLARE_ERROR(InconsistentRelations);
HCSUPER_DECLARE_ERROR(BadIsoClass);

// catalog
HCSUPER_DECLARE_ERROR(NotEvenType);
HCSUPER_DECLARE_ERROR(NoCertificate);
HCSUPER_DECLARE_ERROR(UnknownEntry);

#undef HCSUPER_DECLARE_ERROR

} // namespace hcsuper

#endif
