#pragma once

#include <stdexcept>
#include <string>

namespace tsys {

// Typed precondition failure. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define TSYS_ERROR(Name)                                                     \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

TSYS_ERROR(EpsNotInvolutive);
TSYS_ERROR(NoUnit);
TSYS_ERROR(NonterminatingClosure);
TSYS_ERROR(ZeroDivisor);
TSYS_ERROR(ActionOnly);
TSYS_ERROR(DimensionTooLarge);
TSYS_ERROR(NonInvertible);
TSYS_ERROR(SearchBoundExceeded);
TSYS_ERROR(IllDefined);
TSYS_ERROR(LatticeTooLarge);
TSYS_ERROR(NullDenominator);
TSYS_ERROR(CarrierTooLarge);
TSYS_ERROR(CoefficientSpaceTooLarge);
TSYS_ERROR(QuotientTooLarge);
TSYS_ERROR(NotHomomorphism);
TSYS_ERROR(NoCommonMonomial);
TSYS_ERROR(NotTriple);
TSYS_ERROR(InvalidElement);
TSYS_ERROR(InvalidInput);
TSYS_ERROR(AxiomViolation);
TSYS_ERROR(Unsupported);

#undef TSYS_ERROR

}  // namespace tsys
