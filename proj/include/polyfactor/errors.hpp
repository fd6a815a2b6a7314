#ifndef POLYFACTOR_ERRORS_HPP
#define POLYFACTOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyfactor {

// Exit-code classes used by the CLI: 2 = parse, 3 = hypothesis, 4 = internal.
enum class ErrorClass { Parse = 2, Hypothesis = 3, Internal = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

#define POLYFACTOR_DEFINE_ERROR(Name, Cls)                                   \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what = #Name)                       \
            : Error(ErrorClass::Cls, std::string(#Name) + ": " + what) {}    \
    }

POLYFACTOR_DEFINE_ERROR(ParseError, Parse);
POLYFACTOR_DEFINE_ERROR(NegativeExponent, Parse);

POLYFACTOR_DEFINE_ERROR(H1Violated, Hypothesis);
POLYFACTOR_DEFINE_ERROR(H2Violated, Hypothesis);

POLYFACTOR_DEFINE_ERROR(ZeroPolynomial, Internal);
POLYFACTOR_DEFINE_ERROR(ConstantInput, Internal);
POLYFACTOR_DEFINE_ERROR(ZeroConstantTerm, Internal);
POLYFACTOR_DEFINE_ERROR(NotMonic, Internal);
POLYFACTOR_DEFINE_ERROR(NotSquarefreeModQ, Internal);
POLYFACTOR_DEFINE_ERROR(Inconsistent, Internal);
POLYFACTOR_DEFINE_ERROR(Underdetermined, Internal);
POLYFACTOR_DEFINE_ERROR(DegeneratePolytope, Internal);
POLYFACTOR_DEFINE_ERROR(InternalGeometryError, Internal);
POLYFACTOR_DEFINE_ERROR(NonInvertibleDerivative, Internal);
POLYFACTOR_DEFINE_ERROR(PrecisionExceeded, Internal);
POLYFACTOR_DEFINE_ERROR(NonBinaryKernel, Internal);
POLYFACTOR_DEFINE_ERROR(NonIntegralSolution, Internal);
POLYFACTOR_DEFINE_ERROR(NegativeSupport, Internal);
POLYFACTOR_DEFINE_ERROR(ProductMismatch, Internal);
POLYFACTOR_DEFINE_ERROR(PreconditionNotMet, Internal);
POLYFACTOR_DEFINE_ERROR(GenerationExhausted, Internal);

#undef POLYFACTOR_DEFINE_ERROR

} // namespace polyfactor

#endif
