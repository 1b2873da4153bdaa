#pragma once

#include <stdexcept>
#include <string>

namespace zolo {

// Base class for all library errors. `name()` is the stable identifier
// reported on stderr by the CLI (exit code 3).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define ZOLO_DEFINE_ERROR(NAME)                                     \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

// numerics
ZOLO_DEFINE_ERROR(EmptyMatrix);
ZOLO_DEFINE_ERROR(NonFiniteEntry);
ZOLO_DEFINE_ERROR(RankOutOfRange);
ZOLO_DEFINE_ERROR(DimensionMismatch);
ZOLO_DEFINE_ERROR(ConvergenceFailure);

// rational
ZOLO_DEFINE_ERROR(DivideByZeroWeightSum);
ZOLO_DEFINE_ERROR(SingularAtPoint);
ZOLO_DEFINE_ERROR(IllConditioned);
ZOLO_DEFINE_ERROR(DegenerateSigma);

// domains
ZOLO_DEFINE_ERROR(InvalidGeometry);
ZOLO_DEFINE_ERROR(UnknownExample);
ZOLO_DEFINE_ERROR(TooFewPoints);

// loewner
ZOLO_DEFINE_ERROR(CoincidentPoints);
ZOLO_DEFINE_ERROR(RankDeficientPencil);

// aaa
ZOLO_DEFINE_ERROR(InsufficientSamples);

// zolotarev
ZOLO_DEFINE_ERROR(UndefinedOutsideSets);
ZOLO_DEFINE_ERROR(DegenerateTau);
ZOLO_DEFINE_ERROR(NormalizationDrift);
ZOLO_DEFINE_ERROR(ZeroOnF);
ZOLO_DEFINE_ERROR(MethodFailure);

// harness
ZOLO_DEFINE_ERROR(ConfigError);

#undef ZOLO_DEFINE_ERROR

} // namespace zolo
