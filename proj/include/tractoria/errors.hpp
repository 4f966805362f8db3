#pragma once

#include <stdexcept>
#include <string>

namespace tractoria {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TRACTORIA_ERROR_TYPE(Name)                                   \
    struct Name : Error {                                            \
        explicit Name(const std::string& what) : Error(what) {}      \
    }

TRACTORIA_ERROR_TYPE(InvalidParam);
TRACTORIA_ERROR_TYPE(RangeOverflow);
TRACTORIA_ERROR_TYPE(NearZero);
TRACTORIA_ERROR_TYPE(SampleOutsideTract);
TRACTORIA_ERROR_TYPE(SeedOnBoundary);
TRACTORIA_ERROR_TYPE(SeedNotInTract);
TRACTORIA_ERROR_TYPE(CircleMissesTract);
TRACTORIA_ERROR_TYPE(NotExpanding);
TRACTORIA_ERROR_TYPE(OutsideDisk);
TRACTORIA_ERROR_TYPE(AtPuncture);
TRACTORIA_ERROR_TYPE(KNotAboveOne);
TRACTORIA_ERROR_TYPE(EtaOutOfRange);
TRACTORIA_ERROR_TYPE(KernelAtLeastOne);
TRACTORIA_ERROR_TYPE(LogTooSmall);
TRACTORIA_ERROR_TYPE(PointNotInterior);
TRACTORIA_ERROR_TYPE(ArcEmpty);
TRACTORIA_ERROR_TYPE(VanishingF);
TRACTORIA_ERROR_TYPE(LevelArcMismatch);
TRACTORIA_ERROR_TYPE(ChainBroken);
TRACTORIA_ERROR_TYPE(ConditionNeverMet);
TRACTORIA_ERROR_TYPE(AnnulusMissesTract);
TRACTORIA_ERROR_TYPE(NewtonStall);
TRACTORIA_ERROR_TYPE(PrecisionCap);
TRACTORIA_ERROR_TYPE(IOFailure);
TRACTORIA_ERROR_TYPE(ParseError);

#undef TRACTORIA_ERROR_TYPE

} // namespace tractoria
