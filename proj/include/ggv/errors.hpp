#pragma once

#include <stdexcept>
#include <string>

namespace ggv {

// Error taxonomy for the workbench.  Identities that are *expected* to be
// checked (and may legitimately fail) are reported as data through the
// report module; the exceptions below signal broken preconditions or an
// internally inconsistent construction, and abort the run.

#define GGV_DEFINE_ERROR(Name)                                        \
  struct Name : std::runtime_error {                                  \
    explicit Name(const std::string& m)                               \
        : std::runtime_error(std::string(#Name) + ": " + m) {}        \
  }

GGV_DEFINE_ERROR(ConductorMismatch);
GGV_DEFINE_ERROR(DivisionByZero);
GGV_DEFINE_ERROR(BoundExceeded);
GGV_DEFINE_ERROR(UnsupportedInstance);
GGV_DEFINE_ERROR(TableComputationFailed);
GGV_DEFINE_ERROR(GroupMismatch);
GGV_DEFINE_ERROR(NotASubgroup);
GGV_DEFINE_ERROR(DimensionMismatch);
GGV_DEFINE_ERROR(PairModeRequired);
GGV_DEFINE_ERROR(AmbiguousConstraintSystem);
GGV_DEFINE_ERROR(InconsistentSystem);
GGV_DEFINE_ERROR(NonIntegralTrace);
GGV_DEFINE_ERROR(NotGradedZero);
GGV_DEFINE_ERROR(RankDeficient);
GGV_DEFINE_ERROR(LatticeNotSaturated);
GGV_DEFINE_ERROR(OverlapInconsistency);
GGV_DEFINE_ERROR(NotInjective);
GGV_DEFINE_ERROR(NotWInvariant);
GGV_DEFINE_ERROR(UnknownType);
GGV_DEFINE_ERROR(FormulaMismatch);
GGV_DEFINE_ERROR(ConfigError);
GGV_DEFINE_ERROR(CacheCorrupt);

#undef GGV_DEFINE_ERROR

}  // namespace ggv
