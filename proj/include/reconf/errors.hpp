#pragma once

#include <stdexcept>
#include <string>

namespace reconf {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can catch the whole family in one place.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RECONF_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

RECONF_DEFINE_ERROR(ParseError);
RECONF_DEFINE_ERROR(PreconditionError);
RECONF_DEFINE_ERROR(IllegalMove);
RECONF_DEFINE_ERROR(ResourceLimit);

// split_ts_solver
RECONF_DEFINE_ERROR(UnsupportedColorBound);
RECONF_DEFINE_ERROR(NotSplit);
RECONF_DEFINE_ERROR(RuleMismatch);

// reductions
RECONF_DEFINE_ERROR(MalformedNcl);
RECONF_DEFINE_ERROR(NotNormalized);
RECONF_DEFINE_ERROR(NonMainConfiguration);
RECONF_DEFINE_ERROR(MalformedWitness);
RECONF_DEFINE_ERROR(InvalidState);
RECONF_DEFINE_ERROR(BadColorBound);
RECONF_DEFINE_ERROR(SizeMismatch);
RECONF_DEFINE_ERROR(InvalidWitness);

#undef RECONF_DEFINE_ERROR

}  // namespace reconf
