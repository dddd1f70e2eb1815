#pragma once

#include <stdexcept>
#include <string>

namespace zrs {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ZRS_DEFINE_ERROR(name)                      \
    class name : public error {                     \
    public:                                         \
        explicit name(const std::string& what_arg)  \
            : error(#name ": " + what_arg) {}       \
    }

ZRS_DEFINE_ERROR(SingularMatrix);
ZRS_DEFINE_ERROR(NotRepresentable);
ZRS_DEFINE_ERROR(AtPole);
ZRS_DEFINE_ERROR(DegenerateSystem);
ZRS_DEFINE_ERROR(OnImaginaryAxis);
ZRS_DEFINE_ERROR(InternalInconsistency);
ZRS_DEFINE_ERROR(NotApplicable);
ZRS_DEFINE_ERROR(DegenerateGamma);
ZRS_DEFINE_ERROR(NonConvergent);
ZRS_DEFINE_ERROR(AtEigenvalue);

#undef ZRS_DEFINE_ERROR

} // namespace zrs
