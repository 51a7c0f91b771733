#include "gradal/error.hpp"

namespace gradal {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotTorsionfree: return "NotTorsionfree";
    case ErrorKind::NotEntire: return "NotEntire";
    case ErrorKind::TorsionKernelOnFractionField: return "TorsionKernelOnFractionField";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::IncompatibleRings: return "IncompatibleRings";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::NotSimpleBase: return "NotSimpleBase";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnknownCheckId: return "UnknownCheckId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TypeError: return "TypeError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(what), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

} // namespace gradal
