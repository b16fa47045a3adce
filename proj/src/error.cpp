#include "symtheta/error.hpp"

namespace symtheta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SlotsTooFew: return "slots-too-few";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnsupportedFamily: return "unsupported-family";
    case ErrorKind::InvalidClass: return "invalid-class";
    case ErrorKind::BadDefectClass: return "bad-defect-class";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::SeriesUndetermined: return "series-undetermined";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::WrongSeries: return "wrong-series";
    case ErrorKind::MissingSignBit: return "missing-sign-bit";
    case ErrorKind::SpuriousField: return "spurious-field";
    case ErrorKind::WrongFamily: return "wrong-family";
    case ErrorKind::UnsupportedPair: return "unsupported-pair";
    case ErrorKind::UnsupportedTarget: return "unsupported-target";
    case ErrorKind::AssertionFailure: return "assertion-failure";
  }
  return "unknown";
}

}  // namespace symtheta
