#include "hivecomb/errors.hpp"

namespace hivecomb {

const char* to_string(NotADiagramReason reason) {
  switch (reason) {
    case NotADiagramReason::Tension: return "tension";
    case NotADiagramReason::Disconnected: return "disconnected";
    case NotADiagramReason::ParallelLines: return "parallel-lines";
    case NotADiagramReason::NonintegralMultiplicity: return "nonintegral-multiplicity";
    case NotADiagramReason::Monodromy: return "monodromy";
  }
  return "unknown";
}

}  // namespace hivecomb
