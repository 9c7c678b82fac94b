#include "eucone/certificate.hpp"

namespace eucone {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Optimal: return "optimal";
    case Verdict::NotOptimal: return "not-optimal";
    case Verdict::Marginal: return "marginal";
    case Verdict::Unsupported: return "unsupported";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

}  // namespace eucone
