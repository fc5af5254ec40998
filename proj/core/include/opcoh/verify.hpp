#pragma once

#include <string>

#include "opcoh/complex.hpp"
#include "opcoh/homotopy.hpp"

namespace opcoh {

struct VerifyResult {
  bool ok = true;
  /// First offending move; moves.size() when the replay ends away from the
  /// target; -1 when the source or target path is itself malformed.
  int rejected = -1;
  std::string reason;
};

/// Replays every move against the stored cell boundaries.
VerifyResult verify_certificate(const Complex2& c, const HomotopyCertificate& cert);

}  // namespace opcoh
