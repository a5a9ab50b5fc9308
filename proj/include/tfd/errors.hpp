#pragma once

#include <stdexcept>

namespace tfd {

// Basis mismatch, rank overflow, wrong root for a conversion.
struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A search box turned out to be too small: some admitted solution touches
// its boundary, so results outside the box cannot be ruled out.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input. The message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown or malformed constraint id inside an infeasibility certificate.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Golden files missing, unreadable or failing their checksum.
struct CatalogIOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tfd
