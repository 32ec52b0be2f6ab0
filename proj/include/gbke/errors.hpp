#pragma once

#include <stdexcept>
#include <string>

namespace gbke {

/// Violated precondition or malformed input (bad dimensions, unknown edge,
/// exponent outside the key domain, non-bipartite glue target, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured guard tripped: degree / basis-size cap in Buchberger,
/// Fourier-Motzkin row cap, enumeration cap, walk-count cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No key in the private key list opens the envelope.
class DecryptionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gbke
