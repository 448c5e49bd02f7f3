#pragma once

#include <stdexcept>

namespace foulkes {

// A requested computation would exceed a configured enumeration cap.  The
// message names both the required size and the cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree exactly did not.  Thrown by the operations
// that carry built-in cross-checks; always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace foulkes
