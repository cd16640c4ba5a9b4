#pragma once

#include <stdexcept>
#include <string>

namespace bellga {

// Thrown when a caller passes values that break a stated operation contract
// (e.g. outcomes that do not belong to the claimed hidden draw and settings).
class contract_violation : public std::logic_error {
 public:
  explicit contract_violation(const std::string& what) : std::logic_error(what) {}
};

// Thrown when an enumeration would exceed its configured cap.
class resource_limit : public std::runtime_error {
 public:
  explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bellga
