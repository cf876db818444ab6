#pragma once

#include <stdexcept>
#include <string>

namespace condensed {

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct GroundMismatch : std::runtime_error {
  explicit GroundMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotComparable : std::runtime_error {
  explicit NotComparable(const std::string& what) : std::runtime_error(what) {}
};

struct TowerMismatch : std::runtime_error {
  explicit TowerMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct IncompatibleCone : std::runtime_error {
  explicit IncompatibleCone(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionUnchecked : std::runtime_error {
  explicit PreconditionUnchecked(const std::string& what) : std::runtime_error(what) {}
};

struct LeftNotFullyFaithful : std::runtime_error {
  explicit LeftNotFullyFaithful(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessNotIso : std::runtime_error {
  explicit WitnessNotIso(const std::string& what) : std::runtime_error(what) {}
};

struct ProductPreservationFailed : std::runtime_error {
  explicit ProductPreservationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ValueNotInUnderlying : std::runtime_error {
  explicit ValueNotInUnderlying(const std::string& what) : std::runtime_error(what) {}
};

struct NotANaturalTransformation : std::runtime_error {
  explicit NotANaturalTransformation(const std::string& what) : std::runtime_error(what) {}
};

struct NotLinear : std::runtime_error {
  explicit NotLinear(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedInput : std::runtime_error {
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace condensed
