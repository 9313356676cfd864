#pragma once

#include <stdexcept>
#include <string>

namespace galdesc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what = "entries live in different fields") : Error(what) {}
};
struct ShapeError : Error {
  explicit ShapeError(const std::string& what = "matrix shape mismatch") : Error(what) {}
};
struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& what = "matrix is not idempotent") : Error(what) {}
};
struct NotAutomorphism : Error {
  explicit NotAutomorphism(const std::string& what = "generator image is not a root of the minimal polynomial") : Error(what) {}
};
struct NotGalois : Error {
  explicit NotGalois(const std::string& what = "automorphisms do not form a group of order equal to the degree") : Error(what) {}
};
struct BadGroupElement : Error {
  explicit BadGroupElement(const std::string& what = "group element index out of range") : Error(what) {}
};
struct CocycleViolation : Error {
  explicit CocycleViolation(const std::string& what = "descent datum violates the cocycle condition") : Error(what) {}
};
struct NotCartesian : Error {
  explicit NotCartesian(const std::string& what = "canonical comparison map is not invertible") : Error(what) {}
};
struct WeakProjectionFails : Error {
  explicit WeakProjectionFails(const std::string& what = "projection morphism is not invertible") : Error(what) {}
};
struct MissingDatum : Error {
  explicit MissingDatum(const std::string& what = "morphism endpoints carry no descent datum") : Error(what) {}
};
struct MonoidMismatch : Error {
  explicit MonoidMismatch(const std::string& what = "modules live over different monoids") : Error(what) {}
};
struct BadMonoidMap : Error {
  explicit BadMonoidMap(const std::string& what = "map is not a monoid homomorphism") : Error(what) {}
};
struct NotArtin : Error {
  explicit NotArtin(const std::string& what = "object does not split as copies of the unit upstairs") : Error(what) {}
};
struct NonNormal : Error {
  explicit NonNormal(const std::string& what = "subgroup is not normal") : Error(what) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& what = "malformed input") : Error(what) {}
};

}  // namespace galdesc
