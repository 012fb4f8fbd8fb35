#pragma once

#include <stdexcept>
#include <string>

namespace compatri {

// Everything the library can reject is reported through one exception type.
// The message is machine-readable ("NotSimple(0,2)") so the CLI can print it
// verbatim and tests can match it exactly.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    NotSimple,
    DuplicateVertex,
    DegenerateSpike,
    CollinearVertex,
    CoordinateOutOfRange,
    TooFewVertices,
    AdjacentPair,
    SameVertex,
    IndexOutOfRange,
    SizeMismatch,
    MissingBoundaryEdge,
    InvalidTriple,
    NotASplitter,
    NoHit,
    Parse,
    Io,
    InternalInconsistency,
  };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

namespace detail {
[[noreturn]] inline void fail(Error::Kind k, const std::string& msg) {
  throw Error(k, msg);
}
}  // namespace detail

inline Error not_simple(int i, int j) {
  return Error(Error::Kind::NotSimple,
               "NotSimple(" + std::to_string(i) + "," + std::to_string(j) + ")");
}
inline Error duplicate_vertex(int i, int j) {
  return Error(Error::Kind::DuplicateVertex,
               "DuplicateVertex(" + std::to_string(i) + "," + std::to_string(j) + ")");
}
inline Error degenerate_spike(int i) {
  return Error(Error::Kind::DegenerateSpike, "DegenerateSpike(" + std::to_string(i) + ")");
}
inline Error collinear_vertex(int i) {
  return Error(Error::Kind::CollinearVertex, "CollinearVertex(" + std::to_string(i) + ")");
}
inline Error missing_boundary_edge(int i) {
  return Error(Error::Kind::MissingBoundaryEdge,
               "MissingBoundaryEdge(" + std::to_string(i) + ")");
}
inline Error internal_inconsistency(const std::string& what) {
  return Error(Error::Kind::InternalInconsistency, "InternalInconsistency: " + what);
}

}  // namespace compatri
