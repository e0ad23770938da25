#pragma once

#include <stdexcept>
#include <string>

namespace syz {

enum class ErrorKind {
  NotFound,      // unknown id, unknown example name
  Topology,      // operation undefined for this topology
  Presentation,  // overlapping cuts, cut through a singular point, bad chart
  Placement,     // seam singularity off the seam, point outside chart
  Domain,        // non-positive area, zero coordinate, bad parameter
  Geometry,      // unbounded or degenerate polytope, intersecting leaves
  Truncation,    // inverse power series requested without a truncation order
  Path,          // tangential or repeated wall crossing
  Invariant,     // stored data violates a structural invariant
  Input,         // malformed file or request
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace syz
