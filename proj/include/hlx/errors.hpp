#pragma once

#include <stdexcept>
#include <string>

namespace hlx {

// Thrown when a projected diagram is not generic: a crossing sits on a
// segment endpoint, two projected segments overlap, or a sign magnitude
// falls below tolerance. Callers should perturb the input.
class DegenerateDiagram : public std::runtime_error {
public:
    explicit DegenerateDiagram(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a loop/surface intersection is not generic: a plane crossing
// lands near a polygon boundary, a segment lies in the surface plane, or
// the time coordinate vanishes at a piercing.
class DegeneratePiercing : public std::runtime_error {
public:
    explicit DegeneratePiercing(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document (missing field, wrong type, bad number).
class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hlx
