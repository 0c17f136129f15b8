#pragma once

#include <stdexcept>
#include <string>

namespace parinv {

// A label or row that is not part of the finite table catalogue.
class CatalogueError : public std::runtime_error {
public:
    explicit CatalogueError(const std::string& what) : std::runtime_error(what) {}
};

// A series was read beyond its known precision, or a basis was requested
// with too few coefficients to be determined.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// An exact computation produced contradictory results (overdetermined linear
// system failed, two independent methods disagree).  Always a bug or a broken
// precondition, never user input.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// kappa^{-1} requested for an index outside the image of kappa.
class NotInImageError : public std::runtime_error {
public:
    explicit NotInImageError(const std::string& what) : std::runtime_error(what) {}
};

// Input combination that cannot occur (xi_t at even residue characteristic,
// sigma_S = St for a non-discrete-series sigma, ...).
class InconsistentInputError : public std::runtime_error {
public:
    explicit InconsistentInputError(const std::string& what) : std::runtime_error(what) {}
};

// A result left the requested coefficient ring (irrational scale factor in
// rational-only mode).
class ModeError : public std::runtime_error {
public:
    explicit ModeError(const std::string& what) : std::runtime_error(what) {}
};

// Weight outside the supported (even, >= 2) range of the dimension formulas.
class UnsupportedWeightError : public std::runtime_error {
public:
    explicit UnsupportedWeightError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace parinv
