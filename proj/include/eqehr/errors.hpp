#pragma once

#include <stdexcept>
#include <string>

namespace eqehr {

/// A value that should have been rational turned out not to be
/// (e.g. a character inner product with a non-constant cyclotomic residue).
class NonRationalError : public std::runtime_error {
public:
    explicit NonRationalError(const std::string& what) : std::runtime_error(what) {}
};

/// A multiplicity that must be an integer came out fractional; signals an
/// inconsistent class function / character table pairing upstream.
class NonIntegralError : public std::runtime_error {
public:
    explicit NonIntegralError(const std::string& what) : std::runtime_error(what) {}
};

/// The polytope is not invariant (up to lattice translation) under the group.
class NotInvariantError : public std::runtime_error {
public:
    explicit NotInvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// A series that must terminate has nonzero trailing coefficients; the
/// assumed degree or period bound is wrong.
class NonTerminatingError : public std::runtime_error {
public:
    explicit NonTerminatingError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal two-route cross-check failed. Always a bug, never user error.
class CrossCheckError : public std::logic_error {
public:
    explicit CrossCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace eqehr
