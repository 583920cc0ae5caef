#pragma once

#include <stdexcept>
#include <string>

namespace p1n {

/// Thrown when matrix/grid dimensions do not match an operation's requirements.
class shape_error : public std::runtime_error {
public:
    explicit shape_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a numeric precondition (Hermiticity, anti-Hermiticity,
/// commuting-family compatibility, ...) is violated beyond tolerance.
class contract_error : public std::runtime_error {
public:
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an eigenvalue that must lie on the half-integer spin grid
/// does not, or when block dimensions fail to add up.
class classification_error : public std::runtime_error {
public:
    explicit classification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a matrix-set construction (e.g. the repair search for the
/// 15x15 set) cannot be completed consistently.
class construction_error : public std::runtime_error {
public:
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a request would exceed a hard resource cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace p1n
