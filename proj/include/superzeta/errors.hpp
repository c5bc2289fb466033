#pragma once

#include <stdexcept>
#include <string>

namespace superzeta {

// Input outside the mathematical domain of an operation (forbidden point,
// branch cut hit, inadmissible z).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested at (or too close to) a pole of the continued object.
class pole_error : public domain_error {
public:
    explicit pole_error(const std::string& what) : domain_error(what) {}
};

// Requested point lies outside the convergence region of a series or integral
// and no continuation path is available.
class convergence_error : public domain_error {
public:
    explicit convergence_error(const std::string& what) : domain_error(what) {}
};

// A numeric routine could not meet the accuracy contract; carries the
// achieved error estimate in the message.
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superzeta
