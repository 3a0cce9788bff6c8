#pragma once

#include <stdexcept>
#include <string>

namespace curskel {

/// Thrown when the iterative SVD scheme fails to settle within its sweep budget.
class svd_convergence_error : public std::runtime_error {
public:
    explicit svd_convergence_error(const std::string& what)
        : std::runtime_error(what) {}
};

/// Thrown when an enumeration or densification exceeds its configured budget.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace curskel
