#pragma once

#include <stdexcept>
#include <string>

namespace cornell {

/// Precondition violated by a caller-supplied argument.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A floating-point product left the representable range.
class OverflowError : public std::overflow_error {
public:
    OverflowError(const std::string& what, int index)
        : std::overflow_error(what), index_(index) {}

    /// Index at which the overflow occurred.
    int index() const noexcept { return index_; }

private:
    int index_;
};

/// An eigenvalue search could not bracket or converge.
class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or ill-conditioned intermediate quantity.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cornell
