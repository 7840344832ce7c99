#pragma once

#include <stdexcept>
#include <string>

namespace loewner {

/// Invalid arguments or configuration (empty multiset, m <= 0, malformed SE spec, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File system or codec failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric precondition violated (log of a non-SPD matrix, power of a non-PSD matrix).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace loewner
