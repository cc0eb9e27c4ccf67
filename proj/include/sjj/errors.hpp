#pragma once

#include <stdexcept>
#include <string>

namespace sjj {

// Input outside the mathematical domain of an operation (bad parameter,
// impossible detection event, empty search bracket).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to deliver a result within its budget
// (iteration cap, trajectory leaving the physical range).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sjj
