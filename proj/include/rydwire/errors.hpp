#pragma once

#include <stdexcept>
#include <string>

namespace rydwire {

// Bad or inconsistent user input (lengths, ranges, malformed files).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds a hard enumeration/simulation cap.
class size_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Problem falls outside the encodable class (e.g. QUBO with J < 0).
class unsupported_class_error : public input_error {
public:
    using input_error::input_error;
};

// Geometric routing could not satisfy the spacing constraints.
class embedding_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative numerics failed to converge.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rydwire
