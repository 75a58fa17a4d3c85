#pragma once

#include <stdexcept>
#include <string>

namespace sierp {

/// Malformed or out-of-range input (bad word, bad spec string, bad file).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource limit (vertex budget) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction or checker was handed an input that violates its hypothesis.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sierp
