#pragma once

#include <stdexcept>
#include <string>

namespace grundy {

/// Invalid caller input: out-of-range vertex, malformed file, bad parameters.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A proven invariant failed; indicates a bug in this library, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace grundy
