/*
 * types.hpp
 *
 * Basic scalar types shared by every module.
 */

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupcent {

using Vertex = std::uint32_t;
using Weight = std::uint32_t;
using Distance = std::uint64_t;

/// Marker for "no path". Never a finite distance.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

using DistanceArray = std::vector<Distance>;
using Group = std::vector<Vertex>;

/// Malformed input or violated precondition on user-supplied data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some vertex cannot be reached from the group, so farness is undefined.
class DisconnectedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the configured evaluation budget.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string &what, std::uint64_t required)
        : std::runtime_error(what), required_(required) {}
    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

} // namespace groupcent
