#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convexia {

/// Malformed graph or permutation text. `offset()` is the byte offset of the
/// first offending character (or line start for line-oriented formats).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A vertex index outside 0..n-1, or a size outside a supported range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Input outside the domain of an algorithm (non-tree passed to a tree
/// algorithm, graph not in the recognized class, adjacent pair where a
/// nonadjacent one is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exponential oracle was asked to run beyond its configured cap.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::size_t cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

}  // namespace convexia
