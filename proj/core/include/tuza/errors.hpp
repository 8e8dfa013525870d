#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace tuza {

/// Malformed caller input: out-of-range vertex, self-loop, bad text format.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A graph does not belong to the requested class. Carries the vertex that
/// blocked recognition when one exists.
class ClassMembershipError : public std::runtime_error {
public:
    ClassMembershipError(const std::string& what, std::optional<int> witness = std::nullopt)
        : std::runtime_error(what), witness_(witness)
    {
    }

    [[nodiscard]] std::optional<int> witness() const noexcept { return witness_; }

private:
    std::optional<int> witness_;
};

/// An operation was called on a representation that violates its contract
/// (unnormalized threshold representation, unbalanced co-chain, ...).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An exact answer was required but the search hit its node budget.
class InexactError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tuza
