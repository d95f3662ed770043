#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadext {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Misuse of an operation: division by zero, mismatched fields, out-of-range
/// arguments. These indicate caller bugs, not data-dependent conditions.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Syntax or lowering failure while parsing an expression.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

enum class DegenerateKind {
    trivial_extension,        // y^2 = f (resp. y^2+y = f) splits; no extension at all
    constant_field_extension  // extension enlarges the constant field F_q
};

/// A would-be quadratic extension that is not a geometric quadratic extension.
struct DegenerateExtension : Error {
    DegenerateExtension(DegenerateKind k, const std::string& what) : Error(what), kind(k) {}
    DegenerateKind kind;
};

/// Some subset I of the generators yields a degenerate combined extension,
/// i.e. the K_i are not disjoint.  `subset_mask` has bit i-1 set iff i is in I.
struct NotDisjoint : Error {
    NotDisjoint(unsigned mask, DegenerateKind k, const std::string& what)
        : Error(what), subset_mask(mask), kind(k) {}
    unsigned subset_mask;
    DegenerateKind kind;
};

/// Internal consistency failure: a conjugate-product expansion left a
/// coefficient containing a generator monomial.  Must never fire.
struct ResidualMonomial : Error {
    explicit ResidualMonomial(const std::string& what) : Error(what) {}
};

}  // namespace quadext
