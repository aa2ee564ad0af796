#ifndef RNACD_ERRORS_HPP
#define RNACD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rnacd {

//! Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind { UnbalancedParens, IllegalCharacter, SyntaxError, OneDotInternal };

//! Malformed dot-bracket or tree text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, int position, char character = '\0');

    ParseErrorKind kind() const noexcept { return kind_; }
    int position() const noexcept { return position_; }
    char character() const noexcept { return character_; }

private:
    ParseErrorKind kind_;
    int position_;
    char character_;
};

class InvalidStructure : public Error {
public:
    using Error::Error;
};

class NotSaturated : public Error {
public:
    NotSaturated() : Error("tree is not saturated") {}
};

class NotFloral : public Error {
public:
    NotFloral() : Error("tree is not a P-unsaturated floral tree") {}
};

class NotFullFloral : public Error {
public:
    NotFullFloral() : Error("tree is not a P-unsaturated full floral tree") {}
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t sequence, int structure)
        : Error("sequence length " + std::to_string(sequence) + " differs from structure length " +
                std::to_string(structure)) {}
};

class TooLarge : public Error {
public:
    TooLarge(int n, int max_n)
        : Error("structure length " + std::to_string(n) + " exceeds brute-force limit " +
                std::to_string(max_n)),
          n_(n), max_n_(max_n) {}
    int n() const noexcept { return n_; }
    int max_n() const noexcept { return max_n_; }

private:
    int n_;
    int max_n_;
};

//! Raised by enumeration when more optimal structures exist than the caller allowed.
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(std::string count)
        : Error("number of optimal structures (" + count + ") exceeds the enumeration limit"),
          count_(std::move(count)) {}
    //! Decimal count of optimal structures; always greater than the limit.
    const std::string& count_lower_bound() const noexcept { return count_; }

private:
    std::string count_;
};

class NotBalanced : public Error {
public:
    using Error::Error;
};

class CasePreconditionUnmet : public Error {
public:
    using Error::Error;
};

//! A concrete check of the tagging algorithm failed on this input.
class PropertyViolated : public Error {
public:
    PropertyViolated(int property, int iteration, std::string witness)
        : Error("property " + std::to_string(property) + " violated at iteration " +
                std::to_string(iteration) + ": " + witness),
          property_(property), iteration_(iteration), witness_(std::move(witness)) {}
    int property() const noexcept { return property_; }
    int iteration() const noexcept { return iteration_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    int property_;
    int iteration_;
    std::string witness_;
};

} // namespace rnacd

#endif
