#ifndef PERISUM_ERRORS_HPP
#define PERISUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace perisum {

// Base class for everything the CLI maps to an input error (exit code 1).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not conform to a grammar; offset is the byte position of
// the first offending character.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Reduction preconditions, each named after the hypothesis it enforces.
class NotRationalZeros : public InputError {
public:
    NotRationalZeros() : InputError("denominator does not split into rational linear factors") {}
};

class NotSimpleZeros : public InputError {
public:
    NotSimpleZeros() : InputError("denominator has a repeated zero") {}
};

class DivergentSum : public InputError {
public:
    DivergentSum() : InputError("degree of numerator must be at most degree of denominator minus 2") {}
};

class PoleAtIndex : public InputError {
public:
    explicit PoleAtIndex(long n)
        : InputError("denominator vanishes at n = " + std::to_string(n)), index_(n) {}
    long index() const { return index_; }

private:
    long index_;
};

} // namespace perisum

#endif
