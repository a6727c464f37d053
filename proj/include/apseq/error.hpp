#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace apseq {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range arguments (negative binomial arguments, bad text, ...).
class input_error : public error {
public:
    using error::error;
};

/// The sequence prefix is too short for the requested operation.
class insufficient_data : public error {
public:
    using error::error;
};

/// No order h <= h_max is consistent with the prefix.
class not_an_ap : public error {
public:
    not_an_ap(std::size_t max_order, const std::string& what)
        : error(what), max_order_(max_order) {}
    std::size_t max_order() const noexcept { return max_order_; }

private:
    std::size_t max_order_;
};

/// The horizon does not contain enough windows to decide.
class inconclusive : public error {
public:
    using error::error;
};

/// The requested representation does not exist for this element kind.
class unsupported_form : public error {
public:
    using error::error;
};

/// A theorem hypothesis does not hold on the supplied instance.
class hypothesis_violation : public error {
public:
    hypothesis_violation(std::vector<std::string> failed, const std::string& what)
        : error(what), failed_(std::move(failed)) {}
    explicit hypothesis_violation(const std::string& what) : error(what), failed_{what} {}
    const std::vector<std::string>& failed() const noexcept { return failed_; }

private:
    std::vector<std::string> failed_;
};

/// A sampled instance refutes the claim; witness describes it.
class counterexample : public error {
public:
    counterexample(std::string witness, const std::string& what) : error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// An operation was called outside its documented precondition.
class precondition_failure : public error {
public:
    using error::error;
};

/// Two routes that must agree did not. Indicates a bug or a bad tolerance.
class internal_consistency : public error {
public:
    using error::error;
};

}  // namespace apseq
