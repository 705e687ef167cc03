#ifndef UNITRED_ERRORS_HPP
#define UNITRED_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unitred {

// Malformed or out-of-range input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// The trace form of the zero element is degenerate; distinct from "indefinite".
class SingularForm : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// An enumeration hit its node or result cap (CLI exit code 3).
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes, std::uint64_t results, std::string bound)
        : std::runtime_error(what), nodes_(nodes), results_(results), bound_(std::move(bound)) {}

    std::uint64_t nodes() const noexcept { return nodes_; }
    std::uint64_t results() const noexcept { return results_; }
    const std::string& bound() const noexcept { return bound_; }

   private:
    std::uint64_t nodes_;
    std::uint64_t results_;
    std::string bound_;
};

// A certificate check that must hold did not (CLI exit code 1).
class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace unitred

#endif
