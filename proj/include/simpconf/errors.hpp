/**
 * Error types shared across the simpconf library.
 *
 * The CLI maps these onto process exit codes: SchemaError -> 2,
 * PreconditionError -> 3, IoError -> 4, BudgetError -> 5.
 */

#ifndef SIMPCONF_ERRORS_HPP
#define SIMPCONF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simpconf {

/** Base class for all simpconf errors. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Malformed input: bad labels, bad documents, invalid arguments. */
struct SchemaError : Error {
    using Error::Error;
};

/**
 * A mathematical precondition failed (not a subcomplex, non-regular
 * quotient, ...). The message names a witness where one exists.
 */
struct PreconditionError : Error {
    using Error::Error;
};

/** An enumeration exceeded the simplex budget. */
struct BudgetError : Error {
    using Error::Error;
};

/** File system failure. */
struct IoError : Error {
    using Error::Error;
};

/**
 * Safety cap on the number of simplices any single construction may
 * materialize. Reads SIMPCONF_MAX_SIMPLICES from the environment once;
 * defaults to 5,000,000.
 */
std::size_t max_simplex_budget();

/** Throws BudgetError if count exceeds the budget. */
void check_budget(std::size_t count, const char* what);

}  // namespace simpconf

#endif
