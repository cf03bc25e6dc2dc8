#pragma once

#include <stdexcept>
#include <string>

namespace cspp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Values and domains.
struct CarrierViolation : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };

// Modalities and payloads.
struct ArityMismatch : Error { using Error::Error; };
struct PayloadSchemaError : Error { using Error::Error; };

// Graphs and files.
struct ParseError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct DanglingStateRef : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Instance catalog.
struct UnknownInstance : Error { using Error::Error; };
struct ParamRange : Error { using Error::Error; };
struct UnknownExample : Error { using Error::Error; };

// Verification.
struct InstanceMismatch : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };
struct CombinatorialBlowup : Error { using Error::Error; };
struct NotAWitness : Error { using Error::Error; };

} // namespace cspp
