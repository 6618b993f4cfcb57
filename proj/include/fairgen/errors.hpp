// Copyright (C) 2026 The fairgen authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fairgen {

// Base for everything thrown by the library. The CLI maps subclasses to
// exit codes: validation-style errors -> 2, unavailable backend -> 3,
// numeric failures -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Attribute schema inconsistencies: unknown categories, missing phrases,
// shape mismatches between a token table and its schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Bad user input: malformed files, out-of-range config values.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A documented operation precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Prompt exceeds the encoder's maximum sequence length.
class SequenceLengthError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Unreadable or undecodable input files; message lists offending paths.
class IngestionError : public Error {
public:
    using Error::Error;
};

class BackendUnavailableError : public Error {
public:
    using Error::Error;
};

// Non-finite losses, failed matrix decompositions and the like.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace fairgen
