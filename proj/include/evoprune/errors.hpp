// Copyright (c) 2026 evoprune contributors
// SPDX-License-Identifier: Apache-2.0
//
// Exception hierarchy shared by all modules. The CLI maps these onto
// process exit codes (usage 2, data/format 3, numerical 4).

#pragma once

#include <stdexcept>
#include <string>

namespace evoprune {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad CLI flags or malformed user-supplied configuration.
struct UsageError : Error {
    using Error::Error;
};

// Bad input data: token files, checkpoints, database directories.
struct DataError : Error {
    using Error::Error;
};

struct FormatError : DataError {
    using DataError::DataError;
};

struct CheckpointError : DataError {
    using DataError::DataError;
};

struct IntegrityError : DataError {
    using DataError::DataError;
};

// Shape or index violations on in-memory objects.
struct ShapeError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

// Numerical failures: singular factorizations, diverged training,
// infeasible mutations.
struct NumericalError : Error {
    using Error::Error;
};

struct SingularMatrixError : NumericalError {
    using NumericalError::NumericalError;
};

struct DivergenceError : NumericalError {
    using NumericalError::NumericalError;
};

struct InfeasibleMutationError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace evoprune
