#pragma once

#include <stdexcept>
#include <string>

namespace starla {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input vector or state has the wrong number of entries.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument value was violated (non-finite entry, bad range, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Operation is not allowed in the current object state (e.g. stepping a finished episode).
class StateError : public Error {
public:
    using Error::Error;
};

/// Artifact file is truncated or malformed.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Artifact file was written by an incompatible format version.
class VersionError : public Error {
public:
    using Error::Error;
};

/// Campaign configuration is malformed; `what()` names the offending path and field.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A pipeline stage ran before the stage producing its input.
class PrerequisiteError : public Error {
public:
    using Error::Error;
};

/// Q-learning produced a non-finite loss.
class TrainingError : public Error {
public:
    using Error::Error;
};

} // namespace starla
