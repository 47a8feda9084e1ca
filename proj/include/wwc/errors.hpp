#pragma once

#include <stdexcept>

namespace wwc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violated an operation's precondition.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

/// A PSC vector has no recoverable phase (both projection sums vanish).
class DegenerateVectorError : public Error {
public:
    using Error::Error;
};

/// Circular mean of an antipodal pair is undefined.
class DegenerateMeanError : public Error {
public:
    using Error::Error;
};

/// A matched pair shows zero centroid displacement.
class NoMotionError : public Error {
public:
    using Error::Error;
};

/// Sample indices are not contiguous or timestamps go backwards.
class MalformedStreamError : public Error {
public:
    using Error::Error;
};

/// A count series carries no variance to fit.
class DegenerateSeriesError : public Error {
public:
    using Error::Error;
};

/// A count series is too short for the requested model orders.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Ratio denominator is not positive.
class UndefinedRatioError : public Error {
public:
    using Error::Error;
};

/// Configuration file or option could not be interpreted.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A record file is missing, truncated, or malformed.
class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace wwc
