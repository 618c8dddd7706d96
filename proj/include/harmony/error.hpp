#pragma once

#include <stdexcept>
#include <string>

namespace harmony {

// Base of every error raised by the library. Catch this to handle all of them.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear algebra
class NonConvergence : public Error { using Error::Error; };
class NotHermitian : public Error { using Error::Error; };
class NotPSD : public Error { using Error::Error; };
class DimensionError : public Error { using Error::Error; };

// State construction and validation
class ValidationError : public Error { using Error::Error; };
class InvalidDistribution : public Error { using Error::Error; };
class InvalidRank : public Error { using Error::Error; };
class InvalidSubset : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };

// Measures
class ImaginaryResidue : public Error { using Error::Error; };
class SpectrumViolation : public Error { using Error::Error; };
class InvalidSpectrum : public Error { using Error::Error; };
class NotPure : public Error { using Error::Error; };

// Search configuration and file parsing
class ConfigError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

}  // namespace harmony
