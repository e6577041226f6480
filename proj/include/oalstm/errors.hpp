#pragma once

#include <stdexcept>
#include <string>

namespace oalstm {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct GeometryError : Error { using Error::Error; };
struct AnnotationError : Error { using Error::Error; };
struct SamplingError : Error { using Error::Error; };
struct IngestionError : Error { using Error::Error; };
struct SpecError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

}  // namespace oalstm
