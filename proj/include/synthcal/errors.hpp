#pragma once

#include <stdexcept>
#include <string>

namespace synthcal {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// geometry
struct BehindCamera final : Error { using Error::Error; };
struct NonConvergent final : Error { using Error::Error; };
struct ParallelPlane final : Error { using Error::Error; };
struct NonOrthonormal final : Error { using Error::Error; };

// trajectory
struct DegenerateUp final : Error { using Error::Error; };

// patterns
struct InvalidSpec final : Error { using Error::Error; };
struct Exhausted final : Error { using Error::Error; };

// renderer / measurement
struct AllOutOfView final : Error { using Error::Error; };
struct TooFewPoints final : Error { using Error::Error; };

// calibration
struct Degenerate final : Error { using Error::Error; };
struct IllConditioned final : Error { using Error::Error; };
struct RacDegenerate final : Error { using Error::Error; };
struct NumericalFailure final : Error { using Error::Error; };
struct NoSharedFrames final : Error { using Error::Error; };

// metrics
struct ParallelRays final : Error { using Error::Error; };
struct FrameMismatch final : Error { using Error::Error; };
struct LengthMismatch final : Error { using Error::Error; };
struct ShapeMismatch final : Error { using Error::Error; };

// dataset io
struct IoError final : Error { using Error::Error; };
struct SchemaMismatch final : Error { using Error::Error; };
struct MissingFile final : Error { using Error::Error; };
struct CorruptJson final : Error { using Error::Error; };

}  // namespace synthcal
