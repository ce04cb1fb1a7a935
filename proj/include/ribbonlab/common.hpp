#pragma once

// Shared scalar type, error codes and check-report plumbing used by every
// module of the library.

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ribbonlab {

using Complex = std::complex<double>;

// Absolute tolerance used by verification checks unless overridden.
inline constexpr double kDefaultTol = 1e-9;
// Radius used when clustering numerically coincident eigenvalues.
inline constexpr double kDefaultClusterRadius = 1e-7;
// Seed for every randomized routine; fixed so reports are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0x5eedf00dULL;

enum class ErrorKind {
  Parse,            // malformed input file / schema violation
  BadParams,        // invalid catalog or CLI parameters
  SingularBlock,    // a diagonal block has no inverse
  ClusterAmbiguity, // eigenvalue clusters too close to separate reliably
  ZeroEigenvalue,   // square root requested across a zero eigenvalue
  NotClosable,      // a doubled-model block is not invertible
  MuZero,           // q - 1/q vanishes, BMW normalisation undefined
  NotEnhanced,      // partial trace of the weighted operator is not scalar
  NonInvertibleDrinfeld, // Drinfeld operator pair fails to invert
  DimensionMismatch,     // a subspace does not have the expected dimension
  ZeroUnknot,       // one-strand normalisation value vanishes
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::ClusterAmbiguity: return "ClusterAmbiguity";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorKind::NotClosable: return "NotClosable";
    case ErrorKind::MuZero: return "MuZero";
    case ErrorKind::NotEnhanced: return "NotEnhanced";
    case ErrorKind::NonInvertibleDrinfeld: return "NonInvertibleDrinfeld";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroUnknot: return "ZeroUnknot";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Result of one verification check.  `residual` is the max-absolute-entry
// deviation normalised by the magnitude of the operands, so `pass` means
// `residual < tol`.  On failure `witness` localises the worst entry.
struct CheckReport {
  std::string check;
  bool pass = false;
  double residual = 0.0;
  std::optional<std::string> witness;
};

// Knobs shared by the CLI and the library entry points.
struct RunConfig {
  double tol = kDefaultTol;
  double cluster_radius = kDefaultClusterRadius;
  std::uint64_t seed = kDefaultSeed;
};

}  // namespace ribbonlab
