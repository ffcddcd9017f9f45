#pragma once

#include <filesystem>
#include <stdexcept>

#include <Eigen/Core>

#include "elmono/ntd.hpp"

namespace elmono::cli {

/// Binary dense matrix file:
///   "EMNT" | version u32 | rows u64 | cols u64 | symmetric u8 | provenance[32]
///   | rows*cols f64, row-major.
/// All integers and floats little-endian.
inline constexpr std::uint32_t kMatrixFileVersion = 1;
inline constexpr std::size_t kMatrixHeaderBytes = 4 + 4 + 8 + 8 + 1 + 32;
inline constexpr double kSymmetryLoadTolerance = 1e-8;

class MatrixFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MatrixFile {
    Eigen::MatrixXd data;
    bool symmetric = false;
    Hash256 provenance{};
};

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

/// Validates magic, version, exact payload length and, for symmetric files,
/// max|A - A^T| <= 1e-8 max|A|.
MatrixFile read_matrix_file(const std::filesystem::path& path);

}  // namespace elmono::cli
