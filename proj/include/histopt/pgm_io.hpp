#pragma once

#include <string>

#include "histopt/image.hpp"

namespace histopt {

enum class PgmFormat { P2, P5 };  // ASCII / binary

/// Parses a PGM file, either flavor, maxval up to 255. Header comments
/// (# to end of line) are skipped; whitespace is free-form.
GrayImage readPgm(const std::string& path);

/// Writes a maxval-255 PGM. P5 payload is exactly width*height bytes.
void writePgm(const GrayImage& image, const std::string& path,
              PgmFormat format = PgmFormat::P5);

}  // namespace histopt
