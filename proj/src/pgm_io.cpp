#include "histopt/pgm_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace histopt {

namespace {

// Reads the next header token, skipping whitespace and # comments.
std::string nextToken(std::istream& in) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (std::isspace(ch)) {
      ch = in.get();
    } else {
      break;
    }
  }
  if (ch == EOF) return {};
  std::string token(1, static_cast<char>(ch));
  ch = in.get();
  while (ch != EOF && !std::isspace(ch)) {
    token.push_back(static_cast<char>(ch));
    ch = in.get();
  }
  // The single whitespace delimiter after the token is consumed, which is
  // exactly what the binary raster start requires.
  return token;
}

long parseHeaderNumber(std::istream& in, const std::string& what) {
  const std::string token = nextToken(in);
  if (token.empty()) throw std::runtime_error("malformed header: missing " + what);
  try {
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error("malformed header: bad " + what + " '" + token + "'");
  }
}

}  // namespace

GrayImage readPgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  const std::string magic = nextToken(in);
  const bool binary = magic == "P5";
  if (!binary && magic != "P2") {
    throw std::runtime_error("malformed magic '" + magic + "' (want P2 or P5)");
  }

  const long width = parseHeaderNumber(in, "width");
  const long height = parseHeaderNumber(in, "height");
  const long maxval = parseHeaderNumber(in, "maxval");
  if (width <= 0 || height <= 0) {
    throw std::runtime_error("malformed header: non-positive dimensions");
  }
  if (maxval <= 0 || maxval > 255) {
    throw std::runtime_error("unsupported maxval " + std::to_string(maxval) +
                             " (must be in [1, 255])");
  }

  PixelMatrix pixels(height, width);
  const std::streamsize count = static_cast<std::streamsize>(width) * height;
  if (binary) {
    in.read(reinterpret_cast<char*>(pixels.data()), count);
    if (in.gcount() != count) throw std::runtime_error("truncated pixel data");
  } else {
    std::uint8_t* dst = pixels.data();
    for (std::streamsize i = 0; i < count; ++i) {
      long value = 0;
      if (!(in >> value)) throw std::runtime_error("truncated pixel data");
      if (value < 0 || value > maxval) {
        throw std::runtime_error("pixel value out of range: " +
                                 std::to_string(value));
      }
      dst[i] = static_cast<std::uint8_t>(value);
    }
  }
  return GrayImage(std::move(pixels));
}

void writePgm(const GrayImage& image, const std::string& path,
              PgmFormat format) {
  if (path.empty()) throw std::invalid_argument("empty output path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);

  out << (format == PgmFormat::P5 ? "P5" : "P2") << "\n"
      << image.width() << " " << image.height() << "\n255\n";

  if (format == PgmFormat::P5) {
    out.write(reinterpret_cast<const char*>(image.data()),
              static_cast<std::streamsize>(image.pixelCount()));
  } else {
    const std::uint8_t* src = image.data();
    for (Eigen::Index i = 0; i < image.pixelCount(); ++i) {
      out << static_cast<int>(src[i]);
      out << (((i + 1) % 16 == 0 || i + 1 == image.pixelCount()) ? '\n' : ' ');
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace histopt
