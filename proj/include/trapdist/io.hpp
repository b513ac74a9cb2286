#ifndef TRAPDIST_IO_HPP
#define TRAPDIST_IO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trapdist {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest-form rendering with 17 significant digits, always with '.' as
// the decimal separator regardless of the global locale.
std::string format_real(double value);

// Empty string for nullopt.
std::string format_real(std::optional<double> value);

// Writes `contents` to a sibling temporary file and renames it over `path`.
// Throws IoError on failure.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace trapdist

#endif  // TRAPDIST_IO_HPP
