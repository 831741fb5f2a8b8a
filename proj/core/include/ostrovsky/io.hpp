#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ostrovsky/spectra.hpp"

namespace ostrovsky::io {

/// Shortest round-trippable decimal representation ("%.17g" trimmed).
std::string format_double(double x);

/// CSV with a header row, LF line endings, UTF-8. Deterministic for fixed
/// input; no timestamps or environment data.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text(const std::filesystem::path& path, const std::string& text);

/// Static SVG portrait of a pseudospectrum field: log10(sigma_min) cells on a
/// fixed 10-step palette, with vertical guide lines at +-strip.
std::string pseudospectrum_svg(const spectra::PseudospectrumField& field, double strip);

}  // namespace ostrovsky::io
