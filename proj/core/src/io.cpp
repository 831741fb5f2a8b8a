#include "ostrovsky/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ostrovsky::io {

namespace {

// dark-to-light 10-step palette for log10(sigma_min)
const char* const palette[10] = {
    "#08106c", "#232ea8", "#3b4cc0", "#6788ee", "#9abbff",
    "#c9d7f0", "#edd1c2", "#f7a889", "#e26952", "#b40426",
};

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF on every platform
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ostringstream s;
    for (std::size_t j = 0; j < header.size(); ++j) {
        if (j) s << ',';
        s << header[j];
    }
    s << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("CSV row width does not match the header");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s << ',';
            s << format_double(row[j]);
        }
        s << '\n';
    }
    write_text(path, s.str());
}

std::string pseudospectrum_svg(const spectra::PseudospectrumField& field, double strip) {
    const int nre = static_cast<int>(field.re_grid.size());
    const int nim = static_cast<int>(field.im_grid.size());
    if (nre < 2 || nim < 2) throw std::invalid_argument("field too small to render");

    const double mleft = 60, mtop = 20, pw = 520, ph = 420;
    const double re0 = field.re_grid.front(), re1 = field.re_grid.back();
    const double im0 = field.im_grid.front(), im1 = field.im_grid.back();
    auto xpix = [&](double re) { return mleft + (re - re0) / (re1 - re0) * pw; };
    auto ypix = [&](double im) { return mtop + (im1 - im) / (im1 - im0) * ph; };

    double lmin = 1e300, lmax = -1e300;
    for (int r = 0; r < nim; ++r)
        for (int c = 0; c < nre; ++c) {
            double v = std::log10(std::max(field.sigma_min(r, c), 1e-16));
            lmin = std::min(lmin, v);
            lmax = std::max(lmax, v);
        }
    if (lmax <= lmin) lmax = lmin + 1.0;

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
         "viewBox=\"0 0 640 480\">\n"
      << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    const double cw = pw / (nre - 1), chh = ph / (nim - 1);
    for (int r = 0; r < nim; ++r)
        for (int c = 0; c < nre; ++c) {
            double v = std::log10(std::max(field.sigma_min(r, c), 1e-16));
            int bin = static_cast<int>((v - lmin) / (lmax - lmin) * 10.0);
            bin = std::clamp(bin, 0, 9);
            s << "<rect x=\"" << format_double(xpix(field.re_grid[static_cast<std::size_t>(c)]) - cw / 2)
              << "\" y=\"" << format_double(ypix(field.im_grid[static_cast<std::size_t>(r)]) - chh / 2)
              << "\" width=\"" << format_double(cw) << "\" height=\"" << format_double(chh)
              << "\" fill=\"" << palette[bin] << "\"/>\n";
        }
    for (double g : {-strip, strip}) {
        if (g < re0 || g > re1) continue;
        s << "<line x1=\"" << format_double(xpix(g)) << "\" y1=\"" << format_double(mtop)
          << "\" x2=\"" << format_double(xpix(g)) << "\" y2=\"" << format_double(mtop + ph)
          << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
    }
    s << "<rect x=\"" << format_double(mleft) << "\" y=\"" << format_double(mtop)
      << "\" width=\"" << format_double(pw) << "\" height=\"" << format_double(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    s << "<text x=\"" << format_double(mleft + pw / 2) << "\" y=\"470\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">Re &#955;</text>\n";
    s << "<text x=\"20\" y=\"" << format_double(mtop + ph / 2) << "\" "
         "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
         "transform=\"rotate(-90 20 " << format_double(mtop + ph / 2) << ")\">Im &#955;</text>\n";
    s << "</svg>\n";
    return s.str();
}

}  // namespace ostrovsky::io
