#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ostrovsky/io.hpp"
#include "ostrovsky/spectral_ops.hpp"
#include "ostrovsky/waves.hpp"

using namespace ostrovsky;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("format_double round-trips") {
    for (double x : {0.0, 1.0, -0.1, pi, 1e-17, 6.02e23, -1.0 / 3.0}) {
        CHECK(std::stod(io::format_double(x)) == x);
    }
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("csv writer: reruns are byte-identical, line endings are LF") {
    auto dir = std::filesystem::temp_directory_path() / "ostrovsky_io_test";
    std::filesystem::create_directories(dir);
    auto p1 = dir / "a.csv";
    auto p2 = dir / "b.csv";
    std::vector<std::string> header{"z", "u"};
    std::vector<std::vector<double>> rows{{0.0, -0.5483}, {0.1, pi}, {0.2, 1e-30}};
    io::write_csv(p1, header, rows);
    io::write_csv(p2, header, rows);
    auto s1 = slurp(p1);
    CHECK(s1 == slurp(p2));
    CHECK(s1.find('\r') == std::string::npos);
    CHECK(s1.rfind("z,u\n", 0) == 0);
    CHECK(s1.back() == '\n');

    CHECK_THROWS(io::write_csv(p1, header, {{1.0, 2.0, 3.0}}));  // width mismatch
    std::filesystem::remove_all(dir);
}

TEST_CASE("svg portrait is deterministic and carries the guide lines") {
    spectra::PseudospectrumField f;
    f.N = 8;
    f.re_grid = {-0.8, -0.4, 0.0, 0.4, 0.8};
    f.im_grid = {-1.0, 0.0, 1.0};
    f.sigma_min = Eigen::MatrixXd::Zero(3, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) f.sigma_min(i, j) = std::pow(10.0, -0.5 * (i + j));
    auto svg = io::pseudospectrum_svg(f, pi / 6.0);
    CHECK(svg == io::pseudospectrum_svg(f, pi / 6.0));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t dashes = 0, pos = 0;
    while ((pos = svg.find("stroke-dasharray", pos)) != std::string::npos) {
        ++dashes;
        ++pos;
    }
    CHECK(dashes == 2);
}
