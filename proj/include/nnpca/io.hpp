#pragma once

#include <string>
#include <vector>

#include "nnpca/common.hpp"

namespace nnpca {

// Shortest round-trip decimal form of x (std::to_chars); locale-free, so
// emitted files are byte-deterministic.
std::string format_double(double x);

// Plain-text matrix exchange format: a header line with n, then n lines of n
// space-separated decimals.
void write_matrix_file(const std::string& path, const Mat& m);

// Reads the format above; rejects asymmetry beyond 1e-9 (absolute) and
// symmetrizes what remains.
Mat read_matrix_file(const std::string& path);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Minimal self-contained vector plots.
enum class SeriesKind { line, bars, error_bars };

struct PlotSeries {
    SeriesKind kind = SeriesKind::line;
    std::string label;
    std::string color = "#1f6f8b";
    std::vector<double> x, y;
    std::vector<double> yerr;  // only read for error_bars
};

struct PlotPanel {
    std::string title, xlabel, ylabel;
    bool logx = false, logy = false;
    std::vector<PlotSeries> series;
};

// Panels are stacked vertically in one SVG file.
void write_svg_plot(const std::string& path, const std::vector<PlotPanel>& panels);

} // namespace nnpca
