#ifndef THZMODES_SVG_HPP
#define THZMODES_SVG_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace thzmodes::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 860;
    int height = 560;
};

/// Minimal deterministic line chart: fixed canvas, axes with tick labels,
/// one polyline per series, legend from the series labels.  The output is a
/// pure function of the inputs, so identical data gives identical bytes.
void write_line_chart(std::ostream& out, const ChartSpec& spec,
                      const std::vector<Series>& series);

} // namespace thzmodes::svg

#endif
