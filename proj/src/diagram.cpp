#include "lorenz/diagram.hpp"

#include <string>

namespace lorenz {

namespace {

// Character column of strand position i (0-based).
std::size_t col(int i) { return 4 * static_cast<std::size_t>(i); }

std::string vertical_row(int strands) {
    std::string row(col(strands - 1) + 1, ' ');
    for (int i = 0; i < strands; ++i) row[col(i)] = '|';
    return row;
}

}  // namespace

std::string render_braid_text(const BraidWord& b) {
    std::string out = "strands: " + std::to_string(b.strands()) + "\n";
    out += "crossings: " + std::to_string(b.size()) + "\n";
    out += "word: " + (b.size() == 0 ? std::string("(empty)") : b.str()) + "\n";

    const std::string verticals = vertical_row(b.strands());
    out += verticals + "\n";
    for (const Crossing& cr : b.crossings()) {
        const std::size_t c = col(cr.index - 1);
        std::string top = verticals, mid = verticals, bottom = verticals;
        top[c] = ' ';
        top[c + 4] = ' ';
        top[c + 1] = '\\';
        top[c + 3] = '/';
        mid[c] = ' ';
        mid[c + 4] = ' ';
        mid[c + 2] = (cr.sign > 0) ? '+' : '-';
        bottom[c] = ' ';
        bottom[c + 4] = ' ';
        bottom[c + 1] = '/';
        bottom[c + 3] = '\\';
        out += top + "\n" + mid + "\n" + bottom + "\n" + verticals + "\n";
    }
    return out;
}

std::string render_braid_svg(const BraidWord& b) {
    // Integer-only layout: strand i sits at x = 20 + 40 i, each crossing
    // occupies a 40-unit row. Strand polylines run straight except through
    // their own crossing rows; the under-strand leaves a 16-unit gap.
    const int strands = b.strands();
    const int rows = static_cast<int>(b.size());
    const int width = 40 * strands;
    const int height = 40 * (rows + 1);
    auto x_of = [](int i) { return 20 + 40 * i; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<title>braid on " + std::to_string(strands) + " strands: " +
           (b.size() == 0 ? std::string("(empty)") : b.str()) + "</title>\n";
    svg += "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";

    auto line = [](int x1, int y1, int x2, int y2) {
        return "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) +
               "\" x2=\"" + std::to_string(x2) + "\" y2=\"" + std::to_string(y2) +
               "\"/>\n";
    };

    // Lead-in verticals.
    for (int i = 0; i < strands; ++i) svg += line(x_of(i), 0, x_of(i), 20);

    int y = 20;
    for (const Crossing& cr : b.crossings()) {
        const int c = cr.index - 1;
        for (int i = 0; i < strands; ++i) {
            if (i == c || i == c + 1) continue;
            svg += line(x_of(i), y, x_of(i), y + 40);
        }
        // Positive generator: the strand entering at position c crosses over.
        const int xl = x_of(c), xr = x_of(c + 1);
        svg += "<g class=\"crossing\" data-index=\"" + std::to_string(cr.index) +
               "\" data-sign=\"" + (cr.sign > 0 ? std::string("+1") : std::string("-1")) +
               "\">\n";
        if (cr.sign > 0) {
            svg += line(xl, y, xr, y + 40);                   // over strand
            svg += line(xr, y, xr - 12, y + 12);              // under strand, broken
            svg += line(xl + 12, y + 28, xl, y + 40);
        } else {
            svg += line(xr, y, xl, y + 40);                   // over strand
            svg += line(xl, y, xl + 12, y + 12);              // under strand, broken
            svg += line(xr - 12, y + 28, xr, y + 40);
        }
        svg += "</g>\n";
        y += 40;
    }

    // Lead-out verticals.
    for (int i = 0; i < strands; ++i) svg += line(x_of(i), y, x_of(i), y + 20);

    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace lorenz
