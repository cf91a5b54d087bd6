#include "amp/barcode.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace amp {

static constexpr double kInf = std::numeric_limits<double>::infinity();

double bar_length(const Bar& b) { return b.death - b.birth; }

std::vector<double> sorted_lengths(const Barcode& bc) {
    std::vector<double> out;
    out.reserve(bc.size());
    for (const Bar& b : bc) out.push_back(bar_length(b));
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

int hilbert_function(const Barcode& bc, double t) {
    int n = 0;
    for (const Bar& b : bc)
        if (b.birth <= t && t < b.death) ++n;
    return n;
}

int rank_invariant(const Barcode& bc, double s, double q) {
    int n = 0;
    for (const Bar& b : bc)
        if (b.birth <= s && q <= b.death) ++n;
    return n;
}

Barcode parse_barcode(std::istream& in) {
    Barcode bc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string btok, dtok, extra;
        if (!(ls >> btok)) continue;  // blank line
        if (!(ls >> dtok) || (ls >> extra))
            throw std::runtime_error("barcode parse error at line " + std::to_string(lineno) +
                                     ": expected 'birth death'");
        try {
            Bar b;
            b.birth = std::stod(btok);
            b.death = (dtok == "inf") ? kInf : std::stod(dtok);
            if (!(b.birth <= b.death))
                throw std::runtime_error("birth > death");
            bc.push_back(b);
        } catch (const std::exception& e) {
            throw std::runtime_error("barcode parse error at line " + std::to_string(lineno) +
                                     ": " + e.what());
        }
    }
    return bc;
}

Barcode parse_barcode_string(const std::string& text) {
    std::istringstream in(text);
    return parse_barcode(in);
}

Barcode load_barcode(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open barcode file: " + path);
    return parse_barcode(in);
}

std::string format_barcode(const Barcode& bc) {
    std::ostringstream out;
    out.precision(12);
    for (const Bar& b : bc) {
        out << b.birth << '\t';
        if (std::isinf(b.death))
            out << "inf";
        else
            out << b.death;
        out << '\n';
    }
    return out.str();
}

}  // namespace amp
