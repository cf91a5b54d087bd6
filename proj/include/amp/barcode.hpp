#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amp {

/// Half-open interval [birth, death); death may be +infinity.
/// Zero-length bars are permitted and contribute 0 to every
/// length-based amplitude.
struct Bar {
    double birth = 0;
    double death = 0;

    bool operator==(const Bar&) const = default;
};

using Barcode = std::vector<Bar>;

double bar_length(const Bar& b);

/// Multiset of lengths in non-increasing order (infinite bars first).
std::vector<double> sorted_lengths(const Barcode& bc);

/// Pointwise dimension: number of bars with birth <= t < death.
int hilbert_function(const Barcode& bc, double t);

/// Bars alive throughout the closed window [s, q] (death treated as
/// attained). This is the classical rank invariant evaluated at (s, q).
int rank_invariant(const Barcode& bc, double s, double q);

/// Text format: one bar per line, "birth<TAB>death"; death may be the
/// literal token `inf`; `#` starts a comment line; whitespace-tolerant.
/// Parse errors report the 1-based line number.
Barcode parse_barcode(std::istream& in);
Barcode parse_barcode_string(const std::string& text);
Barcode load_barcode(const std::string& path);
std::string format_barcode(const Barcode& bc);

}  // namespace amp
