#include "amp/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace amp {

static constexpr double kInf = std::numeric_limits<double>::infinity();

bool approx_le(double a, double b) {
    if (a == b) return true;
    if (std::isinf(b) && b > 0) return true;
    if (std::isinf(a) && a > 0) return false;
    return a <= b + 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

bool approx_eq(double a, double b) {
    if (a == b) return true;
    if (std::isinf(a) || std::isinf(b)) return false;
    return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// ---------------------------------------------------------------------------
// Content

double Content::cell_weight(const GridGeometry& geo, std::size_t linear_idx) const {
    switch (kind) {
        case Kind::lebesgue:
            return geo.cell_volume(geo.unlinear(linear_idx));
        case Kind::counting:
            return 1.0;
        case Kind::custom:
            if (weights.size() != geo.vertex_count())
                throw std::invalid_argument("custom content does not match geometry");
            return weights[linear_idx];
    }
    return 0;
}

double vec_norm(const std::vector<double>& v, VecNorm n) {
    double r = 0;
    switch (n) {
        case VecNorm::l1:
            for (double x : v) r += std::fabs(x);
            return r;
        case VecNorm::l2:
            for (double x : v) r += x * x;
            return std::sqrt(r);
        case VecNorm::linf:
            for (double x : v) r = std::max(r, std::fabs(x));
            return r;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// AmplitudeSpec

AmplitudeSpec AmplitudeSpec::PNorm(double p) {
    if (!(p >= 1)) throw std::invalid_argument("pnorm: p must be in [1, inf]");
    AmplitudeSpec s;
    s.kind = Kind::pnorm;
    s.p = p;
    return s;
}
AmplitudeSpec AmplitudeSpec::TotPers() {
    AmplitudeSpec s;
    s.kind = Kind::totpers;
    return s;
}
AmplitudeSpec AmplitudeSpec::TropLen(int k) {
    if (k < 1) throw std::invalid_argument("troplen: k must be positive");
    AmplitudeSpec s;
    s.kind = Kind::troplen;
    s.k = k;
    return s;
}
AmplitudeSpec AmplitudeSpec::Magnitude() {
    AmplitudeSpec s;
    s.kind = Kind::magnitude;
    return s;
}
AmplitudeSpec AmplitudeSpec::Support() {
    AmplitudeSpec s;
    s.kind = Kind::support;
    return s;
}
AmplitudeSpec AmplitudeSpec::ShiftAmp(std::vector<double> v, VecNorm n) {
    bool some = false;
    for (double x : v) {
        if (x < 0) throw std::invalid_argument("shiftamp: direction must be nonnegative");
        some |= (x > 0);
    }
    if (v.empty() || !some) throw std::invalid_argument("shiftamp: direction must be nonzero");
    AmplitudeSpec s;
    s.kind = Kind::shiftamp;
    s.shift = std::move(v);
    s.norm = n;
    return s;
}
AmplitudeSpec AmplitudeSpec::MaxDim() {
    AmplitudeSpec s;
    s.kind = Kind::maxdim;
    return s;
}
AmplitudeSpec AmplitudeSpec::LpHilbert(double p, Content c) {
    if (!(p >= 1) || std::isinf(p))
        throw std::invalid_argument("lp_hilbert: p must be in [1, inf)");
    AmplitudeSpec s;
    s.kind = Kind::lp_hilbert;
    s.p = p;
    s.content = std::move(c);
    return s;
}

bool AmplitudeSpec::barcode_applicable() const {
    return kind != Kind::lp_hilbert && kind != Kind::maxdim;
}

bool AmplitudeSpec::grid_applicable() const {
    return kind == Kind::lp_hilbert || kind == Kind::maxdim || kind == Kind::support ||
           kind == Kind::shiftamp;
}

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

AmplitudeSpec AmplitudeSpec::parse(const std::string& text) {
    auto parts = split(text, ':');
    const std::string& head = parts[0];
    if (head == "pinf") return PNorm(kInf);
    if (head.size() > 1 && head[0] == 'p' && parts.size() == 1) return PNorm(std::stod(head.substr(1)));
    if (head == "totpers") return TotPers();
    if (head == "trop" && parts.size() == 2) return TropLen(std::stoi(parts[1]));
    if (head == "magnitude") return Magnitude();
    if (head == "support") return Support();
    if (head == "maxdim") return MaxDim();
    if (head == "hilbert" && (parts.size() == 2 || parts.size() == 3)) {
        Content c = Content::Lebesgue();
        if (parts.size() == 3) {
            if (parts[2] != "counting") throw std::invalid_argument("unknown content: " + parts[2]);
            c = Content::Counting();
        }
        return LpHilbert(std::stod(parts[1]), c);
    }
    if (head == "shift" && (parts.size() == 2 || parts.size() == 3)) {
        std::vector<double> v;
        for (const auto& tok : split(parts[1], ',')) v.push_back(std::stod(tok));
        VecNorm n = VecNorm::linf;
        if (parts.size() == 3) {
            if (parts[2] == "l1")
                n = VecNorm::l1;
            else if (parts[2] == "l2")
                n = VecNorm::l2;
            else if (parts[2] == "linf")
                n = VecNorm::linf;
            else
                throw std::invalid_argument("unknown norm: " + parts[2]);
        }
        return ShiftAmp(std::move(v), n);
    }
    throw std::invalid_argument("cannot parse amplitude spec: " + text);
}

std::string AmplitudeSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::pnorm:
            if (std::isinf(p))
                os << "pinf";
            else
                os << "p" << p;
            break;
        case Kind::totpers:
            os << "totpers";
            break;
        case Kind::troplen:
            os << "trop:" << k;
            break;
        case Kind::magnitude:
            os << "magnitude";
            break;
        case Kind::support:
            os << "support";
            break;
        case Kind::maxdim:
            os << "maxdim";
            break;
        case Kind::lp_hilbert:
            os << "hilbert:" << p;
            if (content.kind == Content::Kind::counting) os << ":counting";
            break;
        case Kind::shiftamp: {
            os << "shift:";
            for (std::size_t i = 0; i < shift.size(); ++i) os << (i ? "," : "") << shift[i];
            os << (norm == VecNorm::l1 ? ":l1" : norm == VecNorm::l2 ? ":l2" : ":linf");
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Barcode evaluation

double eval_barcode(const AmplitudeSpec& spec, const Barcode& bc) {
    switch (spec.kind) {
        case AmplitudeSpec::Kind::pnorm: {
            if (std::isinf(spec.p)) {
                double m = 0;
                for (const Bar& b : bc) m = std::max(m, bar_length(b));
                return m;
            }
            double s = 0;
            for (const Bar& b : bc) {
                double len = bar_length(b);
                if (std::isinf(len)) return kInf;
                s += std::pow(len, spec.p);
            }
            return std::pow(s, 1.0 / spec.p);
        }
        case AmplitudeSpec::Kind::totpers: {
            double s = 0;
            for (const Bar& b : bc) s += bar_length(b);
            return s;
        }
        case AmplitudeSpec::Kind::troplen: {
            auto lens = sorted_lengths(bc);
            double s = 0;
            for (int i = 0; i < spec.k && i < static_cast<int>(lens.size()); ++i) s += lens[i];
            return s;
        }
        case AmplitudeSpec::Kind::magnitude: {
            double s = 0;
            for (const Bar& b : bc) {
                if (!std::isfinite(b.birth))
                    throw std::domain_error("magnitude requires finite births");
                s += std::exp(-b.birth) - (std::isinf(b.death) ? 0.0 : std::exp(-b.death));
            }
            return s;
        }
        case AmplitudeSpec::Kind::support: {
            Barcode sorted = bc;
            std::sort(sorted.begin(), sorted.end(),
                      [](const Bar& a, const Bar& b) { return a.birth < b.birth; });
            double total = 0, hi = -kInf;
            for (const Bar& b : sorted) {
                if (b.death <= b.birth) continue;
                double lo = std::max(b.birth, hi);
                if (b.death > lo) {
                    if (std::isinf(b.death)) return kInf;
                    total += b.death - lo;
                    hi = b.death;
                }
            }
            return total;
        }
        case AmplitudeSpec::Kind::shiftamp: {
            if (spec.shift.size() != 1)
                throw std::invalid_argument("shiftamp on barcodes takes a scalar direction");
            double m = 0;  // threshold of "shift by s kills every bar" is the max length
            for (const Bar& b : bc) m = std::max(m, bar_length(b));
            return m;
        }
        default:
            throw std::invalid_argument("amplitude " + spec.name() + " is not defined on barcodes");
    }
}

// ---------------------------------------------------------------------------
// Grid evaluation

static double lp_hilbert_value(double p, const Content& content, const GridModule& m) {
    double s = 0;
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        if (m.dims[i] == 0) continue;  // 0 * inf = 0
        double w = content.cell_weight(m.geo, i);
        if (std::isinf(w)) return kInf;
        s += std::pow(static_cast<double>(m.dims[i]), p) * w;
    }
    return std::pow(s, 1.0 / p);
}

/// Supremum of displacements s >= 0 for which some nonzero composite map
/// connects a cell to a cell shifted by s*v; breakpoint-exact.
static double shift_amp_grid(const GridModule& m, const std::vector<double>& v, VecNorm norm) {
    const GridGeometry& geo = m.geo;
    const int n = geo.dim();
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("shiftamp: direction arity mismatch");

    double sup_bad = 0;
    const std::size_t count = geo.vertex_count();
    for (std::size_t iu = 0; iu < count; ++iu) {
        if (m.dims[iu] == 0) continue;
        auto u = geo.unlinear(iu);
        for (std::size_t iw = 0; iw < count; ++iw) {
            if (m.dims[iw] == 0) continue;
            auto w = geo.unlinear(iw);
            bool comparable = true, feasible = true;
            for (int ax = 0; ax < n && comparable && feasible; ++ax) {
                if (w[ax] < u[ax]) comparable = false;
                if (v[ax] == 0 && w[ax] != u[ax]) feasible = false;
            }
            if (!comparable || !feasible) continue;
            if (structure_map(m, u, w).is_zero()) continue;

            // displacement interval {s : (cube_u + s v) meets cube_w}
            double lower = 0, upper = kInf;
            for (int ax = 0; ax < n; ++ax) {
                if (v[ax] == 0) continue;
                double lo_u = geo.cell_low(ax, u[ax]), hi_u = geo.cell_high(ax, u[ax]);
                double lo_w = geo.cell_low(ax, w[ax]), hi_w = geo.cell_high(ax, w[ax]);
                upper = std::min(upper, (hi_w - lo_u) / v[ax]);
                if (!std::isinf(hi_u)) lower = std::max(lower, (lo_w - hi_u) / v[ax]);
            }
            if (lower < upper) sup_bad = std::max(sup_bad, upper);
            if (std::isinf(sup_bad)) return kInf;
        }
    }
    return vec_norm(v, norm) * sup_bad;
}

double eval_grid(const AmplitudeSpec& spec, const GridModule& m) {
    switch (spec.kind) {
        case AmplitudeSpec::Kind::lp_hilbert:
            return lp_hilbert_value(spec.p, spec.content, m);
        case AmplitudeSpec::Kind::maxdim:
            return m.max_dim();
        case AmplitudeSpec::Kind::support: {
            double s = 0;
            for (std::size_t i = 0; i < m.dims.size(); ++i) {
                if (m.dims[i] == 0) continue;
                double w = m.geo.cell_volume(m.geo.unlinear(i));
                if (std::isinf(w)) return kInf;
                s += w;
            }
            return s;
        }
        case AmplitudeSpec::Kind::shiftamp:
            return shift_amp_grid(m, spec.shift, spec.norm);
        default:
            throw std::invalid_argument("amplitude " + spec.name() +
                                        " is not defined on grid modules");
    }
}

double eval_any(const AmplitudeSpec& spec, const GridModule& m) {
    if (spec.grid_applicable()) return eval_grid(spec, m);
    if (m.geo.dim() != 1)
        throw std::invalid_argument("amplitude " + spec.name() +
                                    " needs a 1-parameter module or a barcode");
    return eval_barcode(spec, barcode_of_1param(m));
}

// ---------------------------------------------------------------------------
// Barcode <-> 1-parameter grid bridge

Barcode barcode_of_1param(const GridModule& m) {
    if (m.geo.dim() != 1) throw std::invalid_argument("barcode_of_1param: module not 1-parameter");
    const int k = m.geo.cells(0);
    const auto& bp = m.geo.breakpoints[0];

    // R[i][j] = rank of the composite map cell i -> cell j, j >= i
    std::vector<std::vector<int>> R(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        Matrix acc = Matrix::identity(m.dims[i], m.mod);
        R[i][i] = m.dims[i];
        for (int j = i + 1; j < k; ++j) {
            acc = m.maps[0][j - 1] * acc;
            R[i][j] = rank(acc);
        }
    }
    auto r = [&](int i, int j) {
        if (i < 0 || j >= k) return 0;
        return R[i][j];
    };

    Barcode bc;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            int mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
            if (mult < 0) throw std::logic_error("barcode_of_1param: negative multiplicity");
            for (int t = 0; t < mult; ++t)
                bc.push_back(Bar{bp[i], j + 1 < k ? bp[j + 1] : kInf});
        }
    return bc;
}

GridModule barcode_to_grid(const Barcode& bc, std::uint32_t mod) {
    std::set<double> pts;
    for (const Bar& b : bc) {
        pts.insert(b.birth);
        if (!std::isinf(b.death)) pts.insert(b.death);
    }
    if (pts.empty()) pts.insert(0.0);

    GridGeometry geo;
    geo.breakpoints.push_back({pts.begin(), pts.end()});
    const auto& bp = geo.breakpoints[0];
    const int k = geo.cells(0);

    auto alive = [&](int cell) {
        std::vector<int> out;
        for (std::size_t b = 0; b < bc.size(); ++b)
            if (bc[b].birth <= bp[cell] && bp[cell] < bc[b].death) out.push_back(static_cast<int>(b));
        return out;
    };

    GridModule m = zero_module(geo, mod);
    std::vector<std::vector<int>> alive_at(k);
    for (int i = 0; i < k; ++i) {
        alive_at[i] = alive(i);
        m.dims[i] = static_cast<int>(alive_at[i].size());
    }
    for (int i = 0; i + 1 < k; ++i) {
        Matrix f(m.dims[i + 1], m.dims[i], mod);
        for (int c = 0; c < m.dims[i]; ++c) {
            auto it = std::find(alive_at[i + 1].begin(), alive_at[i + 1].end(), alive_at[i][c]);
            if (it != alive_at[i + 1].end())
                f.at(static_cast<int>(it - alive_at[i + 1].begin()), c) = 1;
        }
        m.maps[0][i] = std::move(f);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Axioms and representation checks

/// Value in the comparison domain: p-th powers for rooted evaluators, so
/// order comparisons on integer inputs are exact.
static double compare_key(const AmplitudeSpec& spec, const SesSample& ses, int which) {
    const GridModule& m = which == 0 ? ses.sub : which == 1 ? ses.mid : ses.quot;
    if (spec.kind == AmplitudeSpec::Kind::lp_hilbert) {
        double s = 0;
        for (std::size_t i = 0; i < m.dims.size(); ++i) {
            if (m.dims[i] == 0) continue;
            double w = spec.content.cell_weight(m.geo, i);
            if (std::isinf(w)) return kInf;
            s += std::pow(static_cast<double>(m.dims[i]), spec.p) * w;
        }
        return s;
    }
    if (spec.kind == AmplitudeSpec::Kind::pnorm && !std::isinf(spec.p)) {
        double s = 0;
        for (const Bar& b : barcode_of_1param(m)) {
            double len = bar_length(b);
            if (std::isinf(len)) return kInf;
            s += std::pow(len, spec.p);
        }
        return s;
    }
    return eval_any(spec, m);
}

AxiomReport check_axioms(const AmplitudeSpec& spec, const SesSample& ses) {
    if (!spec.grid_applicable() && ses.mid.geo.dim() != 1)
        throw std::invalid_argument("amplitude " + spec.name() +
                                    " applies to 1-parameter sequences only");
    AxiomReport rep;
    rep.a = eval_any(spec, ses.sub);
    rep.b = eval_any(spec, ses.mid);
    rep.c = eval_any(spec, ses.quot);
    rep.mono_sub = approx_le(compare_key(spec, ses, 0), compare_key(spec, ses, 1));
    rep.mono_quot = approx_le(compare_key(spec, ses, 2), compare_key(spec, ses, 1));
    rep.subadd = approx_le(rep.b, rep.a + rep.c);
    rep.additive = rep.subadd && approx_eq(rep.b, rep.a + rep.c);
    return rep;
}

static double hilbert_integral(const Content& content, const GridModule& m) {
    double s = 0;
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        if (m.dims[i] == 0) continue;
        double w = content.cell_weight(m.geo, i);
        if (std::isinf(w)) return kInf;
        s += m.dims[i] * w;
    }
    return s;
}

bool integral_representation_check(const AmplitudeSpec& spec, const Content& content,
                                   const GridModule& m) {
    return approx_eq(eval_any(spec, m), hilbert_integral(content, m));
}

bool integral_representation_check(const AmplitudeSpec& spec, const Content& content,
                                   const Barcode& bc) {
    return approx_eq(eval_barcode(spec, bc), hilbert_integral(content, barcode_to_grid(bc)));
}

bool hilbert_invariance_check(const AmplitudeSpec& spec, const GridModule& m, const GridModule& n) {
    return approx_eq(eval_any(spec, m), eval_any(spec, n));
}

double tropical_sigma10(const Barcode& bc, int l, int m) {
    std::vector<double> vals;
    vals.reserve(bc.size());
    for (const Bar& b : bc) vals.push_back(std::min(b.birth, m * bar_length(b)));
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    double s = 0;
    for (int i = 0; i < l && i < static_cast<int>(vals.size()); ++i) s += vals[i];
    return s;
}

double c_tau_rank(const GridModule& m, const Face& tau, const Content& content) {
    GridModule h = local_cohomology(m, tau).sub;
    std::vector<int> rem = tau.complement(m.geo.dim());
    if (rem.empty()) return hilbert_integral(content, h);
    return hilbert_integral(content, quotient_restriction(h, Face(rem)));
}

}  // namespace amp
