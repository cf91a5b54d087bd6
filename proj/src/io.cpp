#include "amp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace amp {

using nlohmann::json;

std::string describe_violation(const GridViolation& v) {
    std::ostringstream os;
    os << v.what << " at vertex (";
    for (std::size_t i = 0; i < v.vertex.size(); ++i) os << (i ? "," : "") << v.vertex[i];
    os << ")";
    if (v.axis_i >= 0) os << " axis " << v.axis_i + 1;
    if (v.axis_j >= 0) os << "/" << v.axis_j + 1;
    return os.str();
}

static json matrix_rows(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string grid_module_to_json(const GridModule& m) {
    json j;
    j["prime"] = m.mod;
    j["n"] = m.geo.dim();
    j["breakpoints"] = m.geo.breakpoints;
    j["dims"] = m.dims;
    json maps = json::array();
    for (int ax = 0; ax < m.geo.dim(); ++ax)
        for (std::size_t i = 0; i < m.geo.vertex_count(); ++i) {
            auto u = m.geo.unlinear(i);
            if (u[ax] + 1 >= m.geo.cells(ax)) continue;
            const Matrix& f = m.maps[ax][i];
            if (f.is_zero()) continue;  // absent maps are zero maps
            json rec;
            rec["axis"] = ax + 1;
            rec["vertex"] = u;
            rec["matrix"] = matrix_rows(f);
            maps.push_back(std::move(rec));
        }
    j["maps"] = std::move(maps);
    return j.dump(2);
}

GridModule grid_module_from_json(const std::string& text) {
    json j = json::parse(text);
    GridGeometry geo;
    geo.breakpoints = j.at("breakpoints").get<std::vector<std::vector<double>>>();
    int n = j.at("n").get<int>();
    if (n != geo.dim()) throw std::runtime_error("grid module json: n != breakpoint arity");
    std::uint32_t prime = j.at("prime").get<std::uint32_t>();

    GridModule m = zero_module(geo, prime);
    auto dims = j.at("dims").get<std::vector<int>>();
    if (dims.size() != geo.vertex_count())
        throw std::runtime_error("grid module json: dims length mismatch");
    m.dims = std::move(dims);

    // re-shape the default zero maps to the declared dims
    for (int ax = 0; ax < n; ++ax)
        for (std::size_t i = 0; i < geo.vertex_count(); ++i) {
            auto u = geo.unlinear(i);
            if (u[ax] + 1 >= geo.cells(ax)) continue;
            auto w = u;
            ++w[ax];
            m.maps[ax][i] = Matrix(m.dims[geo.linear(w)], m.dims[i], prime);
        }

    for (const json& rec : j.value("maps", json::array())) {
        int axis = rec.at("axis").get<int>() - 1;
        auto vertex = rec.at("vertex").get<std::vector<int>>();
        if (axis < 0 || axis >= n) throw std::runtime_error("grid module json: axis out of range");
        if (!geo.contains(vertex)) throw std::runtime_error("grid module json: vertex out of range");
        if (vertex[axis] + 1 >= geo.cells(axis))
            throw std::runtime_error("grid module json: map leaves the grid");
        auto rows = rec.at("matrix").get<std::vector<std::vector<long long>>>();
        auto w = vertex;
        ++w[axis];
        Matrix f(m.dims[geo.linear(w)], m.dims[geo.linear(vertex)], prime);
        if (static_cast<int>(rows.size()) != f.rows)
            throw std::runtime_error("grid module json: matrix row count mismatch");
        for (int r = 0; r < f.rows; ++r) {
            if (static_cast<int>(rows[r].size()) != f.cols)
                throw std::runtime_error("grid module json: matrix column count mismatch");
            for (int c = 0; c < f.cols; ++c) {
                long long v = rows[r][c] % static_cast<long long>(prime);
                if (v < 0) v += prime;
                f.at(r, c) = static_cast<std::uint32_t>(v);
            }
        }
        m.maps[axis][geo.linear(vertex)] = std::move(f);
    }

    if (auto v = validate(m)) throw std::runtime_error("grid module json: " + describe_violation(*v));
    return m;
}

GridModule load_grid_module(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open module file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return grid_module_from_json(ss.str());
}

void save_grid_module(const GridModule& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write module file: " + path);
    out << grid_module_to_json(m) << '\n';
}

std::string morphism_to_json(const ModuleMorphism& f) {
    json j;
    j["prime"] = f.source.mod;
    j["n"] = f.source.geo.dim();
    json comps = json::array();
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        const Matrix& c = f.components[i];
        if (c.is_zero()) continue;
        json rec;
        rec["vertex"] = f.source.geo.unlinear(i);
        rec["matrix"] = matrix_rows(c);
        comps.push_back(std::move(rec));
    }
    j["components"] = std::move(comps);
    return j.dump(2);
}

ModuleMorphism morphism_from_json(const std::string& text, const GridModule& source,
                                  const GridModule& target) {
    if (!(source.geo == target.geo))
        throw std::runtime_error("morphism json: source/target geometry mismatch");
    json j = json::parse(text);
    ModuleMorphism f = zero_morphism(source, target);
    for (const json& rec : j.value("components", json::array())) {
        auto vertex = rec.at("vertex").get<std::vector<int>>();
        if (!source.geo.contains(vertex)) throw std::runtime_error("morphism json: vertex out of range");
        std::size_t i = source.geo.linear(vertex);
        auto rows = rec.at("matrix").get<std::vector<std::vector<long long>>>();
        Matrix c(target.dims[i], source.dims[i], source.mod);
        if (static_cast<int>(rows.size()) != c.rows)
            throw std::runtime_error("morphism json: matrix row count mismatch");
        for (int r = 0; r < c.rows; ++r) {
            if (static_cast<int>(rows[r].size()) != c.cols)
                throw std::runtime_error("morphism json: matrix column count mismatch");
            for (int cc = 0; cc < c.cols; ++cc) {
                long long v = rows[r][cc] % static_cast<long long>(source.mod);
                if (v < 0) v += source.mod;
                c.at(r, cc) = static_cast<std::uint32_t>(v);
            }
        }
        f.components[i] = std::move(c);
    }
    if (auto v = validate(f)) throw std::runtime_error("morphism json: " + describe_violation(*v));
    return f;
}

void save_morphism(const ModuleMorphism& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write morphism file: " + path);
    out << morphism_to_json(f) << '\n';
}

ModuleMorphism load_morphism(const std::string& path, const GridModule& source,
                             const GridModule& target) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open morphism file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return morphism_from_json(ss.str(), source, target);
}

}  // namespace amp
