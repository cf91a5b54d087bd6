#pragma once

#include <string>

#include "amp/grid_module.hpp"

namespace amp {

/// GridModule JSON document:
///   prime        integer
///   n            integer
///   breakpoints  array of arrays of numbers
///   dims         flat row-major array, last axis fastest
///   maps         array of {axis: 1-based int, vertex: 0-based indices,
///                matrix: array of rows of integers}
/// Absent maps default to zero maps of the correct shape. Loading validates
/// the module and rejects violations, naming the offending vertex.
std::string grid_module_to_json(const GridModule& m);
GridModule grid_module_from_json(const std::string& text);
GridModule load_grid_module(const std::string& path);
void save_grid_module(const GridModule& m, const std::string& path);

/// Morphism JSON: {prime, n, components: [{vertex, matrix}]}. Source and
/// target modules travel separately; loading re-checks naturality.
std::string morphism_to_json(const ModuleMorphism& f);
ModuleMorphism morphism_from_json(const std::string& text, const GridModule& source,
                                  const GridModule& target);
void save_morphism(const ModuleMorphism& f, const std::string& path);
ModuleMorphism load_morphism(const std::string& path, const GridModule& source,
                             const GridModule& target);

std::string describe_violation(const GridViolation& v);

}  // namespace amp
