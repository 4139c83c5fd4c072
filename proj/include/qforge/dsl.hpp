#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qforge/quadratic.hpp"

namespace qforge {

// Parsed presentation file:
//
//   field Q | Qi
//   algebra NAME
//   generators x, y, ...
//   relations poly; poly; ...
//   clifford NAME: s1, s2, ...      (values on the listed relations, in order)
//   central NAME: poly              (degree-2 element)
//   assert koszul | as-regular | gldim>=2
//
// '#' starts a comment. Relations keep the order and form they were listed in.
struct PresentationFile {
  Field field = Field::Rationals;
  std::string name;
  std::vector<std::string> generators;
  std::vector<Tensor> relations;
  std::vector<std::pair<std::string, Vec>> clifford;
  std::vector<std::pair<std::string, Tensor>> central;
  std::vector<std::string> assertions;

  QuadraticPresentation presentation() const;
  const Vec& clifford_values(const std::string& key) const;   // throws UnknownName
  const Tensor& central_element(const std::string& key) const;  // throws UnknownName
  bool asserts(const std::string& flag) const;
};

inline constexpr std::string_view kFlagKoszul = "koszul";
inline constexpr std::string_view kFlagAsRegular = "as-regular";
inline constexpr std::string_view kFlagGldim = "gldim>=2";

PresentationFile parse_presentation(std::string_view text);
std::string print_presentation(const PresentationFile& file);

// Homogeneous polynomial in the given generators, e.g. "x*y - 2*y*x".
Tensor parse_polynomial(std::string_view text, const std::vector<std::string>& generators, Field field);

// Presentation file for a computed presentation (no extras).
PresentationFile to_file(const QuadraticPresentation& p, const std::string& name);

}  // namespace qforge
