#include "rotsurf/rotation.hpp"

#include "rotsurf/error.hpp"

namespace rotsurf {

std::pair<GeneratorId, GeneratorId> generators(RotationPair p) {
  switch (p) {
    case RotationPair::Pair14: return {GeneratorId::Omega1, GeneratorId::Omega4};
    case RotationPair::Pair23: return {GeneratorId::Omega2, GeneratorId::Omega3};
    case RotationPair::Pair56: return {GeneratorId::Omega5, GeneratorId::Omega6};
  }
  return {GeneratorId::Omega1, GeneratorId::Omega4};
}

std::string_view name(RotationPair p) {
  switch (p) {
    case RotationPair::Pair14: return "Pair14";
    case RotationPair::Pair23: return "Pair23";
    case RotationPair::Pair56: return "Pair56";
  }
  return "?";
}

std::optional<RotationPair> parse_pair(std::string_view text) {
  if (text.substr(0, 4) == "Pair") text.remove_prefix(4);
  if (text == "14") return RotationPair::Pair14;
  if (text == "23") return RotationPair::Pair23;
  if (text == "56") return RotationPair::Pair56;
  return std::nullopt;
}

OneParamMatrix one_param_matrix(GeneratorId id, double param) {
  OneParamMatrix out{id, param, Mat4::identity()};
  for (std::size_t col = 0; col < 4; ++col) {
    std::array<double, 4> e{};
    e[col] = 1.0;
    const auto image = apply_one_param(id, param, e);
    for (std::size_t row = 0; row < 4; ++row) out.matrix(row, col) = image[row];
  }
  return out;
}

Mat4 subgroup_generator(GeneratorId id) {
  const BlockLayout L = block_layout(id);
  Mat4 a;
  a(L.a, L.b) = 1.0;
  a(L.b, L.a) = L.elliptic ? -1.0 : 1.0;
  return a;
}

double verify_closed_form(GeneratorId id, double param, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("verify_closed_form: tol must be positive");
  const Mat4 series = expm(param * subgroup_generator(id), tol / 10.0);
  return (one_param_matrix(id, param).matrix - series).max_abs();
}

Mat4 two_param_matrix(RotationPair pair, double p1, double p2) {
  const auto [i, j] = generators(pair);
  return one_param_matrix(i, p1).matrix * one_param_matrix(j, p2).matrix;
}

}  // namespace rotsurf
