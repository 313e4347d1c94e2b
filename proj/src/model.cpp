#include "mooring/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mooring/errors.hpp"

namespace mooring {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SingularTension: return "SingularTension";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorKind::NonAxisAligned: return "NonAxisAligned";
    case ErrorKind::SingularJacobian: return "SingularJacobian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::EvaluationFailed: return "EvaluationFailed";
    case ErrorKind::ZeroHorizontalTension: return "ZeroHorizontalTension";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
  }
  return "Unknown";
}

void validate(const LineProperties& props) {
  const double fields[] = {props.length_rest,      props.young_modulus, props.cross_area,
                           props.density_material, props.density_fluid, props.gravity};
  for (double v : fields) {
    if (!std::isfinite(v)) throw SolverError(ErrorKind::InvalidInput, "non-finite line property");
  }
  if (props.length_rest <= 0.0) throw SolverError(ErrorKind::InvalidInput, "length_rest must be > 0");
  if (props.young_modulus <= 0.0)
    throw SolverError(ErrorKind::InvalidInput, "young_modulus must be > 0");
  if (props.cross_area <= 0.0) throw SolverError(ErrorKind::InvalidInput, "cross_area must be > 0");
}

Vec6 StateVector::packed() const {
  Vec6 phi;
  phi << position, tension;
  return phi;
}

StateVector StateVector::unpack(const Vec6& phi) {
  return StateVector{phi.head<3>(), phi.tail<3>()};
}

double relative_weight(const LineProperties& props) {
  return props.gravity * props.cross_area * (props.density_material - props.density_fluid);
}

double stretch_factor(double tension_norm, double ea) {
  if (!(tension_norm > 0.0)) {
    throw SolverError(ErrorKind::SingularTension, "string tension norm must be > 0");
  }
  return 1.0 + tension_norm / ea;
}

Vec6 state_derivative(const StateVector& state, double s, const DistributedLoad& load,
                      const LineProperties& props) {
  const double norm = state.tension.norm();
  const double stretch = stretch_factor(norm, props.axial_stiffness());
  Vec6 d;
  d.head<3>() = (stretch / norm) * state.tension;
  d.tail<3>() = -load(s, state.position);
  return d;
}

DistributedLoad buoyant_weight_load(const LineProperties& props) {
  const Vec3 f(0.0, 0.0, -relative_weight(props));
  return DistributedLoad([f](double, const Vec3&) { return f; });
}

DistributedLoad piecewise_constant_load(std::vector<LoadInterval> table) {
  std::sort(table.begin(), table.end(),
            [](const LoadInterval& a, const LoadInterval& b) { return a.s_begin < b.s_begin; });
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& seg = table[i];
    if (!std::isfinite(seg.s_begin) || !std::isfinite(seg.s_end) || !seg.force.allFinite()) {
      throw SolverError(ErrorKind::InvalidInput, "load table entries must be finite");
    }
    if (!(seg.s_end > seg.s_begin)) {
      throw SolverError(ErrorKind::InvalidInput, "load interval must have s_end > s_begin");
    }
    if (i > 0 && seg.s_begin < table[i - 1].s_end) {
      throw SolverError(ErrorKind::InvalidInput, "load intervals overlap");
    }
  }
  return DistributedLoad([table = std::move(table)](double s, const Vec3&) -> Vec3 {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto& seg = table[i];
      const bool last = i + 1 == table.size();
      if (s >= seg.s_begin && (s < seg.s_end || (last && s == seg.s_end))) return seg.force;
    }
    return Vec3::Zero();
  });
}

}  // namespace mooring
