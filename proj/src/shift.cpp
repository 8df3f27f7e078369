#include "sigma/actions.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sigma::actions {
namespace {

bool on_tree(const ModelSpace& m) { return std::holds_alternative<cat0::TreeDescriptor>(m); }

// f is partial: its domain is the set of keys. Images must be control points.
PointMap images_of(const ControlConfiguration& cfg, const LabelMap& f) {
  PointMap images;
  for (const auto& [from, to] : f) {
    if (!cfg.has(from)) throw Error(ErrorCode::InvalidInput, "map is defined at unknown label '" + from + "'");
    if (!cfg.has(to)) throw Error(ErrorCode::NotClosed, "image '" + to + "' is not a control point");
    images.emplace(from, cfg.at(to));
  }
  return images;
}

}  // namespace

ControlConfiguration::ControlConfiguration(std::vector<ControlPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::EmptyConfiguration, "a control configuration needs a point");
  std::set<std::string> labels;
  for (const auto& p : points_)
    if (!labels.insert(p.label).second) throw Error(ErrorCode::InvalidInput, "duplicate label '" + p.label + "'");
}

bool ControlConfiguration::has(const std::string& label) const {
  return std::any_of(points_.begin(), points_.end(), [&](const ControlPoint& p) { return p.label == label; });
}

const Point& ControlConfiguration::at(const std::string& label) const {
  for (const auto& p : points_)
    if (p.label == label) return p.point;
  throw Error(ErrorCode::InvalidInput, "no control point '" + label + "'");
}

ShiftReport ShiftReport::build(std::vector<ShiftEntry> entries) {
  if (entries.empty()) throw Error(ErrorCode::EmptyConfiguration, "shift report over no points");
  ShiftReport r;
  r.gsh_ = cat0::kInfinity;
  for (const auto& x : entries) {
    if (x.exact_shift) {
      if (abs(*x.exact_shift) > *x.exact_displacement)
        throw Error(ErrorCode::InvariantViolation, "|sh| exceeds the displacement at '" + x.label + "'");
      if (!r.exact_gsh_ || *x.exact_shift < *r.exact_gsh_) r.exact_gsh_ = *x.exact_shift;
    } else if (std::abs(x.shift) > x.displacement + 1e-9 * (1 + x.displacement)) {
      throw Error(ErrorCode::InvariantViolation, "|sh| exceeds the displacement at '" + x.label + "'");
    }
    r.gsh_ = std::min(r.gsh_, x.shift);
    r.norm_ = std::max(r.norm_, x.displacement);
  }
  r.entries_ = std::move(entries);
  return r;
}

ShiftReport shift_report(const ModelSpace& m, const ControlConfiguration& cfg, const PointMap& images,
                         const BoundaryPoint& e) {
  // Busemann differences do not depend on the base of the ray.
  const auto ray = cat0::ray_from(m, cfg.points().front().point, e);
  std::vector<ShiftEntry> entries;
  for (const auto& [label, image] : images) {
    if (!cfg.has(label)) throw Error(ErrorCode::InvalidInput, "image given for unknown label '" + label + "'");
  }
  for (const auto& p : cfg.points()) {
    const auto it = images.find(p.label);
    if (it == images.end()) continue;  // outside the domain of f
    ShiftEntry x;
    x.label = p.label;
    if (on_tree(m)) {
      const Rational sh = cat0::busemann_exact(m, ray, it->second) - cat0::busemann_exact(m, ray, p.point);
      const Rational alpha = cat0::tree::distance(std::get<cat0::TreePoint>(p.point), std::get<cat0::TreePoint>(it->second));
      x.exact_shift = sh;
      x.exact_displacement = alpha;
      x.shift = to_double(sh);
      x.displacement = to_double(alpha);
    } else {
      x.shift = cat0::busemann(m, ray, it->second) - cat0::busemann(m, ray, p.point);
      x.displacement = cat0::distance(m, p.point, it->second);
    }
    entries.push_back(std::move(x));
  }
  return ShiftReport::build(std::move(entries));
}

ShiftReport shift_report(const ModelSpace& m, const ControlConfiguration& cfg, const LabelMap& f,
                         const BoundaryPoint& e) {
  return shift_report(m, cfg, images_of(cfg, f), e);
}

IterateCheck iterate_shift_check(const ModelSpace& m, const ControlConfiguration& cfg, const LabelMap& f,
                                 const BoundaryPoint& e, std::size_t power) {
  images_of(cfg, f);  // closedness
  // f^m lives on the labels whose first m - 1 iterates stay in the domain.
  LabelMap fm;
  for (const auto& [label, first] : f) {
    std::string x = label;
    bool defined = true;
    for (std::size_t i = 0; i < power && defined; ++i) {
      const auto it = f.find(x);
      if (it == f.end())
        defined = false;
      else
        x = it->second;
    }
    if (defined) fm.emplace(label, x);
  }
  const ShiftReport once = shift_report(m, cfg, f, e);
  const ShiftReport many = shift_report(m, cfg, fm, e);
  IterateCheck out;
  out.m = power;
  out.gsh = once.gsh();
  out.gsh_iterate = many.gsh();
  out.bound = static_cast<double>(power) * once.gsh();
  if (once.exact_gsh())
    out.pass = *many.exact_gsh() >= Rational(static_cast<long long>(power)) * *once.exact_gsh();
  else
    out.pass = out.gsh_iterate >= out.bound - 1e-9 * (1 + std::abs(out.bound));
  return out;
}

EquivarianceCheck equivariance_check(const GroupAction& rho, const ControlConfiguration& cfg, const PointMap& images,
                                     const std::string& g, const BoundaryPoint& e) {
  const ModelSpace& m = rho.space();
  const Isometry h = rho.evaluate(g);
  std::vector<ControlPoint> moved;
  PointMap moved_images;
  for (const auto& p : cfg.points()) {
    moved.push_back({p.label, apply(m, h, p.point), p.group_label});
    const auto it = images.find(p.label);
    if (it != images.end()) moved_images.emplace(p.label, apply(m, h, it->second));
  }
  const ShiftReport before = shift_report(m, cfg, images, e);
  const ShiftReport after = shift_report(m, ControlConfiguration(std::move(moved)), moved_images, apply(m, h, e));
  EquivarianceCheck out;
  out.gsh = before.gsh();
  out.gsh_translated = after.gsh();
  if (before.exact_gsh())
    out.pass = *before.exact_gsh() == *after.exact_gsh();
  else
    out.pass = std::abs(out.gsh - out.gsh_translated) <= 1e-9 * (1 + std::abs(out.gsh));
  return out;
}

}  // namespace sigma::actions
