#include "toric/divisor.hpp"

#include <algorithm>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

std::string cone_name(const Cone& c) {
  std::ostringstream os;
  os << "cone{";
  for (size_t i = 0; i < c.rays().size(); ++i) {
    if (i) os << " ";
    os << c.rays()[i];
  }
  os << "}";
  return os.str();
}

// Any linear extension point of the ray values on one cone; nullopt when the
// values are not the restriction of a single linear function there.
std::optional<MVec> extension_on(const Cone& cone, const SupportFunction& h) {
  QMat a;
  QRow b;
  for (const NVec& r : cone.rays()) {
    a.push_back(r.coords());
    b.push_back(h.at_ray(r));
  }
  auto x = solve_any(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  return MVec(std::move(*x));
}

void require_values_match(const FanPtr& fan, const std::vector<Rat>& values) {
  if (!fan) throw ValidationError("support data without a fan");
  if (values.size() != fan->rays().size())
    throw ValidationError("support data: one value per ray required");
}

}  // namespace

SupportFunction::SupportFunction(FanPtr f, std::vector<Rat> vals)
    : fan(std::move(f)), values(std::move(vals)) {
  require_values_match(fan, values);
}

Rat SupportFunction::at_ray(const NVec& ray) const {
  const auto idx = fan->ray_index(ray);
  if (!idx) throw ValidationError("support function: unknown ray");
  return values[*idx];
}

ToricDivisor::ToricDivisor(FanPtr f, std::vector<Rat> coeffs)
    : fan(std::move(f)), coefficients(std::move(coeffs)) {
  require_values_match(fan, coefficients);
}

SupportFunction support_from_divisor(const ToricDivisor& divisor) {
  std::vector<Rat> vals(divisor.coefficients.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = -divisor.coefficients[i];
  SupportFunction h(divisor.fan, std::move(vals));
  for (const Cone& c : divisor.fan->max_cones()) {
    if (c.is_simplicial()) continue;
    if (!extension_on(c, h))
      throw ValidationError("divisor is not Q-Cartier on " + cone_name(c));
  }
  return h;
}

ToricDivisor divisor_from_support(const SupportFunction& h) {
  std::vector<Rat> coeffs(h.values.size());
  for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = -h.values[i];
  return ToricDivisor(h.fan, std::move(coeffs));
}

SupportFunction adjoint_support(const DivisorClassOfX& x_class) {
  std::vector<Rat> vals(x_class.values().size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = Rat(1) + x_class.values()[i];
  return SupportFunction(x_class.fan(), std::move(vals));
}

Polytope box_of(const SupportFunction& h) {
  std::vector<Halfspace> hs;
  for (size_t i = 0; i < h.fan->rays().size(); ++i)
    hs.emplace_back(h.fan->rays()[i], h.values[i]);
  return Polytope::intersect(std::move(hs));
}

MVec linear_extension(const SupportFunction& h, const Cone& cone) {
  if (!cone.is_simplicial() || cone.dim() != cone.ambient_dim())
    throw ValidationError("linear_extension: need a full-dimensional simplicial cone");
  auto x = extension_on(cone, h);
  if (!x) throw Error("linear_extension: inconsistent values on a simplicial cone");
  return *x;
}

Rat evaluate(const SupportFunction& h, const NVec& u) {
  const Cone& host = h.fan->max_cones()[h.fan->cone_containing(u)];
  if (host.is_simplicial()) {
    const std::vector<Rat> coords = simplicial_coordinates(u, host.rays());
    Rat s(0);
    for (size_t i = 0; i < coords.size(); ++i) s += coords[i] * h.at_ray(host.rays()[i]);
    return s;
  }
  auto x = extension_on(host, h);
  if (!x) throw ValidationError("evaluate: not Q-Cartier on " + cone_name(host));
  return pairing(u, *x);
}

NefStatus check_nef(const SupportFunction& h) {
  if (!is_complete(*h.fan) || !is_simplicial(*h.fan))
    throw ValidationError("check_nef: requires a complete simplicial fan");
  const Polytope box = box_of(h);
  if (box.empty()) return {NefVerdict::empty_box, std::nullopt};
  for (size_t i = 0; i < h.fan->max_cones().size(); ++i) {
    const MVec hs = linear_extension(h, h.fan->max_cones()[i]);
    if (!box.contains(hs)) return {NefVerdict::not_nef, i};
  }
  return {NefVerdict::nef, std::nullopt};
}

bool is_nef(const SupportFunction& h) { return check_nef(h).verdict == NefVerdict::nef; }

bool is_ample(const SupportFunction& h) {
  if (check_nef(h).verdict != NefVerdict::nef) return false;
  const Polytope box = box_of(h);
  if (box.dim() != static_cast<int>(h.fan->ambient_dim())) return false;
  std::vector<MVec> points;
  for (const Cone& c : h.fan->max_cones()) points.push_back(linear_extension(h, c));
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) return false;
  if (points.size() != box.vertices().size()) return false;
  for (const MVec& p : points)
    if (!std::binary_search(box.vertices().begin(), box.vertices().end(), p)) return false;
  return true;
}

DivisorClassOfX::DivisorClassOfX(FanPtr fan, std::vector<Rat> g, Polytope box)
    : fan_(std::move(fan)), g_(std::move(g)), box_(std::move(box)) {}

DivisorClassOfX DivisorClassOfX::transported(FanPtr fan, std::vector<Rat> class_values) {
  require_values_match(fan, class_values);
  SupportFunction g(fan, class_values);
  Polytope box = box_of(g);
  if (box.empty()) throw ValidationError("divisor class with an empty class polytope");
  for (const Cone& c : fan->max_cones())
    if (!c.is_simplicial() && !extension_on(c, g))
      throw ValidationError("divisor class is not Q-Cartier on " + cone_name(c));
  return DivisorClassOfX(fan, std::move(class_values), std::move(box));
}

DivisorClassOfX DivisorClassOfX::checked(FanPtr fan, std::vector<Rat> class_values) {
  DivisorClassOfX x = transported(fan, std::move(class_values));
  // Upper convexity certified cone by cone: the extension point must realize
  // its support values inside the class polytope.
  SupportFunction g(x.fan_, x.g_);
  for (const Cone& c : fan->max_cones()) {
    auto ext = extension_on(c, g);
    if (!ext || !x.box_.contains(*ext))
      throw ValidationError("class values are not upper convex on " + cone_name(c));
  }
  return x;
}

DivisorClassOfX proper_transform_class(const DivisorClassOfX& x_class, FanPtr target) {
  std::vector<Rat> vals;
  vals.reserve(target->rays().size());
  for (const NVec& p : target->rays())
    vals.push_back(support_value(p, x_class.class_polytope()));
  return DivisorClassOfX::transported(std::move(target), std::move(vals));
}

namespace {

bool min_face_is_positive_dimensional(const Polytope& box, const NVec& u) {
  const Rat m = support_value(u, box);
  QMat pts;
  for (const MVec& v : box.vertices())
    if (pairing(u, v) == m) pts.push_back(v.coords());
  return affine_rank(pts) >= 1;
}

}  // namespace

DiscrepancyReport discrepancies(const DivisorClassOfX& x_class, const Fan& refinement,
                                MeetsXMode mode) {
  const Fan& base = *x_class.fan();
  if (!is_simplicial(base)) throw ValidationError("discrepancies: base fan must be simplicial");
  if (refinement.ambient_dim() != base.ambient_dim())
    throw ValidationError("discrepancies: dimension mismatch");
  if (!refinement.refines(base))
    throw ValidationError("discrepancies: second fan does not refine the first");

  DiscrepancyReport report;
  report.resolution = std::make_shared<Fan>(refinement);
  report.terminal = true;
  for (const NVec& u : refinement.rays()) {
    if (base.ray_index(u)) continue;
    const size_t host_idx = base.cone_containing(u);
    const Cone& host = base.max_cones()[host_idx];
    const std::vector<Rat> coords = simplicial_coordinates(u, host.rays());
    // Pull back K + X linearly over the host cone, subtract the adjoint of
    // the transform: a_u = sum a_i (1 + g(p_i)) - 1 - u(class polytope).
    Rat pullback(0);
    for (size_t i = 0; i < coords.size(); ++i) {
      const auto ray_idx = base.ray_index(host.rays()[i]);
      pullback += coords[i] * (Rat(1) + x_class.values()[*ray_idx]);
    }
    const Rat a = pullback - Rat(1) - support_value(u, x_class.class_polytope());
    const bool meets = mode == MeetsXMode::strong
                           ? true
                           : min_face_is_positive_dimensional(x_class.class_polytope(), u);
    if (meets && a <= 0) report.terminal = false;
    report.entries.push_back({u, host_idx, a, meets});
  }
  return report;
}

Rat discrepancy_at(const DivisorClassOfX& x_class, const NVec& u) {
  const Fan& base = *x_class.fan();
  const Cone& host = base.max_cones()[base.cone_containing(u)];
  if (!host.is_simplicial()) throw ValidationError("discrepancy_at: non-simplicial host cone");
  const std::vector<Rat> coords = simplicial_coordinates(u, host.rays());
  Rat pullback(0);
  for (size_t i = 0; i < coords.size(); ++i)
    pullback += coords[i] * (Rat(1) + x_class.values()[*base.ray_index(host.rays()[i])]);
  return pullback - Rat(1) - support_value(u, x_class.class_polytope());
}

TerminalityResult is_terminal_pair(const DivisorClassOfX& x_class, const Fan* witness) {
  const Fan& base = *x_class.fan();
  Fan w = witness ? *witness : desingularize(base);
  if (!witness && w == base) {
    // Already smooth: produce a genuine proper refinement as witness by one
    // smooth blow-up at the barycentric ray of the first maximal cone.
    w = star_subdivide(base, primitivize(base.max_cones().front().ray_sum()));
  }
  DiscrepancyReport report = discrepancies(x_class, w, MeetsXMode::strong);
  const bool terminal = report.terminal;
  FanPtr wp = std::make_shared<Fan>(std::move(w));
  report.resolution = wp;
  return {terminal, wp, std::move(report)};
}

std::optional<int> kappa_adjoint(const DivisorClassOfX& x_class) {
  const Polytope box = box_of(adjoint_support(x_class));
  if (box.empty()) return std::nullopt;
  return box.dim();
}

}  // namespace toric
