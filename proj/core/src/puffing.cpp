#include "toric/puffing.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

std::vector<std::pair<size_t, Halfspace>> contributing_halfspaces(const SupportFunction& h) {
  const Polytope box = box_of(h);
  if (box.empty())
    throw ValidationError(
        "contributing_halfspaces: empty adjoint polytope (kappa = -infinity); "
        "use the contraction engine instead");
  std::vector<std::pair<size_t, Halfspace>> out;
  for (size_t i = 0; i < h.fan->rays().size(); ++i) {
    Halfspace hs(h.fan->rays()[i], h.values[i]);
    if (support_value(hs.normal, box) == hs.level) out.emplace_back(i, std::move(hs));
  }
  return out;
}

Polytope puffed_polytope(const SupportFunction& h, const EpsilonAssignment& eps) {
  const auto contributing = contributing_halfspaces(h);
  if (eps.weights.size() != contributing.size())
    throw ValidationError("puffed_polytope: one epsilon per contributing halfspace required");
  const std::vector<Rat> e = eps.epsilons();
  std::vector<Halfspace> relaxed;
  for (size_t i = 0; i < contributing.size(); ++i) {
    if (e[i] <= 0) throw ValidationError("puffed_polytope: epsilons must be positive");
    relaxed.emplace_back(contributing[i].second.normal, contributing[i].second.level - e[i]);
  }
  return Polytope::intersect(std::move(relaxed));
}

std::pair<EpsilonAssignment, ChamberCertificate> sample_epsilon_in_chamber(
    const SupportFunction& h, uint64_t seed) {
  const auto contributing = contributing_halfspaces(h);
  const size_t r = contributing.size();

  std::mt19937_64 rng(seed);
  std::set<Rat> used;
  std::vector<Rat> weights;
  while (weights.size() < r) {
    const uint64_t den = 101 + rng() % 900;           // <= 1000
    const uint64_t num = 1 + rng() % (den - 1);       // in (0, den)
    Rat w = Rat(1) + Rat(Int(num), Int(den));         // in (1, 2)
    if (used.insert(w).second) weights.push_back(w);
  }

  EpsilonAssignment eps{weights, Rat(1)};
  constexpr int kMaxHalvings = 48;
  for (int halving = 0; halving < kMaxHalvings; ++halving) {
    ChamberCertificate cert;
    cert.stability_scale = eps.scale;

    const Polytope box = puffed_polytope(h, eps);
    cert.simple = box.dim() == static_cast<int>(h.fan->ambient_dim()) && is_simple(box);
    if (cert.simple) {
      cert.all_contribute_properly = true;
      for (size_t i = 0; i < box.halfspaces().size() && cert.all_contribute_properly; ++i)
        if (!contributes_properly(box.halfspaces(), i)) cert.all_contribute_properly = false;
    }
    if (cert.simple && cert.all_contribute_properly) {
      cert.signature = combinatorial_signature(box);
      EpsilonAssignment half{weights, eps.scale / 2};
      EpsilonAssignment quarter{weights, eps.scale / 4};
      cert.stable = combinatorial_signature(puffed_polytope(h, half)) == cert.signature &&
                    combinatorial_signature(puffed_polytope(h, quarter)) == cert.signature;
    }
    if (cert.valid()) return {eps, cert};
    eps.scale /= 2;
  }
  std::ostringstream os;
  os << "sample_epsilon_in_chamber: no stable chamber after " << kMaxHalvings
     << " halvings (seed " << seed << ", " << r << " contributing halfspaces)";
  throw ResourceError(os.str());
}

MinimalModelReport construct_minimal_model(const DivisorClassOfX& x_class, uint64_t seed) {
  const FanPtr fan = x_class.fan();
  if (!is_complete(*fan) || !is_simplicial(*fan))
    throw ValidationError("construct_minimal_model: requires a complete simplicial fan");
  if (!is_smooth(*fan) && !is_terminal_pair(x_class).terminal)
    throw ValidationError("construct_minimal_model: the pair is not terminal");

  const SupportFunction h = adjoint_support(x_class);
  const Polytope box_h = box_of(h);
  if (box_h.empty())
    throw ValidationError(
        "construct_minimal_model: empty adjoint polytope (kappa = -infinity); "
        "use the contraction engine instead");

  const auto contributing = contributing_halfspaces(h);
  auto [eps, cert] = sample_epsilon_in_chamber(h, seed);
  const Polytope puffed = puffed_polytope(h, eps);
  FanPtr sigma = std::make_shared<Fan>(dual_fan(puffed));

  MinimalModelReport report{sigma,
                            proper_transform_class(x_class, sigma),
                            SupportFunction(sigma, std::vector<Rat>(sigma->rays().size())),
                            box_h,
                            {},
                            std::nullopt,
                            eps,
                            cert,
                            {}};

  // Every claim is re-proved on the output; a failure aborts with its name.
  std::vector<NVec> normals;
  for (const auto& [idx, hs] : contributing) normals.push_back(hs.normal);
  std::sort(normals.begin(), normals.end());
  report.checks.sigma_rays_equal_contributing = sigma->rays() == normals;
  if (!report.checks.sigma_rays_equal_contributing)
    throw ClaimError("sigma_rays_equal_contributing",
                     "dual fan rays differ from the contributing normals");

  const SupportFunction k = adjoint_support(report.transported_class);
  report.adjoint_on_sigma = k;
  report.checks.k_matches_h = true;
  for (const NVec& p : sigma->rays())
    if (k.at_ray(p) != h.at_ray(p)) {
      report.checks.k_matches_h = false;
      break;
    }
  if (!report.checks.k_matches_h)
    throw ClaimError("k_matches_h", "adjoint values changed on the surviving rays");

  const Polytope box_k = box_of(k);
  report.checks.box_preserved = box_k == box_h;
  if (!report.checks.box_preserved) throw ClaimError("box_preserved");
  report.adjoint_box = box_k;

  report.checks.k_sigma_in_box = true;
  for (const Cone& c : sigma->max_cones())
    if (!box_k.contains(linear_extension(k, c))) {
      report.checks.k_sigma_in_box = false;
      break;
    }
  if (!report.checks.k_sigma_in_box) throw ClaimError("k_sigma_in_box");

  report.checks.nef = is_nef(k);
  if (!report.checks.nef) throw ClaimError("nef");

  // Terminality witnessed on a smooth refinement of both fans.
  const Fan witness = desingularize(common_refinement(*sigma, *fan));
  TerminalityResult term = is_terminal_pair(report.transported_class, &witness);
  report.terminality = std::move(term.report);
  report.checks.terminal = term.terminal;
  if (!report.checks.terminal) throw ClaimError("terminal");

  report.kappa = box_k.dim();
  return report;
}

}  // namespace toric
