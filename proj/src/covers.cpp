#include "chebolab/covers.hpp"

#include <algorithm>

#include "chebolab/error.hpp"
#include "chebolab/group_library.hpp"

namespace chebo {

namespace {

void require_normal(const FiniteGroup& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "subset is not a normal subgroup of " + g.label());
}

ElementSet generated(const FiniteGroup& g, std::initializer_list<int> gens) {
  return subgroup_generated(g, std::span<const int>(gens.begin(), gens.size()));
}

}  // namespace

PeripheralImage make_peripheral(std::shared_ptr<const FiniteGroup> target, int mu, int lambda) {
  if (!target) throw Error(ErrorCode::InvalidArgument, "missing target group");
  if (mu < 0 || mu >= target->order() || lambda < 0 || lambda >= target->order())
    throw Error(ErrorCode::IndexOutOfRange, "peripheral image outside the target");
  if (!target->commute(mu, lambda))
    throw Error(ErrorCode::NoncommutingPeripheral,
                "meridian and longitude images do not commute in " + target->label());
  return {std::move(target), mu, lambda};
}

SplittingData splitting_data(const PeripheralImage& p) {
  const auto& g = *p.target;
  if (!g.commute(p.mu, p.lambda))
    throw Error(ErrorCode::NoncommutingPeripheral, "meridian and longitude images do not commute");
  SplittingData d;
  d.inertia = generated(g, {p.mu});
  d.decomposition = generated(g, {p.mu, p.lambda});
  d.e = static_cast<int>(d.inertia.size());
  d.f = static_cast<int>(d.decomposition.size()) / d.e;
  d.g = g.order() / static_cast<int>(d.decomposition.size());
  if (d.e == 1)
    for (auto& c : conjugacy_classes(g))
      if (c.contains(p.lambda)) d.frobenius = std::move(c);
  d.components = subcover_components(p, {g.identity()});
  return d;
}

std::vector<ElementSet> left_cosets(const FiniteGroup& g, const ElementSet& h) {
  std::vector<ElementSet> out;
  std::vector<char> seen(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ElementSet c;
    for (int y : h) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    for (int y : c) seen[y] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<SubcoverComponent> subcover_components(const PeripheralImage& p, const ElementSet& h) {
  const auto& g = *p.target;
  if (!is_subgroup(g, h)) throw Error(ErrorCode::NotASubgroup, "H is not a subgroup of " + g.label());
  const auto cosets = left_cosets(g, h);
  std::vector<int> coset_of(g.order());
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int x : cosets[i]) coset_of[x] = static_cast<int>(i);
  const auto d = generated(g, {p.mu, p.lambda});
  const auto inertia = generated(g, {p.mu});

  std::vector<SubcoverComponent> out;
  std::vector<char> placed(cosets.size(), 0);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (placed[i]) continue;
    SubcoverComponent comp;
    comp.id = static_cast<int>(out.size());
    const int rep = cosets[i].front();
    for (int x : d) {
      const int c = coset_of[g.mul(x, rep)];
      if (!placed[c]) {
        placed[c] = 1;
        comp.cosets.push_back(c);
      }
    }
    std::sort(comp.cosets.begin(), comp.cosets.end());
    // D is abelian, so every I-orbit inside one D-orbit has the same size.
    std::vector<int> i_orbit;
    for (int x : inertia) i_orbit.push_back(coset_of[g.mul(x, rep)]);
    std::sort(i_orbit.begin(), i_orbit.end());
    comp.e = static_cast<int>(std::unique(i_orbit.begin(), i_orbit.end()) - i_orbit.begin());
    comp.f = static_cast<int>(comp.cosets.size()) / comp.e;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_totally_split(const PeripheralImage& p) {
  return p.mu == p.target->identity() && p.lambda == p.target->identity();
}

std::string_view to_string(LengthConvention convention) {
  switch (convention) {
    case LengthConvention::DecompOrder: return "DECOMP_ORDER";
    case LengthConvention::CoveringDegree: return "COVERING_DEGREE";
  }
  return "UNKNOWN";
}

double induced_length(double base, const SplittingData& data, LengthConvention convention) {
  switch (convention) {
    case LengthConvention::DecompOrder: return static_cast<double>(data.decomposition.size()) * base;
    case LengthConvention::CoveringDegree: return static_cast<double>(data.f) * base;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown length convention");
}

ElementSet compositum(const FiniteGroup& g, const ElementSet& n1, const ElementSet& n2) {
  require_normal(g, n1);
  require_normal(g, n2);
  return intersect(n1, n2);
}

std::vector<ConjClass> split_class_set(const FiniteGroup& g, const ElementSet& n) {
  require_normal(g, n);
  std::vector<ConjClass> out;
  for (auto& c : conjugacy_classes(g))
    if (std::binary_search(n.begin(), n.end(), c.representative)) out.push_back(std::move(c));
  return out;
}

SweepReport split_rigidity_sweep(const std::vector<std::shared_ptr<const FiniteGroup>>& groups, int order_bound) {
  if (order_bound > kNormalSubgroupBound)
    throw Error(ErrorCode::GroupTooLarge, "sweep bound " + std::to_string(order_bound) + " exceeds " +
                                              std::to_string(kNormalSubgroupBound));
  SweepReport report;
  report.order_bound = order_bound;
  for (const auto& g : groups) {
    if (g->order() > order_bound) continue;
    ++report.groups;
    const auto ns = normal_subgroups(*g);
    std::vector<std::vector<ConjClass>> split;
    for (const auto& n : ns) split.push_back(split_class_set(*g, n));
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        SweepRow row{g->label(), g->order(), ns[i], ns[j], split[i] != split[j]};
        if (!row.distinguished) ++report.counterexamples;
        report.rows.push_back(std::move(row));
      }
  }
  return report;
}

SweepReport split_rigidity_sweep(int order_bound) { return split_rigidity_sweep(group_library(), order_bound); }

TowerCheck multiplicativity_check(const PeripheralImage& p, const ElementSet& n) {
  const auto& g = *p.target;
  const auto q = quotient_group(g, n);
  auto quotient = std::make_shared<const FiniteGroup>(q.group);
  const auto total = splitting_data(p);
  const auto below = splitting_data(PeripheralImage{quotient, q.projection[p.mu], q.projection[p.lambda]});
  TowerCheck t;
  t.f_total = total.f;
  t.f_quotient = below.f;
  const auto dn = intersect(total.decomposition, n).size();
  const auto in = intersect(total.inertia, n).size();
  t.f_intermediate = static_cast<int>(dn / in);
  t.holds = t.f_total == t.f_quotient * t.f_intermediate;
  return t;
}

}  // namespace chebo
