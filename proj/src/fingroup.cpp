#include "chebolab/fingroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace chebo {

int FiniteGroup::pow(int a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = identity_;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

FiniteGroup make_group(std::vector<int> table, int order, std::string label, int order_bound) {
  if (order < 1) throw Error(ErrorCode::InvalidTable, "group order must be at least 1");
  if (order > order_bound)
    throw Error(ErrorCode::GroupTooLarge,
                "order " + std::to_string(order) + " exceeds bound " + std::to_string(order_bound));
  const auto n = static_cast<std::size_t>(order);
  if (table.size() != n * n) throw Error(ErrorCode::InvalidTable, "table is not n x n");
  for (int x : table)
    if (x < 0 || x >= order) throw Error(ErrorCode::InvalidTable, "table entry out of range");

  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

  int identity = -1;
  for (int e = 0; e < order && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < order && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

  std::vector<int> inverse(n, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b)
      if (at(a, b) == identity && at(b, a) == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0) throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < order; ++c)
        if (at(ab, c) != at(a, at(b, c)))
          throw Error(ErrorCode::NonAssociative, "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                                     std::to_string(c) + ")");
    }

  FiniteGroup g;
  g.order_ = order;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.label_ = std::move(label);
  return g;
}

FiniteGroup make_group(const std::vector<std::vector<int>>& table, std::string label, int order_bound) {
  const int n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(table.size() * table.size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::InvalidTable, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group(std::move(flat), n, std::move(label), order_bound);
}

bool ConjClass::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjClass> classes;
  std::vector<bool> seen(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ConjClass c;
    c.representative = x;
    for (int h = 0; h < g.order(); ++h) {
      const int y = g.conj(h, x);
      if (!seen[y]) {
        seen[y] = true;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<int> class_index(const std::vector<ConjClass>& classes, int order) {
  std::vector<int> index(order, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (int x : classes[i].members) index[x] = static_cast<int>(i);
  return index;
}

ElementSet subgroup_generated(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (int s : gens) {
      const int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& h) {
  if (!std::binary_search(h.begin(), h.end(), g.identity())) return false;
  for (int a : h) {
    if (a < 0 || a >= g.order()) return false;
    for (int b : h)
      if (!std::binary_search(h.begin(), h.end(), g.mul(a, g.inv(b)))) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) return false;
  for (int x : n)
    for (int h = 0; h < g.order(); ++h)
      if (!std::binary_search(n.begin(), n.end(), g.conj(h, x))) return false;
  return true;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g, int order_bound) {
  if (g.order() > order_bound)
    throw Error(ErrorCode::GroupTooLarge,
                "normal subgroup enumeration bounded at order " + std::to_string(order_bound));
  const auto classes = conjugacy_classes(g);

  // Every normal subgroup is reached from {e} by adjoining one class at a time.
  std::set<ElementSet> found;
  std::vector<ElementSet> queue{ElementSet{g.identity()}};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementSet current = queue[i];
    for (const auto& c : classes) {
      if (std::binary_search(current.begin(), current.end(), c.representative)) continue;
      std::vector<int> gens = current;
      gens.insert(gens.end(), c.members.begin(), c.members.end());
      ElementSet next = subgroup_generated(g, gens);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& g, const ElementSet& n) {
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");
  std::vector<int> projection(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (projection[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : n) projection[g.mul(x, k)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[static_cast<std::size_t>(a) * q + b] = projection[g.mul(reps[a], reps[b])];
  return {make_group(std::move(table), q, g.label() + "/N"), std::move(projection)};
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string_view to_string(SourceModel model) {
  switch (model) {
    case SourceModel::SemidirectZ2Z: return "SEMIDIRECT_Z2_Z";
    case SourceModel::FreeProdZ2Z3: return "FREE_PROD_Z2_Z3";
    case SourceModel::FreeAbelian: return "FREE_ABELIAN";
  }
  return "UNKNOWN";
}

bool satisfies_relations(const QuotientMap& q) {
  if (!q.target) return false;
  const FiniteGroup& g = *q.target;
  const auto& im = q.generator_images;
  for (int x : im)
    if (x < 0 || x >= g.order()) return false;
  switch (q.source_model) {
    case SourceModel::SemidirectZ2Z: {
      if (im.size() != 3 || !q.monodromy) return false;
      const Mat2& a = *q.monodromy;
      const int x = im[0], y = im[1], t = im[2];
      auto image_of = [&](std::int64_t v0, std::int64_t v1) { return g.mul(g.pow(x, v0), g.pow(y, v1)); };
      return g.commute(x, y) && g.conj(t, x) == image_of(a(0, 0), a(1, 0)) &&
             g.conj(t, y) == image_of(a(0, 1), a(1, 1));
    }
    case SourceModel::FreeProdZ2Z3:
      return im.size() == 2 && g.pow(im[0], 2) == g.identity() && g.pow(im[1], 3) == g.identity();
    case SourceModel::FreeAbelian:
      for (std::size_t i = 0; i < im.size(); ++i)
        for (std::size_t j = i + 1; j < im.size(); ++j)
          if (!g.commute(im[i], im[j])) return false;
      return true;
  }
  return false;
}

bool is_surjective(const QuotientMap& q) {
  return q.target && static_cast<int>(subgroup_generated(*q.target, q.generator_images).size()) == q.target->order();
}

int SemidirectQuotient::encode(std::int64_t v0, std::int64_t v1, std::int64_t k) const {
  return static_cast<int>(mod<std::int64_t>(k, monodromy_order) * modulus * modulus + mod(v0, modulus) * modulus +
                          mod(v1, modulus));
}

SemidirectQuotient semidirect_quotient(std::int64_t m, const Mat2& a) {
  if (m < 2) throw Error(ErrorCode::ModulusTooSmall, "modulus must be at least 2");
  if (a.determinant() != 1) throw Error(ErrorCode::InvalidArgument, "monodromy must have determinant 1");
  const int r = order_mod(a, m);
  const std::int64_t n64 = m * m * r;
  if (n64 > kMaxGroupOrder)
    throw Error(ErrorCode::GroupTooLarge, "(Z/m)^2 x| Z/r has order " + std::to_string(n64));
  const int n = static_cast<int>(n64);

  std::vector<Mat2> powers{reduce_mod(Mat2::Identity(), m)};
  for (int k = 1; k < r; ++k) powers.push_back(product_mod(powers.back(), a, m));

  SemidirectQuotient out;
  out.modulus = m;
  out.monodromy_order = r;
  out.monodromy = a;

  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p) {
    const std::int64_t k = p / (m * m), v0 = (p / m) % m, v1 = p % m;
    for (int q = 0; q < n; ++q) {
      const std::int64_t l = q / (m * m), w0 = (q / m) % m, w1 = q % m;
      const Mat2& ak = powers[k];
      table[static_cast<std::size_t>(p) * n + q] =
          out.encode(v0 + ak(0, 0) * w0 + ak(0, 1) * w1, v1 + ak(1, 0) * w0 + ak(1, 1) * w1, k + l);
    }
  }
  std::ostringstream label;
  label << "(Z/" << m << ")^2 x| Z/" << r << " [A=" << a(0, 0) << "," << a(0, 1) << "," << a(1, 0) << ","
        << a(1, 1) << "]";
  auto group = std::make_shared<const FiniteGroup>(make_group(std::move(table), n, label.str()));

  out.map.source_model = SourceModel::SemidirectZ2Z;
  out.map.target = std::move(group);
  out.map.monodromy = a;
  out.map.generator_images = {out.encode(1, 0, 0), out.encode(0, 1, 0), out.encode(0, 0, 1)};
  return out;
}

std::vector<QuotientMap> enumerate_pairs_23(std::shared_ptr<const FiniteGroup> g, bool dedup) {
  std::vector<int> involutions, triples;
  for (int x = 0; x < g->order(); ++x) {
    if (g->pow(x, 2) == g->identity()) involutions.push_back(x);
    if (g->pow(x, 3) == g->identity()) triples.push_back(x);
  }
  std::vector<QuotientMap> out;
  for (int s : involutions)
    for (int t : triples) {
      const int gens[] = {s, t};
      if (static_cast<int>(subgroup_generated(*g, gens).size()) != g->order()) continue;
      if (dedup) {
        bool least = true;
        for (int h = 0; h < g->order() && least; ++h) {
          const std::pair<int, int> moved{g->conj(h, s), g->conj(h, t)};
          if (moved < std::pair{s, t}) least = false;
        }
        if (!least) continue;
      }
      out.push_back({SourceModel::FreeProdZ2Z3, {s, t}, g, std::nullopt});
    }
  return out;
}

}  // namespace chebo
