#include "chebolab/group_library.hpp"

#include <algorithm>
#include <string>

namespace chebo {
namespace {

std::string name(const std::string& base, int n) { return base + std::to_string(n); }

std::vector<int> flat_table(int n, auto&& product) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = product(a, b);
  return table;
}

int int_pow_mod(int base, int e, int m) {
  int r = 1 % m;
  for (int i = 0; i < e; ++i) r = (r * base) % m;
  return r;
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  return make_group(flat_table(n, [n](int a, int b) { return (a + b) % n; }), n, name("Z", n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int gn = g.order(), hn = h.order(), n = gn * hn;
  if (n > kMaxGroupOrder) throw Error(ErrorCode::GroupTooLarge, "direct product too large");
  auto table = flat_table(n, [&](int a, int b) { return g.mul(a / hn, b / hn) * hn + h.mul(a % hn, b % hn); });
  return make_group(std::move(table), n, g.label() + "x" + h.label());
}

FiniteGroup metacyclic(int n, int m, int k) {
  if (int_pow_mod(mod(k, n), m, n) != 1 % n)
    throw Error(ErrorCode::InvalidArgument, "k^m must be 1 mod n");
  const int order = n * m;
  std::vector<int> kpow(m);
  for (int j = 0; j < m; ++j) kpow[j] = int_pow_mod(mod(k, n), j, n);
  auto table = flat_table(order, [&](int p, int q) {
    const int i = p % n, j = p / n, i2 = q % n, l = q / n;
    return ((j + l) % m) * n + (i + kpow[j] * i2) % n;
  });
  return make_group(std::move(table), order,
                    "Z" + std::to_string(n) + ":Z" + std::to_string(m) + "[" + std::to_string(k) + "]");
}

FiniteGroup dicyclic(int n) {
  const int two_n = 2 * n, order = 4 * n;
  // a^i x^j at index j * 2n + i
  auto table = flat_table(order, [&](int p, int q) {
    const int i = p % two_n, j = p / two_n, k = q % two_n, l = q / two_n;
    if (j == 0) return l * two_n + (i + k) % two_n;
    const int base = mod(i - k, two_n);
    if (l == 0) return two_n + base;
    return (base + n) % two_n;
  });
  return make_group(std::move(table), order, name("Dic", n));
}

FiniteGroup extension_by_automorphism(const FiniteGroup& n, const std::vector<int>& phi, int m) {
  const int nn = n.order(), order = nn * m;
  if (static_cast<int>(phi.size()) != nn) throw Error(ErrorCode::InvalidArgument, "phi has wrong length");
  std::vector<std::vector<int>> powers{std::vector<int>(nn)};
  for (int x = 0; x < nn; ++x) powers[0][x] = x;
  for (int j = 1; j <= m; ++j) {
    std::vector<int> next(nn);
    for (int x = 0; x < nn; ++x) next[x] = phi[powers.back()[x]];
    powers.push_back(std::move(next));
  }
  if (powers[m] != powers[0]) throw Error(ErrorCode::InvalidArgument, "phi^m is not the identity");
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b]))
        throw Error(ErrorCode::InvalidArgument, "phi is not a homomorphism");
  auto table = flat_table(order, [&](int p, int q) {
    const int x = p % nn, j = p / nn, y = q % nn, l = q / nn;
    return ((j + l) % m) * nn + n.mul(x, powers[j][y]);
  });
  return make_group(std::move(table), order, n.label() + ":Z" + std::to_string(m));
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators, std::string label) {
  if (generators.empty()) return make_group({0}, 1, std::move(label));
  const std::size_t d = generators.front().size();
  std::vector<int> identity(d);
  for (std::size_t i = 0; i < d; ++i) identity[i] = static_cast<int>(i);

  auto compose = [](const std::vector<int>& a, const std::vector<int>& b) {
    // (a * b)(i) = a(b(i))
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
  };

  std::vector<std::vector<int>> elements{identity};
  std::map<std::vector<int>, int> seen{{identity, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : generators) {
      auto next = compose(elements[i], g);
      if (seen.emplace(next, 0).second) {
        elements.push_back(std::move(next));
        if (elements.size() > static_cast<std::size_t>(kMaxGroupOrder))
          throw Error(ErrorCode::GroupTooLarge, "permutation group too large");
      }
    }
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) seen[elements[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elements.size());
  auto table = flat_table(n, [&](int a, int b) { return seen.at(compose(elements[a], elements[b])); });
  return make_group(std::move(table), n, std::move(label));
}

std::array<std::int64_t, 4> MatrixGroup::key(const Mat2& m) const {
  std::array<std::int64_t, 4> k{mod(m(0, 0), p), mod(m(0, 1), p), mod(m(1, 0), p), mod(m(1, 1), p)};
  if (projective) {
    std::array<std::int64_t, 4> neg;
    for (int i = 0; i < 4; ++i) neg[i] = mod(-k[i], p);
    k = std::min(k, neg);
  }
  return k;
}

int MatrixGroup::index_of(const Mat2& m) const {
  auto it = lookup_.find(key(m));
  if (it == lookup_.end()) throw Error(ErrorCode::InvalidArgument, "matrix is not in the group");
  return it->second;
}

MatrixGroup special_linear(std::int64_t p, bool projective) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "special_linear needs a prime");
  MatrixGroup out;
  out.p = p;
  out.projective = projective;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) {
          if (mod(a * d - b * c, p) != 1) continue;
          const Mat2 m = make_mat2(a, b, c, d);
          const auto k = out.key(m);
          if (out.lookup_.count(k)) continue;
          out.lookup_.emplace(k, 0);
          out.elements.push_back(make_mat2(k[0], k[1], k[2], k[3]));
        }
  const int n = static_cast<int>(out.elements.size());
  if (n > kMaxGroupOrder) throw Error(ErrorCode::GroupTooLarge, "matrix group too large");
  for (int i = 0; i < n; ++i) out.lookup_[out.key(out.elements[i])] = i;
  auto table = flat_table(n, [&](int a, int b) { return out.index_of(product_mod(out.elements[a], out.elements[b], p)); });
  out.group = std::make_shared<const FiniteGroup>(
      make_group(std::move(table), n, std::string(projective ? "PSL2(F" : "SL2(F") + std::to_string(p) + ")"));
  return out;
}

namespace {

FiniteGroup labelled(FiniteGroup g, std::string label) {
  g.set_label(std::move(label));
  return g;
}

FiniteGroup product_of(std::initializer_list<int> cyclic_orders, std::string label) {
  FiniteGroup g = cyclic(1);
  bool first = true;
  for (int n : cyclic_orders) {
    g = first ? cyclic(n) : direct_product(g, cyclic(n));
    first = false;
  }
  return labelled(std::move(g), std::move(label));
}

// Automorphisms of Z4 x Z2 (index 2x + y) used for the order-16 extensions.
std::vector<int> z4z2_automorphism(auto&& image) {
  std::vector<int> phi(8);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 2; ++y) {
      const auto [u, v] = image(x, y);
      phi[2 * x + y] = 2 * mod(u, 4) + mod(v, 2);
    }
  return phi;
}

std::vector<std::shared_ptr<const FiniteGroup>> build_library() {
  std::vector<FiniteGroup> gs;
  auto add = [&](FiniteGroup g) { gs.push_back(std::move(g)); };

  const FiniteGroup z2 = cyclic(2);
  const FiniteGroup z4z2 = product_of({4, 2}, "Z4xZ2");

  add(cyclic(1));
  add(cyclic(2));
  add(cyclic(3));
  add(cyclic(4));
  add(product_of({2, 2}, "Z2^2"));
  add(cyclic(5));
  add(cyclic(6));
  add(labelled(metacyclic(3, 2, 2), "S3"));
  add(cyclic(7));
  add(cyclic(8));
  add(z4z2);
  add(product_of({2, 2, 2}, "Z2^3"));
  add(labelled(metacyclic(4, 2, 3), "D8"));
  add(labelled(dicyclic(2), "Q8"));
  add(cyclic(9));
  add(product_of({3, 3}, "Z3^2"));
  add(cyclic(10));
  add(labelled(metacyclic(5, 2, 4), "D10"));
  add(cyclic(11));
  add(cyclic(12));
  add(product_of({2, 6}, "Z2xZ6"));
  add(labelled(metacyclic(6, 2, 5), "D12"));
  add(labelled(permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, ""), "A4"));
  add(labelled(dicyclic(3), "Dic3"));
  add(cyclic(13));
  add(cyclic(14));
  add(labelled(metacyclic(7, 2, 6), "D14"));
  add(cyclic(15));

  // Order 16: all fourteen isomorphism types.
  add(cyclic(16));
  add(product_of({4, 4}, "Z4^2"));
  add(labelled(extension_by_automorphism(z4z2, z4z2_automorphism([](int x, int y) {
                                           return std::pair{x, x + y};
                                         }), 2),
               "(Z4xZ2):Z2"));
  add(labelled(metacyclic(4, 4, 3), "Z4:Z4"));
  add(product_of({8, 2}, "Z8xZ2"));
  add(labelled(metacyclic(8, 2, 5), "M16"));
  add(labelled(metacyclic(8, 2, 7), "D16"));
  add(labelled(metacyclic(8, 2, 3), "SD16"));
  add(labelled(dicyclic(4), "Q16"));
  add(product_of({4, 2, 2}, "Z4xZ2^2"));
  add(labelled(direct_product(z2, metacyclic(4, 2, 3)), "Z2xD8"));
  add(labelled(direct_product(z2, dicyclic(2)), "Z2xQ8"));
  add(labelled(extension_by_automorphism(z4z2, z4z2_automorphism([](int x, int y) {
                                           return std::pair{x + 2 * y, y};
                                         }), 2),
               "Pauli"));
  add(product_of({2, 2, 2, 2}, "Z2^4"));

  // Order 24: a selection.
  add(cyclic(24));
  add(product_of({2, 12}, "Z2xZ12"));
  add(product_of({2, 2, 6}, "Z2^2xZ6"));
  add(labelled(permutation_group({{1, 2, 3, 0}, {1, 0, 2, 3}}, ""), "S4"));
  add(labelled(FiniteGroup(*special_linear(3, false).group), "SL2(F3)"));
  add(labelled(direct_product(z2, permutation_group({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4")), "Z2xA4"));
  add(labelled(metacyclic(12, 2, 11), "D24"));
  add(labelled(dicyclic(6), "Dic6"));
  add(labelled(metacyclic(3, 8, 2), "Z3:Z8"));
  add(labelled(direct_product(cyclic(4), metacyclic(3, 2, 2)), "Z4xS3"));
  add(labelled(direct_product(cyclic(3), dicyclic(2)), "Z3xQ8"));
  add(labelled(direct_product(product_of({2, 2}, "Z2^2"), metacyclic(3, 2, 2)), "Z2^2xS3"));

  std::stable_sort(gs.begin(), gs.end(), [](const FiniteGroup& a, const FiniteGroup& b) { return a.order() < b.order(); });
  std::vector<std::shared_ptr<const FiniteGroup>> out;
  for (auto& g : gs) out.push_back(std::make_shared<const FiniteGroup>(std::move(g)));
  return out;
}

}  // namespace

const std::vector<std::shared_ptr<const FiniteGroup>>& group_library() {
  static const auto library = build_library();
  return library;
}

std::vector<std::shared_ptr<const FiniteGroup>> library_up_to(int order_bound) {
  std::vector<std::shared_ptr<const FiniteGroup>> out;
  for (const auto& g : group_library())
    if (g->order() <= order_bound) out.push_back(g);
  return out;
}

}  // namespace chebo
