#include "qwalk/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qwalk {

namespace {

std::string tuple_str(const std::vector<index_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Collision classes of a sorted-by-value eigenvalue list.  A class is grown
// while the gap to its first member stays within tol, so the max in-class
// spread is bounded by tol by construction.
std::vector<std::vector<index_t>> cluster(const std::vector<double>& lambda,
                                          double tol) {
  const index_t n = static_cast<index_t>(lambda.size());
  std::vector<index_t> idx(n);
  std::iota(idx.begin(), idx.end(), index_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](index_t a, index_t b) {
    return lambda[a] < lambda[b];
  });

  std::vector<std::vector<index_t>> classes;
  for (index_t i = 0; i < n; ++i) {
    if (classes.empty() ||
        lambda[idx[i]] - lambda[classes.back().front()] > tol) {
      classes.emplace_back();
    }
    classes.back().push_back(idx[i]);
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  return classes;
}

Spectrum finish_spectrum(std::vector<double> lambda, double tol) {
  Spectrum s;
  s.collision_tol = tol;
  s.collision_classes = cluster(lambda, tol);
  s.eigenvalues = std::move(lambda);
  s.class_of.assign(s.eigenvalues.size(), 0);
  for (std::size_t c = 0; c < s.collision_classes.size(); ++c)
    for (index_t a : s.collision_classes[c])
      s.class_of[static_cast<std::size_t>(a)] = static_cast<index_t>(c);
  return s;
}

}  // namespace

index_t GroupCirculantSpec::order() const { return group_order(factors); }

index_t Spectrum::collision_pair_count() const {
  index_t pairs = 0;
  for (const auto& c : collision_classes) {
    const index_t m = static_cast<index_t>(c.size());
    pairs += m * (m - 1);
  }
  return pairs;
}

CirculantSpec make_cycle(index_t n) {
  if (n < 2) throw std::invalid_argument("make_cycle: n must be >= 2");
  if (n == 2) return CirculantSpec{2, {1}, {2.0}};
  return CirculantSpec{n, {1, n - 1}, {1.0, 1.0}};
}

CirculantSpec make_complete(index_t n) {
  if (n < 2) throw std::invalid_argument("make_complete: n must be >= 2");
  CirculantSpec spec;
  spec.n = n;
  spec.conn.resize(static_cast<std::size_t>(n - 1));
  std::iota(spec.conn.begin(), spec.conn.end(), index_t{1});
  spec.weights.assign(spec.conn.size(), 1.0);
  return spec;
}

CirculantSpec make_circulant(index_t n, std::vector<index_t> conn,
                             std::vector<double> weights) {
  if (n < 2) throw std::invalid_argument("make_circulant: n must be >= 2");
  if (conn.empty())
    throw std::invalid_argument("make_circulant: connection set is empty");
  if (weights.empty()) weights.assign(conn.size(), 1.0);
  if (weights.size() != conn.size())
    throw std::invalid_argument(
        "make_circulant: weights and conn differ in length");

  std::vector<std::size_t> order(conn.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return conn[a] < conn[b]; });

  CirculantSpec spec;
  spec.n = n;
  for (std::size_t i : order) {
    spec.conn.push_back(conn[i]);
    spec.weights.push_back(weights[i]);
  }

  for (std::size_t i = 0; i < spec.conn.size(); ++i) {
    const index_t d = spec.conn[i];
    if (d == 0)
      throw std::invalid_argument(
          "make_circulant: offset 0 would give a self-loop");
    if (d < 0 || d >= n)
      throw std::invalid_argument("make_circulant: offset " +
                                  std::to_string(d) + " outside [1, n-1]");
    if (i > 0 && spec.conn[i - 1] == d)
      throw std::invalid_argument("make_circulant: duplicate offset " +
                                  std::to_string(d));
    if (!(spec.weights[i] > 0.0))
      throw std::invalid_argument("make_circulant: weight for offset " +
                                  std::to_string(d) + " must be positive");
  }

  for (std::size_t i = 0; i < spec.conn.size(); ++i) {
    const index_t d = spec.conn[i];
    const index_t inv = (n - d) % n;
    auto it = std::lower_bound(spec.conn.begin(), spec.conn.end(), inv);
    if (it == spec.conn.end() || *it != inv)
      throw std::invalid_argument(
          "make_circulant: connection set not closed under negation: offset " +
          std::to_string(d) + " lacks its inverse " + std::to_string(inv));
    const std::size_t j =
        static_cast<std::size_t>(it - spec.conn.begin());
    if (spec.weights[i] != spec.weights[j])
      throw std::invalid_argument(
          "make_circulant: asymmetric weights on offsets " +
          std::to_string(d) + " and " + std::to_string(inv));
  }
  return spec;
}

GroupCirculantSpec make_hypercube(index_t d) {
  if (d < 1) throw std::invalid_argument("make_hypercube: d must be >= 1");
  GroupCirculantSpec spec;
  spec.factors.assign(static_cast<std::size_t>(d), 2);
  for (index_t i = 0; i < d; ++i) {
    std::vector<index_t> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    spec.conn.push_back(std::move(e));
  }
  std::sort(spec.conn.begin(), spec.conn.end());
  return spec;
}

GroupCirculantSpec make_group_circulant(
    std::vector<index_t> factors, std::vector<std::vector<index_t>> conn) {
  if (factors.empty())
    throw std::invalid_argument("group circulant: factor list is empty");
  for (index_t f : factors)
    if (f < 1)
      throw std::invalid_argument("group circulant: factor " +
                                  std::to_string(f) + " must be >= 1");
  if (group_order(factors) < 2)
    throw std::invalid_argument("group circulant: group order must be >= 2");
  if (conn.empty())
    throw std::invalid_argument("group circulant: connection set is empty");

  std::sort(conn.begin(), conn.end());
  GroupCirculantSpec spec;
  spec.factors = std::move(factors);
  spec.conn = std::move(conn);

  const std::size_t k = spec.factors.size();
  for (std::size_t i = 0; i < spec.conn.size(); ++i) {
    const auto& x = spec.conn[i];
    if (x.size() != k)
      throw std::invalid_argument("group circulant: element " + tuple_str(x) +
                                  " has wrong arity");
    bool identity = true;
    for (std::size_t m = 0; m < k; ++m) {
      if (x[m] < 0 || x[m] >= spec.factors[m])
        throw std::invalid_argument("group circulant: element " +
                                    tuple_str(x) + " out of range");
      identity = identity && x[m] == 0;
    }
    if (identity)
      throw std::invalid_argument(
          "group circulant: identity element would give a self-loop");
    if (i > 0 && spec.conn[i - 1] == x)
      throw std::invalid_argument("group circulant: duplicate element " +
                                  tuple_str(x));
  }

  for (const auto& x : spec.conn) {
    std::vector<index_t> inv(k);
    for (std::size_t m = 0; m < k; ++m)
      inv[m] = (spec.factors[m] - x[m]) % spec.factors[m];
    if (!std::binary_search(spec.conn.begin(), spec.conn.end(), inv))
      throw std::invalid_argument(
          "group circulant: connection set not closed under negation: "
          "element " + tuple_str(x) + " lacks its inverse " + tuple_str(inv));
  }
  return spec;
}

index_t group_order(const std::vector<index_t>& factors) {
  index_t n = 1;
  for (index_t f : factors) n *= f;
  return n;
}

index_t tuple_rank(const std::vector<index_t>& factors,
                   const std::vector<index_t>& tuple) {
  if (tuple.size() != factors.size())
    throw std::invalid_argument("tuple_rank: arity mismatch");
  index_t r = 0;
  for (std::size_t m = 0; m < factors.size(); ++m) {
    index_t x = tuple[m] % factors[m];
    if (x < 0) x += factors[m];
    r = r * factors[m] + x;
  }
  return r;
}

std::vector<index_t> rank_tuple(const std::vector<index_t>& factors,
                                index_t rank) {
  std::vector<index_t> t(factors.size());
  for (std::size_t m = factors.size(); m-- > 0;) {
    t[m] = rank % factors[m];
    rank /= factors[m];
  }
  return t;
}

index_t negate_rank(const std::vector<index_t>& factors, index_t rank) {
  auto t = rank_tuple(factors, rank);
  for (std::size_t m = 0; m < t.size(); ++m)
    t[m] = (factors[m] - t[m]) % factors[m];
  return tuple_rank(factors, t);
}

cplx character(const std::vector<index_t>& factors,
               const std::vector<index_t>& a, const std::vector<index_t>& x) {
  if (a.size() != factors.size() || x.size() != factors.size())
    throw std::invalid_argument("character: arity mismatch");
  double frac = 0.0;  // sum of a_m x_m / n_m, each reduced mod 1
  for (std::size_t m = 0; m < factors.size(); ++m) {
    const index_t f = factors[m];
    index_t am = a[m] % f, xm = x[m] % f;
    if (am < 0) am += f;
    if (xm < 0) xm += f;
    frac += static_cast<double>((am * xm) % f) / static_cast<double>(f);
  }
  const double theta = two_pi * frac;
  return {std::cos(theta), std::sin(theta)};
}

Spectrum eigenvalues_circulant(const CirculantSpec& spec,
                               double collision_tol) {
  const index_t n = spec.n;
  std::vector<double> lambda(static_cast<std::size_t>(n));
  for (index_t j = 0; j < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < spec.conn.size(); ++i) {
      const index_t m = (j * spec.conn[i]) % n;
      sum += spec.weights[i] *
             std::cos(two_pi * static_cast<double>(m) / static_cast<double>(n));
    }
    lambda[static_cast<std::size_t>(j)] = sum;
  }
  return finish_spectrum(std::move(lambda), collision_tol);
}

Spectrum eigenvalues_group(const GroupCirculantSpec& spec,
                           double collision_tol) {
  const index_t n = spec.order();
  const auto& factors = spec.factors;
  std::vector<double> lambda(static_cast<std::size_t>(n));
  std::vector<index_t> a(factors.size(), 0);
  for (index_t rank = 0; rank < n; ++rank) {
    double re = 0.0;
    for (const auto& x : spec.conn) {
      double frac = 0.0;
      for (std::size_t m = 0; m < factors.size(); ++m)
        frac += static_cast<double>((a[m] * x[m]) % factors[m]) /
                static_cast<double>(factors[m]);
      re += std::cos(two_pi * frac);
    }
    lambda[static_cast<std::size_t>(rank)] = re;
    // next tuple, last factor fastest
    for (std::size_t m = factors.size(); m-- > 0;) {
      if (++a[m] < factors[m]) break;
      a[m] = 0;
    }
  }
  return finish_spectrum(std::move(lambda), collision_tol);
}

std::vector<std::vector<double>> adjacency_matrix(const CirculantSpec& spec) {
  const index_t n = spec.n;
  if (n > dense_order_cap)
    throw resource_limit_error("adjacency_matrix: order " + std::to_string(n) +
                               " exceeds dense cap " +
                               std::to_string(dense_order_cap));
  std::vector<std::vector<double>> A(
      static_cast<std::size_t>(n),
      std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (index_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < spec.conn.size(); ++i) {
      const index_t k = (j + spec.conn[i]) % n;
      A[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] +=
          spec.weights[i];
    }
  return A;
}

std::vector<std::vector<double>> adjacency_matrix(
    const GroupCirculantSpec& spec) {
  const index_t n = spec.order();
  if (n > dense_order_cap)
    throw resource_limit_error("adjacency_matrix: order " + std::to_string(n) +
                               " exceeds dense cap " +
                               std::to_string(dense_order_cap));
  std::vector<std::vector<double>> A(
      static_cast<std::size_t>(n),
      std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (index_t j = 0; j < n; ++j) {
    const auto v = rank_tuple(spec.factors, j);
    for (const auto& x : spec.conn) {
      std::vector<index_t> w(v.size());
      for (std::size_t m = 0; m < v.size(); ++m)
        w[m] = (v[m] + x[m]) % spec.factors[m];
      const index_t k = tuple_rank(spec.factors, w);
      A[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] += 1.0;
    }
  }
  return A;
}

HadamardMatrix hadamard_matrix(index_t order) {
  if (order < 1 || (order & (order - 1)) != 0)
    throw std::invalid_argument("hadamard_matrix: order " +
                                std::to_string(order) +
                                " is not a power of two");
  if (order > dense_order_cap)
    throw resource_limit_error("hadamard_matrix: order " +
                               std::to_string(order) + " exceeds dense cap " +
                               std::to_string(dense_order_cap));
  HadamardMatrix H;
  H.order = order;
  H.entries.assign(static_cast<std::size_t>(order * order), 1);
  // Sylvester doubling: H_{2m} = [[H_m, H_m], [H_m, -H_m]]
  for (index_t m = 1; m < order; m *= 2) {
    for (index_t r = 0; r < m; ++r)
      for (index_t c = 0; c < m; ++c) {
        const std::int8_t v = H.entries[static_cast<std::size_t>(r * order + c)];
        H.entries[static_cast<std::size_t>(r * order + (c + m))] = v;
        H.entries[static_cast<std::size_t>((r + m) * order + c)] = v;
        H.entries[static_cast<std::size_t>((r + m) * order + (c + m))] =
            static_cast<std::int8_t>(-v);
      }
  }
  return H;
}

namespace {

std::optional<std::pair<index_t, index_t>> witness_impl(
    const std::vector<index_t>& factors, const Spectrum& s) {
  const index_t n = static_cast<index_t>(s.eigenvalues.size());
  for (index_t a = 0; a < n; ++a) {
    const index_t b = negate_rank(factors, a);
    if (b != a && std::abs(s.eigenvalues[static_cast<std::size_t>(a)] -
                           s.eigenvalues[static_cast<std::size_t>(b)]) <=
                      s.collision_tol)
      return std::make_pair(std::min(a, b), std::max(a, b));
  }
  for (index_t a = 0; a < n; ++a) {
    const auto& c =
        s.collision_classes[static_cast<std::size_t>(s.class_of[a])];
    if (c.size() >= 2 && c.front() == a) return std::make_pair(c[0], c[1]);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<index_t, index_t>> repeated_eigenvalue_witness(
    const CirculantSpec& spec) {
  return witness_impl({spec.n}, eigenvalues_circulant(spec));
}

std::optional<std::pair<index_t, index_t>> repeated_eigenvalue_witness(
    const GroupCirculantSpec& spec) {
  return witness_impl(spec.factors, eigenvalues_group(spec));
}

}  // namespace qwalk
