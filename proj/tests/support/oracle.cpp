#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

int inv_mod(int a, unsigned p) {
  for (int x = 1; x < int(p); ++x)
    if ((a * x) % int(p) == 1) return x;
  throw std::domain_error("not invertible");
}

}  // namespace

Mat identity(unsigned p, int n) {
  Mat r(p, n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

Mat mul(const Mat& x, const Mat& y) {
  if (x.m != y.n) throw std::domain_error("shape");
  Mat r(x.p, x.n, y.m);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.m; ++k)
      if (int c = x.at(i, k))
        for (int j = 0; j < y.m; ++j) r.at(i, j) = (r.at(i, j) + c * y.at(k, j)) % int(x.p);
  return r;
}

Mat add(const Mat& x, const Mat& y) {
  Mat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] + y.a[i]) % int(x.p);
  return r;
}

Mat sub(const Mat& x, const Mat& y) {
  Mat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] - y.a[i] + int(x.p)) % int(x.p);
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.p, x.m, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.m; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

int rank(Mat x) {
  const int p = int(x.p);
  int r = 0;
  for (int c = 0; c < x.m && r < x.n; ++c) {
    int piv = -1;
    for (int i = r; i < x.n; ++i)
      if (x.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < x.m; ++j) std::swap(x.at(r, j), x.at(piv, j));
    const int iv = inv_mod(x.at(r, c), x.p);
    for (int j = 0; j < x.m; ++j) x.at(r, j) = x.at(r, j) * iv % p;
    for (int i = 0; i < x.n; ++i)
      if (i != r && x.at(i, c)) {
        const int f = x.at(i, c);
        for (int j = 0; j < x.m; ++j) x.at(i, j) = ((x.at(i, j) - f * x.at(r, j)) % p + p) % p;
      }
    ++r;
  }
  return r;
}

Mat inverse(const Mat& x) {
  const int n = x.n, p = int(x.p);
  Mat a(x.p, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a.at(i, j) = x.at(i, j);
    a.at(i, n + i) = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("singular");
    for (int j = 0; j < 2 * n; ++j) std::swap(a.at(c, j), a.at(piv, j));
    const int iv = inv_mod(a.at(c, c), x.p);
    for (int j = 0; j < 2 * n; ++j) a.at(c, j) = a.at(c, j) * iv % p;
    for (int i = 0; i < n; ++i)
      if (i != c && a.at(i, c)) {
        const int f = a.at(i, c);
        for (int j = 0; j < 2 * n; ++j) a.at(i, j) = ((a.at(i, j) - f * a.at(c, j)) % p + p) % p;
      }
  }
  Mat r(x.p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = a.at(i, n + j);
  return r;
}

Mat random(unsigned p, int n, int m, std::mt19937_64& rng) {
  Mat r(p, n, m);
  std::uniform_int_distribution<int> d(0, int(p) - 1);
  for (auto& v : r.a) v = d(rng);
  return r;
}

Mat random_invertible(unsigned p, int n, std::mt19937_64& rng) {
  while (true) {
    Mat r = random(p, n, n, rng);
    if (rank(r) == n) return r;
  }
}

Mat kronecker(const Mat& x, const Mat& y) {
  Mat r(x.p, x.n * y.n, x.m * y.m);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.m; ++j)
      for (int k = 0; k < y.n; ++k)
        for (int l = 0; l < y.m; ++l) r.at(i * y.n + k, j * y.m + l) = x.at(i, j) * y.at(k, l) % int(x.p);
  return r;
}

Mat from_gf(const unisep::gf::Matrix& x) {
  Mat r(x.prime(), int(x.rows()), int(x.cols()));
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.m; ++j) r.at(i, j) = x(std::size_t(i), std::size_t(j));
  return r;
}

unisep::gf::Matrix to_gf(const Mat& x) {
  unisep::gf::Matrix r(x.p, std::size_t(x.n), std::size_t(x.m));
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.m; ++j) r.set(std::size_t(i), std::size_t(j), unisep::gf::Elem(x.at(i, j)));
  return r;
}

std::vector<int> jordan_sizes(const Mat& u) {
  const int n = u.n;
  const Mat x = sub(u, identity(u.p, n));
  // r[k] = rank(X^k); blocks of size >= k number r[k-1] - r[k].
  std::vector<int> r{n};
  Mat pw = identity(u.p, n);
  while (r.back() > 0) {
    pw = mul(pw, x);
    const int rk = rank(pw);
    if (rk == r.back()) throw std::domain_error("not unipotent");
    r.push_back(rk);
  }
  std::vector<int> sizes;
  for (std::size_t k = 1; k < r.size(); ++k) {
    const int at_least_k = r[k - 1] - r[k];
    const int at_least_k1 = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
    for (int c = 0; c < at_least_k - at_least_k1; ++c) sizes.push_back(int(k));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// ------------------------------------------------------------ Schreier-Sims

namespace {

using Perm = std::vector<std::uint16_t>;

Perm compose(const Perm& g, const Perm& h) {  // g then h
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
  return r;
}

Perm invert(const Perm& g) {
  Perm r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[g[x]] = std::uint16_t(x);
  return r;
}

bool is_id(const Perm& g) {
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g[x] != x) return false;
  return true;
}

struct Level {
  std::uint16_t base;
  std::vector<Perm> gens;
  std::map<std::uint16_t, Perm> reps;  // orbit point -> coset representative

  void rebuild(std::size_t n) {
    reps.clear();
    Perm id(n);
    for (std::size_t x = 0; x < n; ++x) id[x] = std::uint16_t(x);
    reps.emplace(base, id);
    std::deque<std::uint16_t> q{base};
    while (!q.empty()) {
      const std::uint16_t x = q.front();
      q.pop_front();
      for (const auto& s : gens) {
        const std::uint16_t y = s[x];
        if (!reps.count(y)) {
          reps.emplace(y, compose(reps.at(x), s));
          q.push_back(y);
        }
      }
    }
  }
};

Perm to_perm(const unisep::gf::Matrix& g) {
  const std::size_t n = g.rows();
  const std::size_t pts = (std::size_t(1) << n) - 1;
  // Image of each basis row, as a bitmask.
  std::vector<std::uint32_t> img(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j)) img[i] |= 1u << j;
  Perm p(pts);
  for (std::size_t v = 1; v <= pts; ++v) {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v >> i & 1) w ^= img[i];
    p[v - 1] = std::uint16_t(w - 1);
  }
  return p;
}

}  // namespace

std::uint64_t group_order_gf2(const std::vector<unisep::gf::Matrix>& gens, std::uint64_t target,
                              std::uint64_t seed) {
  if (gens.empty() || gens[0].rows() > 16) throw std::domain_error("group_order_gf2: bad input");
  std::vector<Perm> g;
  for (const auto& m : gens) g.push_back(to_perm(m));
  const std::size_t n = g[0].size();
  std::vector<Level> chain;

  auto order = [&] {
    std::uint64_t o = 1;
    for (const auto& l : chain) o *= l.reps.size();
    return o;
  };
  // Sift; on failure add the residue to every level it fixes the base of.
  auto sift_add = [&](Perm h) {
    std::size_t i = 0;
    for (; i < chain.size(); ++i) {
      const auto it = chain[i].reps.find(h[chain[i].base]);
      if (it == chain[i].reps.end()) break;
      h = compose(h, invert(it->second));
    }
    if (i == chain.size()) {
      if (is_id(h)) return false;
      std::uint16_t b = 0;
      while (h[b] == b) ++b;
      chain.push_back(Level{b, {}, {}});
    }
    for (std::size_t j = 0; j <= i; ++j) {
      chain[j].gens.push_back(h);
      chain[j].rebuild(n);
    }
    return true;
  };

  std::mt19937_64 rng(seed);
  std::vector<Perm> slots;
  for (std::size_t k = 0; k < 10; ++k) slots.push_back(g[k % g.size()]);
  Perm acc = slots[0];
  std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
  for (int k = 0; k < 60; ++k) {  // mix
    const std::size_t a = pick(rng), b = pick(rng);
    if (a != b) slots[a] = compose(slots[a], slots[b]);
  }
  for (const auto& x : g) sift_add(x);
  std::size_t quiet = 0;
  while (order() != target && quiet < 200) {
    const std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    slots[a] = compose(slots[a], slots[b]);
    acc = compose(acc, slots[a]);
    quiet = sift_add(acc) ? 0 : quiet + 1;
  }
  return order();
}

std::vector<unisep::gf::Matrix> enumerate_group(const std::vector<unisep::gf::Matrix>& gens, std::size_t limit) {
  using unisep::gf::Matrix;
  std::set<std::vector<int>> seen;
  std::vector<Matrix> out;
  std::deque<Matrix> q;
  const Matrix id = Matrix::identity(gens.at(0).prime(), gens[0].rows());
  seen.insert(from_gf(id).a);
  out.push_back(id);
  q.push_back(id);
  while (!q.empty()) {
    const Matrix x = q.front();
    q.pop_front();
    for (const auto& s : gens) {
      Matrix y = to_gf(mul(from_gf(x), from_gf(s)));
      if (seen.insert(from_gf(y).a).second) {
        if (out.size() >= limit) throw std::domain_error("enumerate_group: limit");
        out.push_back(y);
        q.push_back(std::move(y));
      }
    }
  }
  return out;
}

}  // namespace oracle
