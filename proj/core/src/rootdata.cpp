#include "wschub/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace wschub {

long dot(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

static void validate_datum(const RootDatum& d) {
  if (d.simple_roots.size() != d.simple_coroots.size())
    throw std::invalid_argument("root/coroot count mismatch");
  for (const auto& r : d.simple_roots)
    if ((int)r.size() != d.rank) throw std::invalid_argument("root dimension mismatch");
  for (const auto& c : d.simple_coroots)
    if ((int)c.size() != d.rank) throw std::invalid_argument("coroot dimension mismatch");
  int n = d.num_simple();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long cij = dot(d.simple_roots[j], d.simple_coroots[i]);
      if (i == j && cij != 2) throw std::invalid_argument("Cartan diagonal is not 2");
      if (i != j && cij > 0) throw std::invalid_argument("positive off-diagonal Cartan entry");
    }
  }
}

RootDatum build_root_datum(int rank, std::vector<IVec> simple_roots,
                           std::vector<IVec> simple_coroots, std::string name) {
  RootDatum d{rank, std::move(simple_roots), std::move(simple_coroots), std::move(name)};
  validate_datum(d);
  return d;
}

RootDatum build_root_datum(const std::string& preset) {
  auto series = [](int rank, int lo, const std::string& name) {
    RootDatum d;
    d.rank = rank;
    d.name = name;
    for (int i = lo; i + 1 < rank; ++i) {
      IVec r(rank, 0);
      r[i] = 1;
      r[i + 1] = -1;
      d.simple_roots.push_back(r);
      d.simple_coroots.push_back(r);
    }
    validate_datum(d);
    return d;
  };
  if (preset.rfind("gl(", 0) == 0 && preset.back() == ')') {
    int k = std::stoi(preset.substr(3, preset.size() - 4));
    if (k < 2) throw std::invalid_argument("gl(k) needs k >= 2");
    return series(k, 0, preset);
  }
  if (preset.rfind("cstar_gl(", 0) == 0 && preset.back() == ')') {
    int k = std::stoi(preset.substr(9, preset.size() - 10));
    if (k < 2) throw std::invalid_argument("cstar_gl(k) needs k >= 2");
    return series(k + 1, 1, preset);
  }
  if (preset == "cstar_sp4") {
    RootDatum d;
    d.rank = 3;
    d.name = preset;
    d.simple_roots = {{0, 1, -1}, {0, 0, 2}};
    d.simple_coroots = {{0, 1, -1}, {0, 0, 1}};
    validate_datum(d);
    return d;
  }
  throw std::invalid_argument("unknown preset: " + preset);
}

static std::vector<IVec> identity_matrix(int n) {
  std::vector<IVec> m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

static std::vector<IVec> reflection_matrix(const RootDatum& d, const IVec& root,
                                           const IVec& coroot) {
  // e_j -> e_j - coroot
  auto m = identity_matrix(d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) m[i][j] -= coroot[j] * root[i];
  return m;
}

static std::vector<IVec> matmul(const std::vector<IVec>& a, const std::vector<IVec>& b) {
  int n = (int)a.size();
  std::vector<IVec> c(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

WeylGroup::WeylGroup(RootDatum datum, std::size_t limit) : datum_(std::move(datum)) {
  validate_datum(datum_);
  generate(limit);
  build_roots();
  build_bruhat();
}

void WeylGroup::generate(std::size_t limit) {
  int n = datum_.num_simple();
  std::vector<std::vector<IVec>> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back(reflection_matrix(datum_, datum_.simple_roots[i], datum_.simple_coroots[i]));

  // BFS by word length; word length equals Coxeter length along this search.
  std::map<std::vector<IVec>, int> seen;
  std::vector<std::pair<std::vector<IVec>, int>> found;  // (matrix, length)
  std::deque<int> queue;
  seen.emplace(identity_matrix(datum_.rank), 0);
  found.push_back({identity_matrix(datum_.rank), 0});
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      auto next = matmul(found[cur].first, gens[i]);
      if (seen.emplace(next, (int)found.size()).second) {
        if (found.size() >= limit)
          throw std::runtime_error("Weyl group generation exceeded element limit");
        found.push_back({std::move(next), found[cur].second + 1});
        queue.push_back((int)found.size() - 1);
      }
    }
  }

  // Canonical reduced word: repeatedly strip the smallest left descent.
  // s_i is a left descent of w exactly when w^{-1}(alpha_i) is negative,
  // equivalently alpha_i^T w has nonpositive... we test via length drop.
  std::map<std::vector<IVec>, int> len_of;
  for (auto& [m, l] : found) len_of[m] = l;
  auto canonical_word = [&](std::vector<IVec> m, int len) {
    std::vector<int> word;
    while (len > 0) {
      for (int i = 0; i < n; ++i) {
        auto next = matmul(gens[i], m);
        if (len_of.at(next) == len - 1) {
          word.push_back(i);
          m = std::move(next);
          --len;
          break;
        }
      }
    }
    return word;
  };

  for (auto& [m, l] : found) elems_.push_back({m, canonical_word(m, l), l});
  std::sort(elems_.begin(), elems_.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.word < b.word;
  });
  for (int i = 0; i < (int)elems_.size(); ++i) index_[elems_[i].mat] = i;

  simple_elem_.resize(n);
  for (int i = 0; i < n; ++i) simple_elem_[i] = index_.at(gens[i]);

  int max_len = elems_.back().length;
  int count_max = 0;
  for (const auto& e : elems_)
    if (e.length == max_len) {
      longest_ = index_.at(e.mat);
      ++count_max;
    }
  if (count_max != 1) throw std::runtime_error("longest element is not unique");

  inverse_.resize(elems_.size());
  for (int w = 0; w < (int)elems_.size(); ++w) {
    auto inv = identity_matrix(datum_.rank);
    for (auto it = elems_[w].word.rbegin(); it != elems_[w].word.rend(); ++it)
      inv = matmul(inv, gens[*it]);
    inverse_[w] = index_.at(inv);
  }
}

void WeylGroup::build_roots() {
  // Orbit of the simple (root, coroot) pairs; a root is positive exactly when
  // its simple-root coefficients are all nonnegative.
  std::set<std::pair<IVec, IVec>> all;
  std::deque<std::pair<IVec, IVec>> queue;
  int n = datum_.num_simple();
  for (int i = 0; i < n; ++i) {
    auto p = std::make_pair(datum_.simple_roots[i], datum_.simple_coroots[i]);
    all.insert(p);
    queue.push_back(p);
  }
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      IVec r2 = r, c2 = c;
      long a = dot(r, datum_.simple_coroots[i]);
      long b = dot(datum_.simple_roots[i], c);
      for (int j = 0; j < datum_.rank; ++j) {
        r2[j] -= a * datum_.simple_roots[i][j];
        c2[j] -= b * datum_.simple_coroots[i][j];
      }
      if (all.insert({r2, c2}).second) queue.push_back({r2, c2});
    }
  }
  for (const auto& [r, c] : all) {
    auto coeffs = root_coeffs(r);
    if (!coeffs) throw std::runtime_error("root outside simple-root span");
    bool nonneg = true;
    for (const auto& x : *coeffs) nonneg = nonneg && x >= 0;
    if (!nonneg) continue;
    pos_roots_.push_back(r);
    pos_coroots_.push_back(c);
  }
  for (int g = 0; g < (int)pos_roots_.size(); ++g) {
    root_lookup_[pos_roots_[g]] = g + 1;
    IVec neg = pos_roots_[g];
    for (auto& x : neg) x = -x;
    root_lookup_[neg] = -(g + 1);
    reflection_elem_.push_back(
        index_.at(reflection_matrix(datum_, pos_roots_[g], pos_coroots_[g])));
  }
}

void WeylGroup::build_bruhat() {
  int N = size();
  covers_.resize(N);
  for (int v = 0; v < N; ++v) {
    for (int g = 0; g < num_positive(); ++g) {
      int u = mult(v, reflection_elem_[g]);
      if (elems_[u].length == elems_[v].length - 1) covers_[v].push_back({u, g});
    }
  }
  int words = (N + 63) / 64;
  leq_.assign(N, std::vector<std::uint64_t>(words, 0));
  // elements are sorted by length, so ascending index respects the order
  for (int v = 0; v < N; ++v) {
    leq_[v][v / 64] |= 1ull << (v % 64);
    for (auto [u, g] : covers_[v])
      for (int k = 0; k < words; ++k) leq_[v][k] |= leq_[u][k];
  }
}

int WeylGroup::index_of_matrix(const std::vector<IVec>& mat) const {
  auto it = index_.find(mat);
  if (it == index_.end()) throw std::invalid_argument("matrix is not a group element");
  return it->second;
}

int WeylGroup::mult(int a, int b) const {
  return index_.at(matmul(elems_[a].mat, elems_[b].mat));
}

int WeylGroup::inverse(int a) const { return inverse_[a]; }

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = identity();
  for (int i : word) {
    if (i < 0 || i >= datum_.num_simple()) throw std::invalid_argument("bad generator index");
    w = mult(w, simple_elem_[i]);
  }
  return w;
}

IVec WeylGroup::act(int w, const IVec& mu) const {
  const auto& m = elems_[w].mat;
  IVec out(datum_.rank, 0);
  for (int i = 0; i < datum_.rank; ++i)
    for (int j = 0; j < datum_.rank; ++j) out[i] += m[i][j] * mu[j];
  return out;
}

IVec WeylGroup::act_coweight(int w, const IVec& c) const {
  // inverse transpose, preserving the pairing
  const auto& m = elems_[inverse_[w]].mat;
  IVec out(datum_.rank, 0);
  for (int j = 0; j < datum_.rank; ++j)
    for (int i = 0; i < datum_.rank; ++i) out[j] += m[i][j] * c[i];
  return out;
}

int WeylGroup::signed_root_index(const IVec& r) const {
  auto it = root_lookup_.find(r);
  return it == root_lookup_.end() ? 0 : it->second;
}

bool WeylGroup::bruhat_leq(int u, int v) const {
  return (leq_[v][u / 64] >> (u % 64)) & 1;
}

std::optional<std::vector<Rational>> WeylGroup::root_coeffs(
    const std::vector<Rational>& mu) const {
  int n = datum_.num_simple();
  // Gaussian elimination on [roots | mu] over Q
  std::vector<std::vector<Rational>> m(datum_.rank, std::vector<Rational>(n + 1));
  for (int i = 0; i < datum_.rank; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(datum_.simple_roots[j][i]);
    m[i][n] = mu[i];
  }
  std::vector<int> pivot_row(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < datum_.rank; ++col) {
    int p = -1;
    for (int r = row; r < datum_.rank; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    for (int r = 0; r < datum_.rank; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (int c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int r = row; r < datum_.rank; ++r)
    if (m[r][n] != 0) return std::nullopt;
  std::vector<Rational> coeffs(n, Rational(0));
  for (int col = 0; col < n; ++col) {
    if (pivot_row[col] < 0) {
      // free column: simple roots are linearly independent, so this
      // indicates a degenerate datum
      throw std::runtime_error("simple roots are linearly dependent");
    }
    coeffs[col] = m[pivot_row[col]][n] / m[pivot_row[col]][col];
  }
  return coeffs;
}

std::optional<std::vector<Rational>> WeylGroup::root_coeffs(const IVec& mu) const {
  std::vector<Rational> v(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) v[i] = Rational((long)mu[i]);
  return root_coeffs(v);
}

ParabolicCosets::ParabolicCosets(std::shared_ptr<const WeylGroup> group, std::vector<int> J)
    : group_(std::move(group)), J_(std::move(J)) {
  const WeylGroup& W = *group_;
  const RootDatum& d = W.datum();
  std::sort(J_.begin(), J_.end());
  for (int j : J_)
    if (j < 0 || j >= d.num_simple()) throw std::invalid_argument("parabolic index out of range");

  // W_P by closure over the J generators
  std::set<int> wp{W.identity()};
  std::deque<int> queue{W.identity()};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int j : J_) {
      int w2 = W.mult(w, W.simple(j));
      if (wp.insert(w2).second) queue.push_back(w2);
    }
  }
  wp_.assign(wp.begin(), wp.end());

  // maximal representatives: w(alpha_j) negative for all j in J
  for (int w = 0; w < W.size(); ++w) {
    bool maximal = true;
    for (int j : J_) {
      IVec img = W.act(w, d.simple_roots[j]);
      if (W.signed_root_index(img) >= 0) maximal = false;
    }
    if (maximal) reps_.push_back(w);
  }
  std::sort(reps_.begin(), reps_.end(), [&](int a, int b) {
    if (W[a].length != W[b].length) return W[a].length > W[b].length;
    return W[a].word < W[b].word;
  });
  for (int p = 0; p < (int)reps_.size(); ++p) pos_of_rep_[reps_[p]] = p;
  if (reps_.size() * wp_.size() != (std::size_t)W.size())
    throw std::runtime_error("coset decomposition failed");

  coset_rep_.assign(W.size(), -1);
  for (int w = 0; w < W.size(); ++w) {
    int best = -1;
    for (int p : wp_) {
      int c = W.mult(w, p);
      if (pos_of_rep_.count(c)) best = c;
    }
    if (best < 0) throw std::runtime_error("coset has no maximal representative");
    coset_rep_[w] = best;
  }

  int wp_longest = W.identity();
  for (int p : wp_)
    if (W[p].length > W[wp_longest].length) wp_longest = p;
  min_rep_.resize(reps_.size());
  for (int pos = 0; pos < (int)reps_.size(); ++pos)
    min_rep_[pos] = W.mult(reps_[pos], wp_longest);

  levi_root_.resize(W.num_positive());
  std::set<int> jset(J_.begin(), J_.end());
  for (int g = 0; g < W.num_positive(); ++g) {
    auto coeffs = W.root_coeffs(W.pos_root(g));
    bool levi = true;
    for (int i = 0; i < (int)coeffs->size(); ++i)
      if ((*coeffs)[i] != 0 && !jset.count(i)) levi = false;
    levi_root_[g] = levi;
  }

  inv_P_.resize(reps_.size());
  for (int pos = 0; pos < (int)reps_.size(); ++pos) {
    int winv = W.inverse(reps_[pos]);
    for (int g = 0; g < W.num_positive(); ++g) {
      IVec pre = W.act(winv, W.pos_root(g));
      int s = W.signed_root_index(pre);
      if (s == 0) throw std::runtime_error("image of a root is not a root");
      if (s < 0 && !levi_root_[-s - 1]) inv_P_[pos].push_back(g);
    }
    if ((int)inv_P_[pos].size() != W[min_rep_[pos]].length)
      throw std::runtime_error("inversion set size disagrees with codimension");
  }

  covers_.resize(reps_.size());
  for (int pos = 0; pos < (int)reps_.size(); ++pos) {
    int v = reps_[pos];
    for (int g = 0; g < W.num_positive(); ++g) {
      int u = W.mult(v, W.reflection_of(g));
      int upos = pos_of_rep_.at(coset_rep_[u]);
      if (upos == pos) continue;
      if (cell_dim(upos) == cell_dim(pos) - 1 && leq(upos, pos)) covers_[pos].push_back({upos, g});
    }
  }
}

int ParabolicCosets::cell_dim(int pos) const { return (*group_)[min_rep_[pos]].length; }

std::vector<int> ParabolicCosets::interval_intersection(int pos_u, int pos_v, int pos_w) const {
  std::vector<int> out;
  for (int x = 0; x < num_reps(); ++x)
    if (leq(pos_w, x) && leq(x, pos_u) && leq(x, pos_v)) out.push_back(x);
  return out;
}

}  // namespace wschub
