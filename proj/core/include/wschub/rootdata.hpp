#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wschub/rational.hpp"

namespace wschub {

using IVec = std::vector<long>;

// Root datum in a fixed weight-coordinate basis. Roots and coroots both live
// in ambient coordinates; the pairing is the dot product.
struct RootDatum {
  int rank = 0;  // ambient coordinate count
  std::vector<IVec> simple_roots;
  std::vector<IVec> simple_coroots;
  std::string name;

  int num_simple() const { return (int)simple_roots.size(); }
};

// Presets:
//   gl(k)       coordinates x_0..x_{k-1}, simple roots x_i - x_{i+1}
//   cstar_gl(k) coordinates x_0..x_k, GL_k acting on x_1..x_k
//   cstar_sp4   coordinates x_0,x_1,x_2, type C_2 on x_1,x_2
RootDatum build_root_datum(const std::string& preset);
RootDatum build_root_datum(int rank, std::vector<IVec> simple_roots,
                           std::vector<IVec> simple_coroots, std::string name = "explicit");

long dot(const IVec& a, const IVec& b);

struct WeylElement {
  std::vector<IVec> mat;   // row i of the action on weight coordinates
  std::vector<int> word;   // canonical reduced word (lex-least)
  int length = 0;
};

class WeylGroup {
 public:
  explicit WeylGroup(RootDatum datum, std::size_t limit = 10000);

  const RootDatum& datum() const { return datum_; }
  int size() const { return (int)elems_.size(); }
  const WeylElement& operator[](int w) const { return elems_[w]; }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int simple(int i) const { return simple_elem_[i]; }

  int index_of_matrix(const std::vector<IVec>& mat) const;
  int mult(int a, int b) const;
  int inverse(int a) const;
  int from_word(const std::vector<int>& word) const;

  IVec act(int w, const IVec& mu) const;
  IVec act_coweight(int w, const IVec& c) const;

  int num_positive() const { return (int)pos_roots_.size(); }
  const IVec& pos_root(int g) const { return pos_roots_[g]; }
  const IVec& pos_coroot(int g) const { return pos_coroots_[g]; }
  int reflection_of(int g) const { return reflection_elem_[g]; }
  // +-(index+1) for a root vector, 0 if not a root
  int signed_root_index(const IVec& r) const;

  bool bruhat_leq(int u, int v) const;
  // u covered by v, via u = v * r_gamma: pairs (u, positive root index)
  const std::vector<std::pair<int, int>>& covers(int v) const { return covers_[v]; }

  // Expansion of mu in the simple roots; nullopt when outside their span.
  std::optional<std::vector<Rational>> root_coeffs(const std::vector<Rational>& mu) const;
  std::optional<std::vector<Rational>> root_coeffs(const IVec& mu) const;

 private:
  void generate(std::size_t limit);
  void build_roots();
  void build_bruhat();

  RootDatum datum_;
  std::vector<WeylElement> elems_;
  std::map<std::vector<IVec>, int> index_;
  std::vector<int> simple_elem_;
  std::vector<int> inverse_;
  int longest_ = -1;

  std::vector<IVec> pos_roots_;
  std::vector<IVec> pos_coroots_;
  std::vector<int> reflection_elem_;
  std::map<IVec, int> root_lookup_;  // signed index encoding as above

  std::vector<std::vector<std::pair<int, int>>> covers_;
  std::vector<std::vector<std::uint64_t>> leq_;  // leq_[v] bit u: u <= v
};

// Left cosets wW_P for the parabolic given by simple-root subset J, indexed
// by their maximal-length representatives in descending (length, word) order.
class ParabolicCosets {
 public:
  ParabolicCosets(std::shared_ptr<const WeylGroup> group, std::vector<int> J);

  const WeylGroup& group() const { return *group_; }
  const std::vector<int>& J() const { return J_; }
  int num_reps() const { return (int)reps_.size(); }
  int rep(int pos) const { return reps_[pos]; }
  int rep_pos(int elem) const { return pos_of_rep_.at(coset_rep(elem)); }
  int coset_rep(int elem) const { return coset_rep_[elem]; }
  int min_rep(int pos) const { return min_rep_[pos]; }
  const std::vector<int>& subgroup_elements() const { return wp_; }
  int cell_dim(int pos) const;  // length of the minimal representative

  bool leq(int pos_u, int pos_v) const {
    return group_->bruhat_leq(reps_[pos_u], reps_[pos_v]);
  }

  struct Cover {
    int w_pos;  // covered coset
    int root;   // positive root index gamma with w = v * r_gamma
  };
  const std::vector<Cover>& covers(int pos_v) const { return covers_[pos_v]; }

  // Phi_v^P: positive roots alpha with v^{-1} alpha in Phi(u^-)
  const std::vector<int>& inversion_set_P(int pos_v) const { return inv_P_[pos_v]; }

  // Positive root lies in the span of the parabolic subset J
  bool levi_root(int g) const { return levi_root_[g]; }

  // {x in W^P : w <= x <= u and x <= v}
  std::vector<int> interval_intersection(int pos_u, int pos_v, int pos_w) const;

 private:
  std::shared_ptr<const WeylGroup> group_;
  std::vector<int> J_;
  std::vector<int> wp_;
  std::vector<int> reps_;
  std::map<int, int> pos_of_rep_;
  std::vector<int> coset_rep_;   // per group element
  std::vector<int> min_rep_;     // per rep position
  std::vector<bool> levi_root_;  // per positive root: in the span of J
  std::vector<std::vector<Cover>> covers_;
  std::vector<std::vector<int>> inv_P_;
};

}  // namespace wschub
