/*
  bruhat.hpp — compositions, Bruhat cross-sections, inversion graphs, and
  row-echelon normal forms over prime fields.

  Conventions, fixed once and used everywhere:
  - cross_section(c) for c = (c_1,..,c_d) partitions the values {1..r} into
    consecutive blocks of sizes (c_d, c_{d-1}, .., c_1), in that order, and
    keeps the w whose inverse is strictly increasing on each block.
  - Echelon pivots are the RIGHTMOST nonzero entries of each row, scaled to
    1, with everything beneath a pivot zero; row blocks are read top-down
    with sizes (s_d, .., s_1) and pivots increase down each block.
*/
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kac/graph.hpp"

namespace kac {

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);  // zero parts stripped

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // a bijection on 1..r
  static Permutation identity(int r);
  // "34512" for r <= 9, "[10,1,2,...]" otherwise
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const;  // w(i), 1-based
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  std::string str() const;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermTuple {
  std::vector<Permutation> perms;
  friend bool operator==(const PermTuple&, const PermTuple&) = default;
};

PermTuple make_perm_tuple(std::vector<Permutation> perms);
std::string perm_tuple_str(const PermTuple& wt);  // components joined by '|'
PermTuple parse_perm_tuple(const std::string& text);

// All minimal coset representatives for the block structure c, sorted
// lexicographically; |result| = multinomial(total; c).
std::vector<Permutation> cross_section(const Composition& c);

// {(i,j) : j < i, w(j) > w(i)}, sorted; size = Coxeter length
std::vector<std::pair<int, int>> inversions(const Permutation& w);

// One color-t edge {i,j} per inversion (i,j) of w_t.
ColoredMultigraph inversion_graph(const PermTuple& wt);

struct FFMatrix {
  int p = 2;
  std::vector<std::vector<int>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  int col_count() const {
    return rows.empty() ? 0 : static_cast<int>(rows.front().size());
  }
  friend bool operator==(const FFMatrix&, const FFMatrix&) = default;
};

// p must be a prime in [2, 97]; entries are reduced into [0, p)
FFMatrix make_ff_matrix(int p, std::vector<std::vector<int>> rows);
FFMatrix ff_identity(int p, int n);
FFMatrix ff_multiply(const FFMatrix& a, const FFMatrix& b);

// a(w): row i carries a single 1 in column w^{-1}(i)
FFMatrix permutation_matrix(const Permutation& w, int p);

bool is_echelon(const FFMatrix& m, const Composition& s);

// Unique g in the block-lower parabolic P_s with E = gA in echelon form;
// returns (g, E). RankDeficient when the rows of A are dependent.
std::pair<FFMatrix, FFMatrix> echelon_normal_form(const FFMatrix& a,
                                                  const Composition& s);

// Stacks unit rows for the non-pivot columns (ascending) beneath E, giving
// the unique invertible completion in echelon form w.r.t. (s0, s_1..s_d).
FFMatrix complete_echelon(const FFMatrix& e, const Composition& s, int s0);

}  // namespace kac
