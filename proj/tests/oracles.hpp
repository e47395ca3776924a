#pragma once

// Reference implementations used only by the tests. None of them reuses the
// library algorithm it checks.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "planar/effective_action.hpp"
#include "planar/moments.hpp"
#include "planar/trees.hpp"

namespace oracle {

using planar::Rational;
using planar::Series;
using planar::TreeNode;
using planar::Word;

// Set partitions of {0..n-1} as block labels (restricted growth strings).
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      f(label);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    f(label);
    return;
  }
  rec(0, 0);
}

inline bool non_crossing(const std::vector<int>& label) {
  const auto n = label.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return false;
  return true;
}

// m_w = Σ over non-crossing partitions π of w of Π_{V ∈ π} k_{w|V}.
inline Rational moment_from_partitions(const Series& k, const Word& w) {
  Rational total = 0;
  for_each_partition(static_cast<int>(w.degree()), [&](const std::vector<int>& label) {
    if (!non_crossing(label)) return;
    const int blocks = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    Rational term = 1;
    for (int b = 0; b < blocks && term != 0; ++b) {
      Word sub;
      for (std::size_t i = 0; i < label.size(); ++i)
        if (label[i] == b) sub.push_back(w[i]);
      term *= k.coefficient(sub);
    }
    total += term;
  });
  return total;
}

inline long count_noncrossing_pairings(int n) {
  long count = 0;
  for_each_partition(n, [&](const std::vector<int>& label) {
    if (!non_crossing(label)) return;
    std::vector<int> sizes(label.size(), 0);
    for (int b : label) ++sizes[static_cast<std::size_t>(b)];
    for (int s : sizes)
      if (s != 0 && s != 2) return;
    ++count;
  });
  return count;
}

// Dense univariate power series truncated at degree `top`.
using Dense = std::vector<Rational>;

inline Dense dense_mul(const Dense& a, const Dense& b, std::size_t top) {
  Dense out(top + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= top; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= top; ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Dense dense_reciprocal(const Dense& a, std::size_t top) {
  Dense out(top + 1, 0);
  out[0] = 1 / a[0];
  for (std::size_t d = 1; d <= top; ++d) {
    Rational s = 0;
    for (std::size_t j = 1; j <= d && j < a.size(); ++j) s += a[j] * out[d - j];
    out[d] = -s / a[0];
  }
  return out;
}

// Univariate ℓ_1..ℓ_top by Lagrange inversion: with Φ(y) = Σ k_n y^(n-1),
// [φ^m] y(φ) = (1/m) [y^(m-1)] (y/Φ(y))^m and ℓ_(m+1) = [φ^m] y(φ).
inline std::vector<Rational> ell_by_lagrange(const std::vector<Rational>& k, int top) {
  // k[n] = k_n for n = 0..top; k_1 = 0, k_2 != 0.
  const auto t = static_cast<std::size_t>(top);
  Dense phi_over_y(t, 0);  // Φ(y)/y = k2 + k3 y + ...
  for (std::size_t n = 2; n <= t && n < k.size(); ++n) phi_over_y[n - 2] = k[n];
  const Dense base = dense_reciprocal(phi_over_y, t);
  std::vector<Rational> ell(t + 1, 0);
  Dense power{1};
  for (std::size_t m = 1; m + 1 <= t; ++m) {
    power = dense_mul(power, base, t);
    ell[m + 1] = power[m - 1] / Rational(static_cast<long>(m));
  }
  return ell;
}

// Ordered trees whose internal nodes have at least two children, grown from
// compositions of the leaf count (not from characteristic-path moves).
inline std::vector<TreeNode> schroder_trees(int leaves) {
  std::vector<std::vector<TreeNode>> memo(static_cast<std::size_t>(leaves) + 1);
  memo[1] = {TreeNode::leaf()};
  for (int n = 2; n <= leaves; ++n) {
    auto& out = memo[static_cast<std::size_t>(n)];
    // children: sequences of >= 2 subtrees with leaf counts summing to n
    std::function<void(int, std::vector<TreeNode>&)> rec = [&](int remaining, std::vector<TreeNode>& kids) {
      if (remaining == 0) {
        if (kids.size() >= 2) out.push_back(TreeNode{kids});
        return;
      }
      for (int first = 1; first <= remaining; ++first) {
        if (first == n) continue;  // a single child carrying everything
        for (const auto& sub : memo[static_cast<std::size_t>(first)]) {
          kids.push_back(sub);
          rec(remaining - first, kids);
          kids.pop_back();
        }
      }
    };
    std::vector<TreeNode> kids;
    rec(n, kids);
  }
  return memo[static_cast<std::size_t>(leaves)];
}

// Nested-loop Feynman evaluation: one dummy per half-edge at an internal
// vertex, every assignment in [n]^dummies enumerated explicitly. Returns the
// unsigned sum; the signed value is (-1)^(internal vertices) times it.
// `order` permutes the enumeration order of the dummies.
struct NaiveFeynman {
  struct Item {
    bool is_edge;
    int upper, lower;          // edge: dummy ids (or -1 for a mark)
    int upper_mark, lower_mark; // edge: word positions when the end is a mark
    std::vector<int> dummies;  // vertex: root side first, then children
    bool on_path;
  };

  std::vector<Item> items;  // each factor, listed root first along the path
  int dummies = 0;

  // Walks the tree, emitting factors; returns nothing.
  void build(const TreeNode& top) {
    int next_leaf = 1;  // word position of the next leaf (root is 0)
    std::function<void(const TreeNode&, int, int, bool)> visit = [&](const TreeNode& node, int parent_dummy,
                                                                       int parent_mark, bool on_path) {
      if (node.is_leaf()) {
        items.push_back({true, parent_dummy, -1, parent_mark, next_leaf++, {}, on_path});
        return;
      }
      const int up = dummies++;
      items.push_back({true, parent_dummy, up, parent_mark, -1, {}, on_path});
      Item vertex{false, -1, -1, -1, -1, {up}, on_path};
      std::vector<int> child_dummies;
      for (std::size_t c = 0; c < node.children.size(); ++c) child_dummies.push_back(dummies++);
      vertex.dummies.insert(vertex.dummies.end(), child_dummies.begin(), child_dummies.end());
      items.push_back(vertex);
      for (std::size_t c = 0; c < node.children.size(); ++c)
        visit(node.children[c], child_dummies[c], -1, on_path && c + 1 == node.children.size());
    };
    visit(top, -1, 0, true);
  }

  Series evaluate(const planar::Cumulants<Rational>& k, const planar::EffectiveAction<Rational>& l, const Word& w,
                  int degree, bool reverse_order) {
    const int n = k.alphabet();
    const auto phi = planar::conjugate_field(k).truncated(degree);
    Series total(n, degree);
    std::vector<int> value(static_cast<std::size_t>(dummies), 1);
    std::vector<int> order(static_cast<std::size_t>(dummies));
    for (int i = 0; i < dummies; ++i) order[static_cast<std::size_t>(i)] = reverse_order ? dummies - 1 - i : i;
    auto letter = [&](int dummy, int mark) { return dummy >= 0 ? value[static_cast<std::size_t>(dummy)] : w[static_cast<std::size_t>(mark)]; };
    while (true) {
      Rational scalar = 1;
      std::vector<Series> path;  // root first
      for (const auto& it : items) {
        Word idx;
        if (it.is_edge) {
          idx = Word{letter(it.upper, it.upper_mark), letter(it.lower, it.lower_mark)};
          if (it.on_path)
            path.push_back(planar::iterated_derivative(k.series(), idx).truncated(degree));
          else
            scalar *= k.series().coefficient(idx);
        } else {
          for (int dmy : it.dummies) idx.push_back(value[static_cast<std::size_t>(dmy)]);
          if (it.on_path)
            path.push_back(planar::compose(planar::iterated_derivative(l.series(), idx).truncated(degree), phi));
          else
            scalar *= l.series().coefficient(idx);
        }
      }
      if (scalar != 0) {
        Series prod = Series::constant(n, degree, scalar);
        for (auto it = path.rbegin(); it != path.rend(); ++it) prod = prod * *it;  // farthest first
        total += prod;
      }
      // advance the odometer in the chosen dummy order
      std::size_t pos = 0;
      while (pos < order.size()) {
        auto& v = value[static_cast<std::size_t>(order[pos])];
        if (v < n) {
          ++v;
          break;
        }
        v = 1;
        ++pos;
      }
      if (pos == order.size()) break;
    }
    return total;
  }
};

inline Series naive_feynman(const planar::AdmissibleTree& t, const planar::Cumulants<Rational>& k,
                            const planar::EffectiveAction<Rational>& l, const Word& w, int degree,
                            bool reverse_order = false) {
  NaiveFeynman nf;
  nf.build(t.top());
  return nf.evaluate(k, l, w, degree, reverse_order);
}

}  // namespace oracle
