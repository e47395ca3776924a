#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planar/calculus.hpp"
#include "planar/effective_action.hpp"
#include "planar/moments.hpp"
#include "planar/report.hpp"
#include "planar/series.hpp"

namespace planar {

/// Planar rooted tree node: a leaf, or an internal node with >= 2 ordered children.
struct TreeNode {
  std::vector<TreeNode> children;

  static TreeNode leaf() { return {}; }
  bool is_leaf() const { return children.empty(); }
  int leaf_count() const;
  int internal_count() const;

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
  // Leaves sort first; internal nodes compare children lexicographically.
  friend std::strong_ordering operator<=>(const TreeNode& a, const TreeNode& b);
};

/// An admissible tree: the root mark (label 1) sits above `top()`, the leaves
/// carry labels 2..n from left to right.
class AdmissibleTree {
 public:
  explicit AdmissibleTree(TreeNode top);

  /// The n = 2 tree: a single edge from the root mark to leaf 2.
  static AdmissibleTree single_edge() { return AdmissibleTree(TreeNode::leaf()); }

  const TreeNode& top() const { return top_; }
  int marks() const { return top_.leaf_count() + 1; }
  int internal_vertices() const { return top_.internal_count(); }

  /// Bracket notation with leaf labels, e.g. "[2,[3,4]]"; the single edge is "2".
  std::string to_string() const;

  friend bool operator==(const AdmissibleTree&, const AdmissibleTree&) = default;
  friend std::strong_ordering operator<=>(const AdmissibleTree& a, const AdmissibleTree& b) {
    return a.top_ <=> b.top_;
  }

 private:
  TreeNode top_;
};

/// All admissible trees with marks 1..n (n >= 2), built from the single edge by
/// repeatedly adding the next leaf, either as a new last child of a vertex on
/// the characteristic path or on a new vertex subdividing a path edge.
/// Sorted in canonical order.
std::vector<AdmissibleTree> enumerate_admissible(int n);

/// The path from the root mark to the last leaf. Vertices are the internal
/// vertices on it, root side first, named by their preorder index among
/// internal vertices; edge e joins the previous item to vertex e (the last
/// edge ends at the last leaf).
struct CharacteristicPath {
  std::vector<int> vertices;
  int last_leaf = 2;

  std::size_t edge_count() const { return vertices.size() + 1; }
  /// e.g. "1 - v0 - 3".
  std::string to_string() const;
};

CharacteristicPath characteristic_path(const AdmissibleTree& t);

/// An admissible tree whose marks 1..n are replaced by the letters of a word.
class DecoratedTree {
 public:
  DecoratedTree(AdmissibleTree tree, Word word);
  const AdmissibleTree& tree() const { return tree_; }
  const Word& word() const { return word_; }

 private:
  AdmissibleTree tree_;
  Word word_;
};

/// Symbolic Feynman term of a tree with dummy letters e1, e2, ... numbered in
/// preorder. K[..] and L[..] are path factors, K0[..] and L0[..] scalars
/// evaluated at 0; marks appear as their labels.
std::string feynman_term(const AdmissibleTree& t);

/// Index order used for a vertex factor: the dummy on the root-side edge
/// first, then the child edges left to right.
inline constexpr bool kVertexIndicesRootSideFirst = true;

/// Shared data for evaluating many trees against one (K, L) pair at a fixed
/// target y-degree. Derivative series are computed on demand and cached.
template <Scalar S>
class FeynmanContext {
 public:
  FeynmanContext(const Cumulants<S>& k, const EffectiveAction<S>& l, int degree)
      : k_(k), l_(l), degree_(degree), phi_(checked_field(k, l, degree)) {}

  int alphabet() const { return k_.alphabet(); }
  int degree() const { return degree_; }

  /// K(y)_{a b}, differentiated by a first.
  const BasicSeries<S>& k_path(int a, int b) {
    const Word w{a, b};
    auto it = k_cache_.find(w);
    if (it == k_cache_.end()) {
      if (k_.max_degree() - 2 < degree_)
        throw PreconditionError("feynman: cumulants are not known to the target degree");
      it = k_cache_.emplace(w, iterated_derivative(k_.series(), w).truncated(degree_)).first;
    }
    return it->second;
  }

  /// L(Φ)_w expressed in the y-letters.
  const BasicSeries<S>& l_path(const Word& w) {
    auto it = l_cache_.find(w);
    if (it == l_cache_.end()) {
      if (l_.max_degree() - static_cast<int>(w.degree()) < degree_)
        throw PreconditionError("feynman: effective action is not known to the target degree");
      const auto lw = iterated_derivative(l_.series(), w).truncated(degree_);
      it = l_cache_.emplace(w, compose(lw, phi_)).first;
    }
    return it->second;
  }

  S k2(int a, int b) const { return k_.series().coefficient(Word{a, b}); }
  S ell(const Word& w) const { return l_.series().coefficient(w); }

 private:
  static BasicField<S> checked_field(const Cumulants<S>& k, const EffectiveAction<S>& l,
                                     int degree) {
    if (k.alphabet() != l.alphabet())
      throw PreconditionError("feynman: cumulants and effective action use different alphabets");
    if (!is_regular(k)) throw PreconditionError("feynman: cumulant series is not regular");
    if (!(covariance(k) == l.covariance()))
      throw PreconditionError("feynman: effective action does not belong to these cumulants");
    if (degree < 0) throw PreconditionError("feynman: negative target degree");
    return conjugate_field(k).truncated(degree);
  }

  const Cumulants<S>& k_;
  const EffectiveAction<S>& l_;
  int degree_;
  BasicField<S> phi_;
  std::map<Word, BasicSeries<S>> k_cache_;
  std::map<Word, BasicSeries<S>> l_cache_;
};

namespace detail {

// Calls f(tuple) for every tuple in [1..n]^r, last entry varying fastest.
template <class F>
void for_each_tuple(int n, std::size_t r, F&& f) {
  std::vector<int> t(r, 1);
  while (true) {
    f(t);
    std::size_t pos = r;
    while (pos > 0) {
      --pos;
      if (t[pos] < n) {
        ++t[pos];
        break;
      }
      t[pos] = 1;
      if (pos == 0) return;
    }
    if (r == 0) return;
  }
}

// Contracts everything hidden behind one off-path edge. Entry a - 1 is the
// scalar value when the dummy at the path side of the edge is a.
template <Scalar S>
std::vector<S> contract_off_path(const TreeNode& node, const Word& word, int& next_label,
                                 FeynmanContext<S>& ctx) {
  const int n = ctx.alphabet();
  std::vector<S> out(static_cast<std::size_t>(n), S(0));
  if (node.is_leaf()) {
    const int letter = word[static_cast<std::size_t>(next_label - 1)];
    ++next_label;
    for (int a = 1; a <= n; ++a) out[static_cast<std::size_t>(a - 1)] = ctx.k2(a, letter);
    return out;
  }
  std::vector<std::vector<S>> subs;
  for (const auto& child : node.children) subs.push_back(contract_off_path(child, word, next_label, ctx));
  std::vector<S> vertex(static_cast<std::size_t>(n), S(0));
  for (int b = 1; b <= n; ++b) {
    S total(0);
    for_each_tuple(n, subs.size(), [&](const std::vector<int>& c) {
      S weight(1);
      Word w{b};
      for (std::size_t j = 0; j < c.size(); ++j) {
        weight = S(weight * subs[j][static_cast<std::size_t>(c[j] - 1)]);
        if (is_zero(weight)) return;
        w.push_back(c[j]);
      }
      const S l = ctx.ell(w);
      if (!is_zero(l)) total = S(total + weight * l);
    });
    vertex[static_cast<std::size_t>(b - 1)] = total;
  }
  for (int a = 1; a <= n; ++a) {
    S total(0);
    for (int b = 1; b <= n; ++b) total = S(total + ctx.k2(a, b) * vertex[static_cast<std::size_t>(b - 1)]);
    out[static_cast<std::size_t>(a - 1)] = total;
  }
  return out;
}

}  // namespace detail

/// F(T): signed sum over all dummy assignments of the ordered product of path
/// factors (farthest from the root on the left) and off-path scalars.
///
/// Off-path subtrees only contribute scalars, so they are contracted first;
/// the remaining sum is a chain of n x n matrix-vector products along the
/// characteristic path, evaluated from the root edge outward.
template <Scalar S>
BasicSeries<S> feynman_evaluate(const DecoratedTree& t, FeynmanContext<S>& ctx) {
  const int n = ctx.alphabet();
  const int d = ctx.degree();
  const Word& w = t.word();
  if (!w.fits(n)) throw PreconditionError("feynman: word uses letters outside the alphabet");
  const int root_letter = w[0];
  const TreeNode* node = &t.tree().top();
  if (node->is_leaf()) return ctx.k_path(root_letter, w[1]);

  using series_t = BasicSeries<S>;
  auto sz = [](int i) { return static_cast<std::size_t>(i); };
  // incoming[p - 1]: the product of everything between the root and the
  // current vertex, with the dummy at the vertex's root-side end set to p.
  std::vector<series_t> incoming;
  for (int p = 1; p <= n; ++p) incoming.push_back(ctx.k_path(root_letter, p));

  int next_label = 2;
  while (true) {
    const auto& kids = node->children;
    std::vector<std::vector<S>> off;
    for (std::size_t c = 0; c + 1 < kids.size(); ++c)
      off.push_back(detail::contract_off_path(kids[c], w, next_label, ctx));

    std::vector<series_t> through;  // indexed by the dummy on the path child edge
    for (int q = 1; q <= n; ++q) {
      series_t acc(n, d);
      for (int p = 1; p <= n; ++p) {
        if (incoming[sz(p - 1)].is_zero()) continue;
        series_t vertex(n, d);
        detail::for_each_tuple(n, off.size(), [&](const std::vector<int>& c) {
          S weight(1);
          Word lw{p};
          for (std::size_t j = 0; j < c.size(); ++j) {
            weight = S(weight * off[j][sz(c[j] - 1)]);
            if (is_zero(weight)) return;
            lw.push_back(c[j]);
          }
          lw.push_back(q);
          const auto& l = ctx.l_path(lw);
          if (!l.is_zero()) vertex += weight * l;
        });
        acc += series_t::multiply_truncated(vertex, incoming[sz(p - 1)], d);
      }
      through.push_back(std::move(acc));
    }

    node = &kids.back();
    if (node->is_leaf()) {
      const int last = w[sz(next_label - 1)];
      series_t out(n, d);
      for (int q = 1; q <= n; ++q)
        out += series_t::multiply_truncated(ctx.k_path(q, last), through[sz(q - 1)], d);
      return t.tree().internal_vertices() % 2 == 0 ? out : -out;
    }
    std::vector<series_t> next;
    for (int p = 1; p <= n; ++p) {
      series_t acc(n, d);
      for (int q = 1; q <= n; ++q)
        acc += series_t::multiply_truncated(ctx.k_path(q, p), through[sz(q - 1)], d);
      next.push_back(std::move(acc));
    }
    incoming = std::move(next);
  }
}

template <Scalar S>
BasicSeries<S> feynman_evaluate(const DecoratedTree& t, const Cumulants<S>& k,
                                const EffectiveAction<S>& l, int degree) {
  FeynmanContext<S> ctx(k, l, degree);
  return feynman_evaluate(t, ctx);
}

/// Σ over w-decorated admissible trees of F(T), truncated to `ctx.degree()`.
template <Scalar S>
BasicSeries<S> tree_expansion(FeynmanContext<S>& ctx, const Word& w) {
  if (w.degree() < 2) throw PreconditionError("tree_expansion: word must have length >= 2");
  BasicSeries<S> out(ctx.alphabet(), ctx.degree());
  for (auto& tree : enumerate_admissible(static_cast<int>(w.degree())))
    out += feynman_evaluate(DecoratedTree(std::move(tree), w), ctx);
  return out;
}

template <Scalar S>
BasicSeries<S> tree_expansion(const Cumulants<S>& k, const EffectiveAction<S>& l, const Word& w) {
  FeynmanContext<S> ctx(k, l, k.max_degree() - static_cast<int>(w.degree()));
  return tree_expansion(ctx, w);
}

/// tree_expansion(w) == K(y)_w for every word of length 2..n_max, up to the
/// given y-degree.
template <Scalar S>
IdentityReport verify_theorem(const Cumulants<S>& k, const EffectiveAction<S>& l, int n_max,
                              int degree) {
  if (n_max < 2) throw PreconditionError("verify_theorem: n_max must be at least 2");
  if (k.max_degree() < n_max + degree)
    throw PreconditionError("verify_theorem: cumulants must be known to degree n_max + degree");
  IdentityReport report{"theorem", -1, {}};
  FeynmanContext<S> ctx(k, l, degree);
  for (int len = 2; len <= n_max; ++len) {
    for (const auto& w : words_of_degree(k.alphabet(), len)) {
      const auto lhs = iterated_derivative(k.series(), w).truncated(degree);
      compare_into(report, "w=" + w.to_string(), lhs, tree_expansion(ctx, w));
    }
  }
  return report;
}

/// One monomial pattern of the univariate expansion at y = 0: the arities of
/// the internal vertices (largest first), the power of k2 and the signed
/// number of trees producing it.
struct TreePattern {
  std::vector<int> arities;
  int k2_power = 0;
  int multiplicity = 0;
};

struct TreeTableRow {
  int order = 0;
  std::vector<TreePattern> patterns;

  /// The relation k_n/k2^n = Σ multiplicity · ℓ... this row encodes.
  UnivariateRelation relation() const;
};

/// Rows for orders 2..max_order.
std::vector<TreeTableRow> univariate_tree_table(int max_order);

}  // namespace planar
