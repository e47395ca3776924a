#include "planar/trees.hpp"

#include <algorithm>
#include <set>

namespace planar {

int TreeNode::leaf_count() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const auto& c : children) total += c.leaf_count();
  return total;
}

int TreeNode::internal_count() const {
  if (is_leaf()) return 0;
  int total = 1;
  for (const auto& c : children) total += c.internal_count();
  return total;
}

std::strong_ordering operator<=>(const TreeNode& a, const TreeNode& b) {
  if (a.is_leaf() || b.is_leaf()) return !a.is_leaf() <=> !b.is_leaf();
  return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(),
                                                b.children.begin(), b.children.end());
}

namespace {

void check_admissible(const TreeNode& node) {
  if (node.is_leaf()) return;
  if (node.children.size() < 2)
    throw PreconditionError("admissible tree: internal vertex with a single child");
  for (const auto& c : node.children) check_admissible(c);
}

void render(const TreeNode& node, int& label, std::string& out) {
  if (node.is_leaf()) {
    out += std::to_string(label++);
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out += ',';
    render(node.children[i], label, out);
  }
  out += ']';
}

// Every way of adding one new last leaf inside the subtree rooted at `node`,
// where `node` hangs from a characteristic-path edge.
std::vector<TreeNode> path_variants(const TreeNode& node) {
  std::vector<TreeNode> out;
  out.push_back(TreeNode{{node, TreeNode::leaf()}});  // subdivide the edge above node
  if (node.is_leaf()) return out;
  TreeNode widened = node;
  widened.children.push_back(TreeNode::leaf());  // new last child of node
  out.push_back(std::move(widened));
  for (auto& v : path_variants(node.children.back())) {
    TreeNode copy = node;
    copy.children.back() = std::move(v);
    out.push_back(std::move(copy));
  }
  return out;
}

}  // namespace

AdmissibleTree::AdmissibleTree(TreeNode top) : top_(std::move(top)) { check_admissible(top_); }

std::string AdmissibleTree::to_string() const {
  std::string out;
  int label = 2;
  render(top_, label, out);
  return out;
}

std::vector<AdmissibleTree> enumerate_admissible(int n) {
  if (n < 2) throw PreconditionError("enumerate_admissible: n must be at least 2");
  std::vector<TreeNode> level{TreeNode::leaf()};
  for (int marks = 2; marks < n; ++marks) {
    std::set<TreeNode> next;
    for (const auto& t : level)
      for (auto& v : path_variants(t)) next.insert(std::move(v));
    level.assign(next.begin(), next.end());
  }
  std::vector<AdmissibleTree> out;
  out.reserve(level.size());
  for (auto& t : level) out.emplace_back(std::move(t));
  std::sort(out.begin(), out.end());
  return out;
}

std::string CharacteristicPath::to_string() const {
  std::string out = "1";
  for (int v : vertices) out += " - v" + std::to_string(v);
  return out + " - " + std::to_string(last_leaf);
}

CharacteristicPath characteristic_path(const AdmissibleTree& t) {
  CharacteristicPath path;
  path.last_leaf = t.marks();
  int preorder = 0;
  const TreeNode* node = &t.top();
  while (!node->is_leaf()) {
    path.vertices.push_back(preorder);
    // Skip the internal vertices in the off-path children, which come first in preorder.
    for (std::size_t c = 0; c + 1 < node->children.size(); ++c)
      preorder += node->children[c].internal_count();
    ++preorder;
    node = &node->children.back();
  }
  return path;
}

DecoratedTree::DecoratedTree(AdmissibleTree tree, Word word)
    : tree_(std::move(tree)), word_(std::move(word)) {
  if (static_cast<int>(word_.degree()) != tree_.marks())
    throw PreconditionError("decorated tree: word length must equal the number of marks");
}

namespace {

struct TermBuilder {
  // Dummies of one internal vertex: the root-side edge end, then child edge ends.
  struct Ends {
    int parent = 0;
    std::vector<int> children;
  };

  std::vector<std::pair<const TreeNode*, Ends>> ends;
  std::vector<std::pair<const TreeNode*, int>> labels;
  int next_dummy = 1;
  int next_label = 2;

  void number(const TreeNode& node) {
    if (node.is_leaf()) {
      labels.emplace_back(&node, next_label++);
      return;
    }
    Ends e;
    e.parent = next_dummy++;
    for (std::size_t i = 0; i < node.children.size(); ++i) e.children.push_back(next_dummy++);
    ends.emplace_back(&node, std::move(e));
    for (const auto& c : node.children) number(c);
  }

  const Ends& ends_of(const TreeNode& node) const {
    for (const auto& [ptr, e] : ends)
      if (ptr == &node) return e;
    throw std::logic_error("feynman_term: unnumbered vertex");
  }

  // Name of the lower end of the edge entering `node`.
  std::string lower(const TreeNode& node) const {
    if (!node.is_leaf()) return "e" + std::to_string(ends_of(node).parent);
    for (const auto& [ptr, l] : labels)
      if (ptr == &node) return std::to_string(l);
    throw std::logic_error("feynman_term: unlabelled leaf");
  }

  static std::string e(int d) { return "e" + std::to_string(d); }

  std::string vertex_factor(const TreeNode& node, const char* name) const {
    const auto& en = ends_of(node);
    std::string out = std::string(name) + "[" + e(en.parent);
    for (int d : en.children) out += "," + e(d);
    return out + "]";
  }

  // Off-path material below child `c` of `node`, then the edge joining them.
  void off_path(const TreeNode& node, std::size_t c, std::vector<std::string>& out) const {
    const TreeNode& child = node.children[c];
    if (!child.is_leaf()) {
      for (std::size_t j = child.children.size(); j-- > 0;) off_path(child, j, out);
      out.push_back(vertex_factor(child, "L0"));
    }
    out.push_back("K0[" + e(ends_of(node).children[c]) + "," + lower(child) + "]");
  }
};

}  // namespace

std::string feynman_term(const AdmissibleTree& t) {
  TermBuilder b;
  b.number(t.top());
  // Segments from the root outward; printed in reverse.
  std::vector<std::vector<std::string>> segments;
  segments.push_back({"K[1," + b.lower(t.top()) + "]"});
  const TreeNode* node = &t.top();
  while (!node->is_leaf()) {
    std::vector<std::string> seg;
    for (std::size_t j = node->children.size() - 1; j-- > 0;) b.off_path(*node, j, seg);
    seg.push_back(b.vertex_factor(*node, "L"));
    segments.push_back(std::move(seg));
    const TreeNode& next = node->children.back();
    segments.push_back({"K[" + TermBuilder::e(b.ends_of(*node).children.back()) + "," +
                        b.lower(next) + "]"});
    node = &next;
  }
  std::string out = t.internal_vertices() % 2 == 1 ? "-" : "";
  bool first = true;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    for (const auto& f : *it) {
      if (!first) out += ' ';
      out += f;
      first = false;
    }
  }
  return out;
}

namespace {

void collect_arities(const TreeNode& node, std::vector<int>& out) {
  if (node.is_leaf()) return;
  out.push_back(static_cast<int>(node.children.size()) + 1);
  for (const auto& c : node.children) collect_arities(c, out);
}

}  // namespace

UnivariateRelation TreeTableRow::relation() const {
  UnivariateRelation r{order, {}};
  for (const auto& p : patterns) r.terms.push_back({p.multiplicity, p.arities});
  return r;
}

std::vector<TreeTableRow> univariate_tree_table(int max_order) {
  if (max_order < 2) throw PreconditionError("univariate_tree_table: max_order must be at least 2");
  std::vector<TreeTableRow> rows;
  for (int order = 2; order <= max_order; ++order) {
    std::map<std::vector<int>, int> counts;
    for (const auto& t : enumerate_admissible(order)) {
      std::vector<int> arities;
      collect_arities(t.top(), arities);
      std::sort(arities.begin(), arities.end(), std::greater<>());
      counts[arities] += arities.size() % 2 == 0 ? 1 : -1;
    }
    TreeTableRow row;
    row.order = order;
    for (const auto& [arities, m] : counts)
      if (m != 0) row.patterns.push_back({arities, static_cast<int>(arities.size()) - 1, m});
    std::sort(row.patterns.begin(), row.patterns.end(), [](const auto& a, const auto& b) {
      if (a.arities.size() != b.arities.size()) return a.arities.size() < b.arities.size();
      return a.arities > b.arities;
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace planar
