#include "urysohn/trees.hpp"

#include <bit>

#include "urysohn/hull.hpp"

namespace urysohn {

namespace {

std::vector<int> address_witness(const std::string& address) {
  std::vector<int> w;
  for (char c : address) w.push_back(c - '0');
  return w;
}

std::vector<std::vector<double>> to_double_list(const std::vector<ExactVector>& points) {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(to_double(p));
  return out;
}

}  // namespace

std::string heap_address(std::size_t index) {
  if (index == 0) throw InvalidInput("heap indices start at 1");
  const int width = std::bit_width(index) - 1;
  std::string out;
  for (int b = width - 1; b >= 0; --b) out.push_back((index >> b) & 1U ? '1' : '0');
  return out;
}

ValidationReport validate_tree(const NEpsTree& tree) {
  ValidationReport report;
  if (tree.depth < 0) {
    report.add("shape", {}, "negative depth");
    return report;
  }
  const std::size_t count = (std::size_t{1} << (tree.depth + 1)) - 1;
  if (tree.nodes.size() != count) {
    report.add("shape", {}, "expected " + std::to_string(count) + " nodes, found " + std::to_string(tree.nodes.size()));
  }
  std::size_t dim = 0;
  bool have_dim = false;
  for (std::size_t i = 1; i <= count; ++i) {
    const std::string address = heap_address(i);
    const auto it = tree.nodes.find(address);
    if (it == tree.nodes.end()) {
      report.add("shape", address_witness(address), "missing node '" + address + "'");
      continue;
    }
    if (!have_dim) {
      dim = it->second.size();
      have_dim = true;
    } else if (it->second.size() != dim) {
      report.add("shape", address_witness(address), "dimension mismatch at '" + address + "'");
    }
  }
  if (!report.ok()) return report;
  const Rational eps2 = tree.eps * tree.eps;
  const Rational radius2 = tree.radius * tree.radius;
  for (std::size_t i = 1; i <= count; ++i) {
    const std::string address = heap_address(i);
    const ExactVector& node = tree.nodes.at(address);
    if (tree.radius < 0 || squared_norm(node) > radius2) {
      report.add("radius", address_witness(address), "node '" + address + "' lies outside the radius");
    }
    if (static_cast<int>(address.size()) == tree.depth) continue;
    const ExactVector& left = tree.nodes.at(address + "0");
    const ExactVector& right = tree.nodes.at(address + "1");
    for (std::size_t k = 0; k < dim; ++k) {
      if (node[k] * 2 != left[k] + right[k]) {
        report.add("midpoint", address_witness(address), "node '" + address + "' is not the midpoint of its children");
        break;
      }
    }
    if (squared_norm(subtract(left, right)) < eps2) {
      report.add("separation", address_witness(address), "children of '" + address + "' are closer than eps");
    }
  }
  return report;
}

NEpsTree tree_from_nested_sets(const std::vector<std::vector<ExactVector>>& sets, const Rational& eps,
                               const Rational& radius) {
  const std::size_t size = sets.size();
  if (size < 2 || !std::has_single_bit(size)) throw InvalidInput("expected sets K_1..K_{2^(n+1)-1}");
  const std::size_t count = size - 1;
  const int depth = std::bit_width(size) - 2;
  for (std::size_t i = 1; i <= count; ++i) {
    if (sets[i].empty()) throw InvalidInput("set K_" + std::to_string(i) + " is empty");
  }
  const double eps_value = eps.convert_to<double>();
  for (std::size_t i = 1; 2 * i + 1 <= count; ++i) {
    for (std::size_t child : {2 * i, 2 * i + 1}) {
      for (const auto& point : sets[child]) {
        if (!in_convex_hull(point, sets[i])) {
          throw InvalidInput("containment fails at index " + std::to_string(i) + ": a point of K_" +
                             std::to_string(child) + " is outside conv K_" + std::to_string(i));
        }
      }
    }
    const HullSeparation sep = hull_separation(to_double_list(sets[2 * i]), to_double_list(sets[2 * i + 1]));
    if (sep.distance < eps_value) {
      throw InvalidInput("separation fails at index " + std::to_string(i) + ": hull distance " +
                         std::to_string(sep.distance) + " is below eps");
    }
  }
  NEpsTree tree;
  tree.depth = depth;
  tree.eps = eps;
  tree.radius = radius;
  std::vector<ExactVector> node(size);
  for (std::size_t i = count; i >= 1; --i) {
    if (2 * i > count) {
      node[i] = sets[i].front();
    } else {
      node[i] = node[2 * i];
      for (std::size_t k = 0; k < node[i].size(); ++k) node[i][k] = (node[2 * i][k] + node[2 * i + 1][k]) / 2;
    }
    tree.nodes.emplace(heap_address(i), node[i]);
  }
  const ValidationReport report = validate_tree(tree);
  if (!report.ok()) throw InvalidInput("constructed tree fails validation: " + report.to_string());
  return tree;
}

}  // namespace urysohn
