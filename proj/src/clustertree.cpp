#include "hyperinv/clustertree.hpp"

#include <algorithm>
#include <set>

namespace hyperinv {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

KauszReport check_kausz_form(const RootConfig& cfg, const Valuation& v) {
  KauszReport report;
  if (!v.is_odd()) report.violations.emplace_back("residue characteristic 2");
  if (!cfg.all_finite()) {
    report.violations.emplace_back("root at infinity");
    return report;
  }
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    if (v.order(cfg.at(r)) < Order(0)) {
      report.violations.push_back("root " + std::to_string(r) + " is not integral");
    }
  }
  if (!report.ok()) return report;

  for (std::size_t r = 0; r < cfg.size(); ++r) {
    for (std::size_t s = r + 1; s < cfg.size(); ++s) {
      const long n = v.finite_order(cfg.at(r) - cfg.at(s));
      if (n % 2 != 0) {
        report.violations.push_back("odd valuation nu(a_" + std::to_string(r) + " - a_" + std::to_string(s) +
                                    ") = " + std::to_string(n));
      }
    }
  }

  // Integral rationals with equal residue mod p differ by something of positive order.
  std::vector<std::size_t> class_reps;
  for (std::size_t r = 0; r < cfg.size(); ++r) {
    const bool seen = std::any_of(class_reps.begin(), class_reps.end(), [&](std::size_t s) {
      return v.order(cfg.at(r) - cfg.at(s)) > Order(0);
    });
    if (!seen) class_reps.push_back(r);
  }
  if (class_reps.size() < 3) {
    report.violations.push_back("roots occupy only " + std::to_string(class_reps.size()) +
                                " residue classes mod p");
  }
  return report;
}

KauszFormError::KauszFormError(KauszReport report)
    : ValidationError("not in Kausz normal form: " + join(report.violations)), report_(std::move(report)) {}

ClusterTree::ClusterTree(int genus, std::vector<Rat> values, Valuation v)
    : genus_(genus), values_(std::move(values)), valuation_(std::move(v)) {}

long ClusterTree::pair_order(std::size_t r, std::size_t s) const {
  if (r == s) throw ValidationError("pair_order needs distinct roots");
  return pair_order_.at(r).at(s);
}

ClusterTree ClusterTree::with_representative(std::size_t id, std::size_t member) const {
  const auto& ms = nodes_.at(id).members;
  if (std::find(ms.begin(), ms.end(), member) == ms.end()) {
    throw ValidationError("representative must be a member of the node");
  }
  ClusterTree copy = *this;
  copy.nodes_[id].representative = member;
  return copy;
}

ClusterTree build_tree(const RootConfig& cfg, const Valuation& v) {
  auto report = check_kausz_form(cfg, v);
  if (!report.ok()) throw KauszFormError(std::move(report));

  const std::size_t n = cfg.size();
  std::vector<Rat> values;
  values.reserve(n);
  for (std::size_t r = 0; r < n; ++r) values.push_back(cfg.at(r));
  ClusterTree tree(cfg.genus(), std::move(values), v);

  tree.pair_order_.assign(n, std::vector<long>(n, 0));
  tree.root_level_.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (r == s) continue;
      tree.pair_order_[r][s] = v.finite_order(tree.values_[r] - tree.values_[s]);
      tree.root_level_[r] = std::max(tree.root_level_[r], tree.pair_order_[r][s]);
    }
  }

  // Level 0 is the single class of the whole valuation ring.
  ClusterNode top;
  top.level = 0;
  for (std::size_t r = 0; r < n; ++r) top.members.push_back(r);
  top.representative = 0;
  tree.nodes_.push_back(top);

  // Split each node at level m into classes mod p^{m+1}; keep those with >= 2 roots.
  for (std::size_t id = 0; id < tree.nodes_.size(); ++id) {
    const long next = tree.nodes_[id].level + 1;
    std::vector<std::size_t> pending = tree.nodes_[id].members;
    while (!pending.empty()) {
      const std::size_t seed = pending.front();
      std::vector<std::size_t> cls;
      std::vector<std::size_t> rest;
      for (std::size_t r : pending) {
        if (r == seed || tree.pair_order_[seed][r] >= next) {
          cls.push_back(r);
        } else {
          rest.push_back(r);
        }
      }
      pending = std::move(rest);
      if (cls.size() < 2) continue;
      ClusterNode child;
      child.level = next;
      child.members = std::move(cls);
      child.representative = child.members.front();
      child.parent = id;
      tree.nodes_.push_back(std::move(child));
      tree.nodes_[id].children.push_back(tree.nodes_.size() - 1);
    }
  }

  tree.lambda_.assign(n, 0);
  for (std::size_t id = 0; id < tree.nodes_.size(); ++id) {
    for (std::size_t r : tree.nodes_[id].members) {
      if (tree.nodes_[id].level >= tree.nodes_[tree.lambda_[r]].level) tree.lambda_[r] = id;
    }
  }
  return tree;
}

long mult_x(const ClusterTree& tree, std::size_t node, std::size_t r) {
  const ClusterNode& c = tree.node(node);
  if (r >= tree.root_count()) throw ValidationError("root index out of range");
  if (r == c.representative) return c.level;
  return std::min(c.level, tree.pair_order(c.representative, r));
}

Rat mult_y(const ClusterTree& tree, std::size_t node) {
  long sum = 0;
  for (std::size_t r = 0; r < tree.root_count(); ++r) sum += mult_x(tree, node, r);
  return Rat(sum, 2);
}

Rat v_mult(const ClusterTree& tree, std::size_t k, std::size_t node) {
  const long g = tree.genus();
  const long n_c = tree.node(node).level;
  const long n_k = tree.root_level(k);
  long sum_k = 0;
  for (std::size_t r = 0; r < tree.root_count(); ++r) {
    if (r != k) sum_k += tree.pair_order(k, r);
  }
  return Rat((g - 1) * mult_x(tree, node, k)) - mult_y(tree, node) + Rat(n_c) -
         Rat((2 * g - 1) * n_k, 2) + Rat(sum_k, 2);
}

Rat pairing_combination(const ClusterTree& tree, const Triple& t) {
  t.validate(tree.root_count());
  const long g = tree.genus();
  const std::size_t ci = tree.component_of(t.i);
  const std::size_t cj = tree.component_of(t.j);
  const std::size_t ck = tree.component_of(t.k);
  // (W_a, V_b) is the multiplicity of V_b along the component met by W_a.
  const Rat wv = v_mult(tree, t.k, ci) - v_mult(tree, t.k, cj);
  const Rat vw = v_mult(tree, t.i, ck) - v_mult(tree, t.j, ck);
  return Rat(2 * g - 1) * wv + vw;
}

Rat pairing_combination(const RootConfig& cfg, const Valuation& v, const Triple& t) {
  return pairing_combination(build_tree(cfg, v), t);
}

}  // namespace hyperinv
