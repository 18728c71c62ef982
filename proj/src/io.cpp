#include "decat/io.hpp"

#include <limits>
#include <sstream>

#include "decat/casimir.hpp"

namespace decat::io {

ordered_json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

ordered_json to_json(const Weight& w) {
  ordered_json out = ordered_json::object();
  for (const auto& [i, m] : w.alpha_mult()) out[std::to_string(i)] = m;
  return out;
}

ordered_json to_json(const SparseIntMatrix& m) {
  ordered_json rows = ordered_json::array();
  ordered_json cols = ordered_json::array();
  ordered_json entries = ordered_json::array();
  for (const auto& p : m.rows) rows.push_back(to_string(p));
  for (const auto& p : m.cols) cols.push_back(to_string(p));
  for (const auto& x : m.entries) entries.push_back({x.row, x.col, integer_json(x.value)});
  return {{"rows", rows}, {"cols", cols}, {"entries", entries}};
}

std::string to_csv(const SparseIntMatrix& m) {
  std::ostringstream os;
  os << "row,col,coeff\n";
  for (const auto& x : m.entries)
    os << '"' << to_string(m.rows[x.row]) << "\",\"" << to_string(m.cols[x.col]) << "\"," << x.value << '\n';
  return os.str();
}

ordered_json to_json(const CrystalGraph& g) {
  ordered_json nodes = ordered_json::array();
  for (const auto& p : g.nodes)
    nodes.push_back({{"partition", to_string(p)}, {"size", p.size()}, {"weight", to_json(weight(p, g.modulus))}});
  ordered_json edges = ordered_json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"src", to_string(e.source)}, {"dst", to_string(e.target)}, {"residue", e.residue}});
  return {{"modulus", g.modulus.value()}, {"nodes", nodes}, {"edges", edges}};
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  // modulus " << g.modulus.value() << ", max size " << g.max_size << "\n";
  for (const auto& p : g.nodes) os << "  \"" << to_string(p) << "\" [label=\"" << to_string(p) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  \"" << to_string(e.source) << "\" -> \"" << to_string(e.target) << "\" [label=\"" << e.residue
       << "\"];\n";
  os << "}\n";
  return os.str();
}

ordered_json to_json(const Block& b) {
  ordered_json members = ordered_json::array();
  for (const auto& p : b.members) members.push_back(to_string(p));
  return {{"degree", b.degree},
          {"core", to_string(b.core)},
          {"members", members},
          {"weight", to_json(b.weight)},
          {"p_weight", b.p_weight}};
}

ordered_json blocks_to_json(Modulus e, int d, const std::vector<Block>& blocks,
                            const std::vector<std::vector<Block>>& classes) {
  ordered_json bl = ordered_json::array();
  for (const auto& b : blocks) bl.push_back(to_json(b));
  ordered_json cl = ordered_json::array();
  for (const auto& group : classes) {
    ordered_json cores = ordered_json::array();
    for (const auto& b : group) cores.push_back({{"degree", b.degree}, {"core", to_string(b.core)}});
    cl.push_back({{"p_weight", group.front().p_weight}, {"blocks", cores}});
  }
  return {{"modulus", e.value()}, {"degree", d}, {"blocks", bl}, {"derived_equivalence_classes", cl}};
}

ordered_json casimir_to_json(const Partition& p, int n, Modulus e) {
  ordered_json table = ordered_json::array();
  for (const auto& row : eigenvalue_table(p, n, e)) {
    table.push_back({{"box", {row.box.row, row.box.col}},
                     {"kind", row.addable ? "addable" : "removable"},
                     {"operator", row.addable ? "Y" : "X"},
                     {"content", row.content},
                     {"residue", row.residue.value()}});
  }
  return {{"partition", to_string(p)}, {"n", n}, {"modulus", e.value()}, {"casimir", casimir_scalar(p, n)},
          {"eigenvalues", table}};
}

ordered_json core_to_json(const Partition& p, Modulus e) {
  return {{"core", to_string(p_core(p, e))}, {"p_weight", p_weight(p, e)}};
}

ordered_json to_json(const std::vector<Partition>& multiset) {
  ordered_json out = ordered_json::array();
  for (const auto& p : multiset) out.push_back(to_string(p));
  return out;
}

ordered_json to_json(const HeckeElement& x) {
  ordered_json out = ordered_json::array();
  for (const auto& [key, c] : x.terms())
    out.push_back({{"exponents", key.first}, {"permutation", key.second}, {"coeff", integer_json(c)}});
  return out;
}

ordered_json to_json(const VerifyReport& r, bool timing) {
  ordered_json suites = ordered_json::array();
  for (const auto& s : r.suites) {
    ordered_json entry{{"name", s.name},
                       {"parameters", s.parameters},
                       {"passed", s.passed},
                       {"instances", s.instances}};
    entry["counterexample"] = s.passed ? ordered_json(nullptr) : ordered_json(s.counterexample);
    if (timing) entry["elapsed_ms"] = s.elapsed_ms;
    suites.push_back(std::move(entry));
  }
  return {{"passed", r.passed()}, {"suites", suites}};
}

}  // namespace decat::io
