#include "p5col/instance.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace p5col {

std::string ColourSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Colour c : members()) {
    if (!first) out += ',';
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

Instance::Instance(const Graph& g, std::vector<ColourSet> lists, ColourSet universe)
    : graph_(&g), lists_(std::move(lists)), assigned_(lists_.size(), 0), universe_(universe) {
  if (lists_.size() != g.vertex_count()) throw std::invalid_argument("one list per vertex required");
  for (ColourSet l : lists_) {
    if (!l.is_subset_of(universe_)) throw std::invalid_argument("list " + l.to_string() + " outside universe");
    if (l.empty()) ++empty_lists_;
  }
}

VertexSet Instance::unassigned_in(const VertexSet& s) const {
  VertexSet out = s;
  for (Vertex v : s) {
    if (assigned_[v] != 0) out.erase(v);
  }
  return out;
}

Instance Instance::child(BranchLabel label) const {
  Instance c = *this;
  c.depth_ = depth_ + 1;
  c.provenance_ = label;
  return c;
}

void Instance::set_list(Vertex v, ColourSet list) {
  if (lists_[v].empty() != list.empty()) empty_lists_ += list.empty() ? 1 : -1;
  lists_[v] = list;
}

Instance full_instance(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const ColourSet all = ColourSet::range(k);
  return Instance(g, std::vector<ColourSet>(g.vertex_count(), all), all);
}

Instance assign(const Instance& inst, Vertex v, Colour c) {
  if (!inst.list(v).contains(c)) {
    throw std::invalid_argument("colour " + std::to_string(c) + " not in list of vertex " + std::to_string(v));
  }
  Instance out = inst.child({v, ColourSet{c}, false});
  out.set_list(v, ColourSet{c});
  out.assigned_[v] = c;
  for (Vertex u : inst.graph().neighbours(v)) {
    ColourSet l = out.lists_[u];
    if (l.contains(c)) {
      l.erase(c);
      out.set_list(u, l);
    }
  }
  return out;
}

Instance restrict_list(const Instance& inst, Vertex v, ColourSet keep) {
  Instance out = inst.child({v, keep, true});
  out.set_list(v, inst.list(v) & keep);
  return out;
}

std::vector<Instance> branch_on_vertex(const Instance& inst, Vertex v, ColourSet c_set) {
  std::vector<Instance> children;
  for (Colour c : (inst.list(v) & c_set).members()) children.push_back(assign(inst, v, c));
  const ColourSet rest = inst.list(v) - c_set;
  if (!rest.empty()) {
    Instance r = restrict_list(inst, v, rest);
    children.push_back(std::move(r));
  }
  return children;
}

bool dependent(const Instance& inst, Vertex u, Vertex v) {
  return inst.graph().adjacent(u, v) && inst.list(u).intersects(inst.list(v));
}

ColourSet col(const Instance& inst, const VertexSet& s) {
  ColourSet out;
  for (Vertex v : s) out |= inst.list(v);
  return out;
}

std::vector<Instance> colour_seed(const Instance& inst, const VertexSet& seed) {
  const auto order = seed.to_vector();
  std::vector<Instance> out;
  auto extend = [&](auto&& self, const Instance& cur, std::size_t i) -> void {
    if (cur.dead()) return;
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    // Earlier seed members already removed their colours from this list.
    for (Colour c : cur.list(order[i]).members()) self(self, assign(cur, order[i], c), i + 1);
  };
  extend(extend, inst, 0);
  return out;
}

std::optional<std::size_t> FixedSetPartition::fixed_index_of(Vertex v) const {
  for (std::size_t i = 0; i < fixed_sets.size(); ++i) {
    if (fixed_sets[i].contains(v)) return i;
  }
  return std::nullopt;
}

FixedSetPartition fixed_set_partition(const Instance& inst, const VertexSet& component, const VertexSet& seed) {
  const Graph& g = inst.graph();
  FixedSetPartition p;
  VertexSet remaining = component - seed;
  for (Vertex d : seed) {
    const auto c = inst.assigned(d);
    if (!c) throw std::logic_error("dominator " + std::to_string(d) + " is not coloured");
    p.dominators.push_back(d);
    p.colours.push_back(*c);
    VertexSet f = remaining & g.neighbours(d);
    remaining -= f;
    p.fixed_sets.push_back(std::move(f));
  }
  if (!remaining.empty()) throw std::logic_error("seed does not dominate " + remaining.to_string());
  return p;
}

void check_partition(const Instance& inst, const VertexSet& component, const FixedSetPartition& partition) {
  const Graph& g = inst.graph();
  VertexSet covered = g.make_set(partition.dominators);
  for (std::size_t i = 0; i < partition.fixed_sets.size(); ++i) {
    const VertexSet& f = partition.fixed_sets[i];
    if (f.intersects(covered)) throw std::logic_error("fixed set " + std::to_string(i) + " overlaps earlier sets");
    covered |= f;
    const Vertex d = partition.dominators[i];
    if (!f.is_subset_of(g.neighbours(d))) throw std::logic_error("fixed set not adjacent to its dominator");
    for (std::size_t j = 0; j < i; ++j) {
      if (f.intersects(g.neighbours(partition.dominators[j]))) {
        throw std::logic_error("fixed set adjacent to an earlier dominator");
      }
    }
    for (Vertex v : f) {
      if (inst.list(v).contains(partition.colours[i])) throw std::logic_error("dominator colour not propagated");
    }
  }
  if (!(covered == component)) throw std::logic_error("fixed sets do not cover the component");
}

std::string write_instance(const Instance& inst) {
  std::ostringstream os;
  for (Vertex v = 0; v < inst.vertex_count(); ++v) {
    os << v + 1 << ':';
    for (Colour c : inst.list(v).members()) os << ' ' << c;
    if (inst.is_assigned(v)) os << " *";
    os << '\n';
  }
  return os.str();
}

namespace {

int parse_int(std::string_view field, std::size_t line_no) {
  int value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("lists line " + std::to_string(line_no) + ": bad integer '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Instance read_instance(std::string_view text, const Graph& g, int k) {
  const ColourSet universe = ColourSet::range(k);
  std::vector<ColourSet> lists(g.vertex_count(), universe);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::pair<Vertex, Colour>> flagged;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("lists line " + std::to_string(line_no) + ": missing ':'");

    std::string_view head(line.data() + first, colon - first);
    while (!head.empty() && (head.back() == ' ' || head.back() == '\t')) head.remove_suffix(1);
    const int v1 = parse_int(head, line_no);
    if (v1 < 1 || static_cast<std::size_t>(v1) > g.vertex_count()) {
      throw std::invalid_argument("lists line " + std::to_string(line_no) + ": vertex out of range");
    }
    const Vertex v = static_cast<Vertex>(v1 - 1);
    if (seen[v]) throw std::invalid_argument("lists line " + std::to_string(line_no) + ": duplicate vertex");
    seen[v] = true;

    std::istringstream fields(line.substr(colon + 1));
    std::string tok;
    ColourSet list;
    bool star = false;
    while (fields >> tok) {
      if (tok == "*") {
        star = true;
        continue;
      }
      const int c = parse_int(tok, line_no);
      if (!universe.contains(c)) {
        throw std::invalid_argument("lists line " + std::to_string(line_no) + ": colour outside 1.." + std::to_string(k));
      }
      list.insert(c);
    }
    lists[v] = list;
    if (star) {
      if (list.size() != 1) throw std::invalid_argument("lists line " + std::to_string(line_no) + ": '*' needs one colour");
      flagged.emplace_back(v, list.front());
    }
  }

  Instance inst(g, std::move(lists), universe);
  for (auto [v, c] : flagged) {
    if (!inst.list(v).contains(c)) throw std::invalid_argument("conflicting assignments in lists text");
    inst = assign(inst, v, c);
  }
  return inst;
}

}  // namespace p5col
