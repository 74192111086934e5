#include "p5col/testkit.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace p5col::testkit {

std::optional<Colouring> oracle_list_colouring(const Instance& inst, std::size_t vertex_cap) {
  const Graph& g = inst.graph();
  const std::size_t n = g.vertex_count();
  if (n > vertex_cap) throw std::invalid_argument("oracle limited to " + std::to_string(vertex_cap) + " vertices");

  std::vector<std::uint64_t> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    lists[v] = inst.list(v).mask();
    if (lists[v] == 0) return std::nullopt;
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> colour(n, 0);  // 0-based bit index + 1

  auto available = [&](Vertex v) {
    std::uint64_t free = lists[v];
    for (Vertex u : adj[v]) {
      if (colour[u] != 0) free &= ~(std::uint64_t{1} << (colour[u] - 1));
    }
    return free;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const Vertex v = order[i];
    const std::uint64_t free = available(v);
    for (int bit = 0; bit < 64; ++bit) {
      if (!(free >> bit & 1U)) continue;
      colour[v] = bit + 1;
      bool wiped = false;
      for (Vertex u : adj[v]) {
        if (colour[u] == 0 && available(u) == 0) {
          wiped = true;
          break;
        }
      }
      if (!wiped && self(self, i + 1)) return true;
      colour[v] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return Colouring{std::vector<Colour>(colour.begin(), colour.end())};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::split: return "split";
    case Family::cograph: return "cograph";
    case Family::multipartite: return "multipartite";
    case Family::er_rejection: return "er_rejection";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "split") return Family::split;
  if (name == "cograph") return Family::cograph;
  if (name == "multipartite") return Family::multipartite;
  if (name == "er_rejection") return Family::er_rejection;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

bool coin(std::mt19937_64& rng, double p) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p;
}

namespace {

Graph relabel(std::size_t n, const std::vector<Edge>& edges, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (auto [u, v] : edges) mapped.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(n, mapped);
}

void build_cotree(std::size_t lo, std::size_t hi, double p, std::mt19937_64& rng, std::vector<Edge>& edges) {
  if (hi - lo <= 1) return;
  const std::size_t mid = lo + 1 + uniform_below(rng, hi - lo - 1);
  build_cotree(lo, mid, p, rng, edges);
  build_cotree(mid, hi, p, rng, edges);
  if (coin(rng, p)) {
    for (std::size_t u = lo; u < mid; ++u) {
      for (std::size_t v = mid; v < hi; ++v) edges.emplace_back(u, v);
    }
  }
}

}  // namespace

Graph generate(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::split: {
      const std::size_t c = spec.clique != 0 ? spec.clique : std::max<std::size_t>(spec.n / 3, spec.n > 0 ? 1 : 0);
      if (c > spec.n) throw std::invalid_argument("clique larger than n");
      for (std::size_t u = 0; u < c; ++u) {
        for (std::size_t v = u + 1; v < c; ++v) edges.emplace_back(u, v);
      }
      for (std::size_t s = c; s < spec.n; ++s) {
        for (std::size_t u = 0; u < c; ++u) {
          if (coin(rng, spec.p)) edges.emplace_back(u, s);
        }
      }
      return relabel(spec.n, edges, rng);
    }
    case Family::cograph:
      build_cotree(0, spec.n, spec.p, rng, edges);
      return relabel(spec.n, edges, rng);
    case Family::multipartite: {
      if (spec.parts.empty()) throw std::invalid_argument("multipartite needs part sizes");
      std::vector<std::size_t> part_of;
      for (std::size_t i = 0; i < spec.parts.size(); ++i) part_of.insert(part_of.end(), spec.parts[i], i);
      for (std::size_t u = 0; u < part_of.size(); ++u) {
        for (std::size_t v = u + 1; v < part_of.size(); ++v) {
          if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
        }
      }
      return Graph::from_edges(part_of.size(), edges);
    }
    case Family::er_rejection: {
      if (spec.n > 12) throw std::invalid_argument("er_rejection is limited to n <= 12");
      for (int attempt = 0; attempt < 10000; ++attempt) {
        edges.clear();
        for (std::size_t u = 0; u < spec.n; ++u) {
          for (std::size_t v = u + 1; v < spec.n; ++v) {
            if (coin(rng, spec.p)) edges.emplace_back(u, v);
          }
        }
        Graph g = Graph::from_edges(spec.n, edges);
        if (is_p5_free(g)) return g;
      }
      throw std::runtime_error("er_rejection: no P5-free sample within the retry limit");
    }
  }
  throw std::invalid_argument("unknown family");
}

Instance random_sublists(const Graph& g, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::mt19937_64 rng(seed);
  const ColourSet universe = ColourSet::range(k);
  std::vector<ColourSet> lists;
  lists.reserve(g.vertex_count());
  const std::uint64_t subsets = (std::uint64_t{1} << k) - 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    lists.push_back(ColourSet::from_mask(1 + uniform_below(rng, subsets)));
  }
  return Instance(g, std::move(lists), universe);
}

std::vector<CorpusEntry> parse_manifest(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    CorpusEntry e;
    std::string family;
    if (!(fields >> e.id) || e.id.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": " + why);
    };
    if (!(fields >> family)) fail("missing family");
    try {
      e.spec.family = family_from_string(family);
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    std::string kv;
    while (fields >> kv) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail("expected key=value, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      const std::string value = kv.substr(eq + 1);
      try {
        if (key == "n") {
          e.spec.n = std::stoull(value);
        } else if (key == "p") {
          e.spec.p = std::stod(value);
        } else if (key == "clique") {
          e.spec.clique = std::stoull(value);
        } else if (key == "seed") {
          e.spec.seed = std::stoull(value);
        } else if (key == "parts") {
          std::istringstream parts(value);
          std::string part;
          while (std::getline(parts, part, ',')) e.spec.parts.push_back(std::stoull(part));
        } else {
          fail("unknown key '" + key + "'");
        }
      } catch (const std::logic_error& ex) {
        if (dynamic_cast<const std::invalid_argument*>(&ex) && std::string(ex.what()).rfind("manifest", 0) == 0) throw;
        fail("bad value for '" + key + "'");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_manifest(const std::vector<CorpusEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.id << ' ' << to_string(e.spec.family);
    if (e.spec.family == Family::multipartite) {
      os << " parts=";
      for (std::size_t i = 0; i < e.spec.parts.size(); ++i) os << (i ? "," : "") << e.spec.parts[i];
    } else {
      os << " n=" << e.spec.n << " p=" << e.spec.p;
      if (e.spec.family == Family::split) os << " clique=" << e.spec.clique;
    }
    os << " seed=" << e.spec.seed << '\n';
  }
  return os.str();
}

std::vector<CorpusEntry> read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

}  // namespace p5col::testkit
