#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "sclat/scaled.hpp"

namespace sclat {

namespace {

struct Graph {
  int n = 0;
  std::vector<PointSet> below;
  std::vector<PointSet> above;
  std::vector<std::uint64_t> extra;
  std::vector<int> label;
};

// Replaces values by their rank among the distinct values.
std::vector<int> ranks(const std::vector<std::uint64_t>& values) {
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
  return out;
}

int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Equitable refinement: a point's color is refined by the multisets of colors
// strictly below and strictly above it, until stable.
std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
  int classes = count_colors(colors);
  while (true) {
    std::vector<Signature> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<int> lo;
      std::vector<int> hi;
      for_each_point(g.below[v], [&](int u) { lo.push_back(colors[u]); });
      for_each_point(g.above[v], [&](int u) { hi.push_back(colors[u]); });
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      sig[v] = {colors[v], std::move(lo), std::move(hi)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(g.n);
    for (int v = 0; v < g.n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int next_classes = static_cast<int>(sorted.size());
    colors = std::move(next);
    if (next_classes == classes) return colors;
    classes = next_classes;
  }
}

std::string certificate(const Graph& g, const std::vector<int>& colors) {
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[colors[v]] = v;
  std::string out;
  out.push_back(static_cast<char>(g.n));
  for (int v : order) {
    out.push_back(static_cast<char>(g.label[v]));
    for (int b = 7; b >= 0; --b) out.push_back(static_cast<char>((g.extra[v] >> (8 * b)) & 0xFF));
  }
  unsigned char acc = 0;
  int bits = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (has_point(g.below[order[j]], order[i]) ? 1 : 0));
      if (++bits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(acc << (8 - bits)));
  return out;
}

void search(const Graph& g, const std::vector<int>& colors, std::optional<std::string>& best) {
  const int classes = count_colors(colors);
  if (classes == g.n) {
    std::string cert = certificate(g, colors);
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  // First color class with more than one member.
  std::vector<int> size(classes, 0);
  for (int c : colors) ++size[c];
  const int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) -
                                      size.begin());
  // Twins (same neighbourhoods and color) give isomorphic branches.
  std::vector<std::pair<PointSet, PointSet>> tried;
  for (int v = 0; v < g.n; ++v) {
    if (colors[v] != target) continue;
    std::pair<PointSet, PointSet> nb{g.below[v], g.above[v]};
    if (std::find(tried.begin(), tried.end(), nb) != tried.end()) continue;
    tried.push_back(nb);
    std::vector<std::uint64_t> split(g.n);
    for (int u = 0; u < g.n; ++u)
      split[u] = 2 * static_cast<std::uint64_t>(colors[u]) + (colors[u] == target && u != v ? 1 : 0);
    search(g, refine(g, ranks(split)), best);
  }
}

}  // namespace

std::string canonical_form(const ScaledBase& base, const std::vector<std::uint64_t>& colors) {
  const Poset& p = base.poset();
  Graph g;
  g.n = p.size();
  if (!colors.empty() && static_cast<int>(colors.size()) != g.n)
    fail(ErrorKind::argument, "one color per point is required");
  for (int v = 0; v < g.n; ++v) {
    g.below.push_back(p.strictly_below(v));
    g.above.push_back(p.strictly_above(v));
    g.label.push_back(base.label(v));
    g.extra.push_back(colors.empty() ? 0 : colors[v]);
  }
  // Initial classes: ordered by (label, extra color).
  std::map<std::pair<int, std::uint64_t>, int> initial;
  for (int v = 0; v < g.n; ++v) initial[{g.label[v], g.extra[v]}] = 0;
  int next = 0;
  for (auto& [key, value] : initial) value = next++;
  std::vector<int> start(g.n);
  for (int v = 0; v < g.n; ++v) start[v] = initial[{g.label[v], g.extra[v]}];

  std::optional<std::string> best;
  search(g, refine(g, start), best);
  return best.value_or(std::string(1, '\0'));
}

bool is_isomorphic(const ScaledBase& a, const ScaledBase& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::string to_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

}  // namespace sclat
