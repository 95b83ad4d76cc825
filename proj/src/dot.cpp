#include "brouwerlab/dot.hpp"

#include <algorithm>
#include <sstream>

namespace brouwerlab {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class Leq, class Label, class Lit>
std::string hasse(std::size_t n, Leq leq, Label label, Lit lit, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  n" << i << " [label=" << quoted(label(i));
    if (lit(i)) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string poset_dot(const Poset& p, Mask highlight, const std::string& name) {
  return hasse(
      p.size(), [&](std::size_t i, std::size_t j) { return p.leq(i, j); },
      [&](std::size_t i) { return p.label(i); }, [&](std::size_t i) { return has(highlight, i); }, name);
}

std::string algebra_dot(const BrouwerAlgebra& b, const std::vector<Elem>& highlight, const std::string& name) {
  return hasse(
      b.size(),
      [&](std::size_t i, std::size_t j) { return b.leq(static_cast<Elem>(i), static_cast<Elem>(j)); },
      [&](std::size_t i) { return b.label(static_cast<Elem>(i)); },
      [&](std::size_t i) {
        return std::find(highlight.begin(), highlight.end(), static_cast<Elem>(i)) != highlight.end();
      },
      name);
}

}  // namespace brouwerlab
