#include "cda/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cda/errors.hpp"

namespace cda {

std::string simplex_to_string(const Simplex& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

Simplex simplex_from_string(const std::string& text) {
  Simplex s;
  std::istringstream in(text);
  int v = 0;
  while (in >> v) s.push_back(v);
  if (!in.eof()) {
    throw ParseError("malformed simplex: '" + text + "'");
  }
  return s;
}

namespace {

void validate_simplex(const Simplex& s) {
  if (s.empty()) throw ValidationError("empty simplex");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] <= 0) {
      throw ValidationError("simplex vertex labels must be positive: '" +
                            simplex_to_string(s) + "'");
    }
    if (i > 0 && s[i - 1] >= s[i]) {
      throw ValidationError(
          "simplex vertices must be strictly increasing: '" +
          simplex_to_string(s) + "'");
    }
  }
}

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(
    std::vector<Simplex> simplices) {
  for (const Simplex& s : simplices) validate_simplex(s);
  std::sort(simplices.begin(), simplices.end(), simplex_order);
  simplices.erase(std::unique(simplices.begin(), simplices.end()),
                  simplices.end());

  std::set<Simplex> present(simplices.begin(), simplices.end());
  for (const Simplex& s : simplices) {
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex facet;
      facet.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) facet.push_back(s[i]);
      }
      if (!present.count(facet)) {
        throw ValidationError("complex is not face-closed: '" +
                              simplex_to_string(s) + "' lacks face '" +
                              simplex_to_string(facet) + "'");
      }
    }
  }

  SimplicialComplex k;
  k.simplices_ = std::move(simplices);
  return k;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s,
                            simplex_order);
}

int SimplicialComplex::dimension() const {
  int dim = -1;
  for (const Simplex& s : simplices_) dim = std::max(dim, simplex_dim(s));
  return dim;
}

SimplicialComplex flag_complex(const std::vector<int>& vertices,
                               const std::vector<std::pair<int, int>>& edges,
                               int max_dim) {
  if (max_dim < 1) throw ValidationError("flag complex needs max_dim >= 1");
  std::set<int> declared;
  for (int v : vertices) {
    if (v <= 0) {
      throw ValidationError("vertex labels must be positive: " +
                            std::to_string(v));
    }
    if (!declared.insert(v).second) {
      throw ValidationError("duplicate vertex: " + std::to_string(v));
    }
  }

  std::map<int, std::set<int>> adjacent;
  for (const auto& [a, b] : edges) {
    if (a == b) {
      throw ValidationError("self-loop edge at vertex " + std::to_string(a));
    }
    if (!declared.count(a) || !declared.count(b)) {
      throw ValidationError("edge [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] uses undeclared vertices");
    }
    adjacent[a].insert(b);
    adjacent[b].insert(a);
  }

  // Grow cliques one vertex at a time, always appending a larger label, so
  // each clique is produced exactly once in sorted form.
  std::vector<Simplex> simplices;
  std::vector<Simplex> layer;
  for (int v : declared) layer.push_back(Simplex{v});
  simplices.insert(simplices.end(), layer.begin(), layer.end());
  for (int dim = 1; dim <= max_dim && !layer.empty(); ++dim) {
    std::vector<Simplex> next;
    for (const Simplex& clique : layer) {
      const auto& last_adj = adjacent[clique.back()];
      for (int v : last_adj) {
        if (v <= clique.back()) continue;
        bool joins_all = true;
        for (int u : clique) {
          if (!adjacent[u].count(v)) {
            joins_all = false;
            break;
          }
        }
        if (!joins_all) continue;
        Simplex grown = clique;
        grown.push_back(v);
        next.push_back(std::move(grown));
      }
    }
    simplices.insert(simplices.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  return SimplicialComplex::from_simplices(std::move(simplices));
}

}  // namespace cda
