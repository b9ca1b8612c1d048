#include "cda/io.hpp"

#include <fstream>
#include <sstream>

#include "cda/errors.hpp"
#include "cda/fixtures.hpp"

namespace cda {

namespace {

// Wraps nlohmann access so schema violations surface as ParseError with a
// field path instead of a bare type error.
const Json& member(const Json& j, const std::string& key,
                   const std::string& where) {
  if (!j.is_object()) {
    throw ParseError(where + ": expected an object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(where + ": missing required member '" + key + "'");
  }
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a rational string");
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

TermMap terms_from_json(const Json& j, const std::map<std::string, int>& table,
                        const std::string& where) {
  TermMap raw;
  std::size_t index = 0;
  for (const Json& term : as_array(j, where)) {
    const std::string at = where + "[" + std::to_string(index++) + "]";
    const Rational coeff = as_rational(member(term, "coeff", at), at + ".coeff");
    const std::string word_text =
        as_string(member(term, "word", at), at + ".word");
    Word w;
    std::istringstream in(word_text);
    std::string name;
    while (in >> name) {
      auto it = table.find(name);
      if (it == table.end()) {
        throw ParseError(at + ".word: unknown generator '" + name + "'");
      }
      w.push_back(it->second);
    }
    add_term(raw, w, coeff);
  }
  return raw;
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw ParseError("invalid JSON in file: " + path.string());
  }
  return j;
}

PresentationPtr presentation_from_json(const Json& j, const RewriteConfig& cfg,
                                       int max_completion_rounds) {
  std::vector<Generator> gens;
  std::size_t index = 0;
  for (const Json& g :
       as_array(member(j, "generators", "presentation"), "generators")) {
    const std::string at = "generators[" + std::to_string(index++) + "]";
    Generator gen;
    gen.name = as_string(member(g, "name", at), at + ".name");
    gen.degree = as_int(member(g, "degree", at), at + ".degree");
    gens.push_back(std::move(gen));
  }
  const std::map<std::string, int> table = make_name_table(gens);

  std::vector<Relation> rels;
  if (j.is_object() && j.contains("relations")) {
    index = 0;
    for (const Json& r : as_array(j.at("relations"), "relations")) {
      const std::string at = "relations[" + std::to_string(index++) + "]";
      Relation rel;
      const std::string lhs = as_string(member(r, "lhs", at), at + ".lhs");
      std::istringstream in(lhs);
      std::string name;
      while (in >> name) {
        auto it = table.find(name);
        if (it == table.end()) {
          throw ParseError(at + ".lhs: unknown generator '" + name + "'");
        }
        rel.lhs.push_back(it->second);
      }
      rel.rhs = terms_from_json(member(r, "rhs", at), table, at + ".rhs");
      rels.push_back(std::move(rel));
    }
  }

  PresentationPtr p = Presentation::create(std::move(gens), std::move(rels), cfg);
  return complete_presentation(p, max_completion_rounds);
}

Json presentation_to_json(const Presentation& p) {
  Json gens = Json::array();
  for (const Generator& g : p.generators()) {
    gens.push_back(Json{{"name", g.name}, {"degree", g.degree}});
  }
  Json rels = Json::array();
  for (const Relation& r : p.relations()) {
    Json rhs = Json::array();
    for (const auto& [w, q] : r.rhs) {
      rhs.push_back(Json{{"coeff", to_string(q)},
                         {"word", w.empty() ? "" : p.word_to_string(w)}});
    }
    rels.push_back(Json{{"lhs", p.word_to_string(r.lhs)}, {"rhs", rhs}});
  }
  return Json{{"generators", gens}, {"relations", rels}};
}

Element element_from_json(const Json& j, const PresentationPtr& p) {
  if (!p) throw ValidationError("null presentation");
  const std::map<std::string, int> table = make_name_table(p->generators());
  return Element::from_terms(p, terms_from_json(j, table, "element"));
}

Json element_to_json(const Element& e) {
  Json out = Json::array();
  const Presentation& p = *e.presentation();
  for (const auto& [w, q] : e.terms()) {
    out.push_back(Json{{"coeff", to_string(q)},
                       {"word", w.empty() ? "" : p.word_to_string(w)}});
  }
  return out;
}

namespace {

PresentationPtr presentation_member(const Json& j, const RewriteConfig& cfg,
                                    const std::filesystem::path& base_dir,
                                    const char* fallback_builtin) {
  if (j.is_object() && j.contains("presentation")) {
    const Json& pj = j.at("presentation");
    if (pj.is_string()) {
      const std::filesystem::path path =
          base_dir / pj.get<std::string>();
      return presentation_from_json(load_json_file(path), cfg);
    }
    return presentation_from_json(pj, cfg);
  }
  if (fallback_builtin) {
    const Json builtin = Json::parse(fallback_builtin);
    return presentation_member(builtin, cfg, {}, nullptr);
  }
  throw ParseError("missing required member 'presentation'");
}

}  // namespace

CurvedDGA cdga_from_json(const Json& j, const RewriteConfig& cfg,
                         const std::filesystem::path& base_dir) {
  PresentationPtr p = presentation_member(j, cfg, base_dir, nullptr);

  const Json& dj = member(j, "differential", "curved structure");
  const std::string kind =
      as_string(member(dj, "kind", "differential"), "differential.kind");
  std::optional<LinearOperator> d;
  if (kind == "ad") {
    Element of = element_from_json(member(dj, "of", "differential"), p);
    d = LinearOperator::inner_derivation(std::move(of));
  } else if (kind == "leibniz") {
    const int degree =
        as_int(member(dj, "degree", "differential"), "differential.degree");
    std::map<std::string, Element> values;
    const Json& vj = member(dj, "values", "differential");
    if (!vj.is_object()) {
      throw ParseError("differential.values: expected an object");
    }
    for (auto it = vj.begin(); it != vj.end(); ++it) {
      values.emplace(it.key(), element_from_json(it.value(), p));
    }
    d = LinearOperator::leibniz_derivation(p, degree, std::move(values));
  } else {
    throw ParseError("differential.kind must be 'ad' or 'leibniz', got '" +
                     kind + "'");
  }

  Element curvature = element_from_json(member(j, "curvature", "curved structure"), p);

  const std::optional<int> deg = d->degree();
  if (!deg) {
    throw ValidationError(
        "differential degree is indeterminate (inner derivation by a zero "
        "or inhomogeneous element); declare a leibniz differential instead");
  }
  if (*deg != 0 && *deg != 1) {
    throw ValidationError("differential degree must be 0 or 1, got " +
                          std::to_string(*deg));
  }

  return CurvedDGA{std::move(p), std::move(*d), std::move(curvature)};
}

const Element& Scenario::curvature(const std::string& name) const {
  for (const auto& [n, c] : curvatures) {
    if (n == name) return c;
  }
  throw ValidationError("scenario has no curvature named '" + name + "'");
}

Scenario scenario_from_json(const Json& j, const RewriteConfig& cfg,
                            const std::filesystem::path& base_dir) {
  Scenario sc;
  sc.presentation =
      presentation_member(j, cfg, base_dir, builtin_counterexample_cdga_json());

  const Json& kj = member(j, "complex", "scenario");
  if (kj.contains("simplices")) {
    if (kj.contains("edges") || kj.contains("vertices")) {
      throw ParseError(
          "complex: give either \"simplices\" or \"vertices\"/\"edges\", "
          "not both");
    }
    std::vector<Simplex> simplices;
    for (const Json& s :
         as_array(kj.at("simplices"), "complex.simplices")) {
      Simplex simplex;
      for (const Json& v : as_array(s, "complex.simplices[]")) {
        simplex.push_back(as_int(v, "complex.simplices[][]"));
      }
      simplices.push_back(std::move(simplex));
    }
    sc.complex = SimplicialComplex::from_simplices(simplices);
  } else {
    std::vector<int> vertices;
    for (const Json& v : as_array(member(kj, "vertices", "complex"),
                                  "complex.vertices")) {
      vertices.push_back(as_int(v, "complex.vertices[]"));
    }
    std::vector<std::pair<int, int>> edges;
    for (const Json& e :
         as_array(member(kj, "edges", "complex"), "complex.edges")) {
      const Json& arr = as_array(e, "complex.edges[]");
      if (arr.size() != 2) {
        throw ParseError("complex.edges[]: expected [a, b]");
      }
      edges.emplace_back(as_int(arr[0], "complex.edges[][0]"),
                         as_int(arr[1], "complex.edges[][1]"));
    }
    const int max_dim =
        as_int(member(kj, "max_dim", "complex"), "complex.max_dim");
    sc.complex = flag_complex(vertices, edges, max_dim);
  }

  const Json& fj = member(j, "filtration", "scenario");
  const Json& bt = member(fj, "base_times", "filtration");
  if (!bt.is_object()) throw ParseError("filtration.base_times: expected an object");
  for (auto it = bt.begin(); it != bt.end(); ++it) {
    int dim = 0;
    try {
      dim = std::stoi(it.key());
    } catch (const std::exception&) {
      throw ParseError("filtration.base_times: key '" + it.key() +
                       "' is not a dimension");
    }
    sc.filtration.base_times.emplace(
        dim, as_rational(it.value(), "filtration.base_times['" + it.key() + "']"));
  }
  if (fj.contains("tagged")) {
    const Json& tj = fj.at("tagged");
    if (!tj.is_object()) throw ParseError("filtration.tagged: expected an object");
    for (auto it = tj.begin(); it != tj.end(); ++it) {
      sc.filtration.tagged.emplace(
          simplex_from_string(it.key()),
          as_string(it.value(), "filtration.tagged['" + it.key() + "']"));
    }
  }
  if (fj.contains("functionals")) {
    const Json& fns = fj.at("functionals");
    if (!fns.is_object()) {
      throw ParseError("filtration.functionals: expected an object");
    }
    const std::map<std::string, int> table =
        make_name_table(sc.presentation->generators());
    for (auto it = fns.begin(); it != fns.end(); ++it) {
      const std::string at = "filtration.functionals['" + it.key() + "']";
      if (!it.value().is_object()) throw ParseError(at + ": expected an object");
      LinearFunctional ell;
      for (auto wc = it.value().begin(); wc != it.value().end(); ++wc) {
        Word w;
        std::istringstream in(wc.key());
        std::string name;
        while (in >> name) {
          auto found = table.find(name);
          if (found == table.end()) {
            throw ParseError(at + ": unknown generator '" + name + "'");
          }
          w.push_back(found->second);
        }
        if (sc.presentation->word_degree(w) != 2) {
          throw ValidationError(at + ": word '" + wc.key() +
                                "' does not have degree 2");
        }
        add_term(ell.coeffs, w, as_rational(wc.value(), at + "['" + wc.key() + "']"));
      }
      sc.filtration.functionals.emplace(it.key(), std::move(ell));
    }
  }
  sc.filtration.validate();

  const Json& cj = member(j, "curvatures", "scenario");
  if (!cj.is_object()) throw ParseError("curvatures: expected an object");
  for (auto it = cj.begin(); it != cj.end(); ++it) {
    sc.curvatures.emplace_back(it.key(),
                               element_from_json(it.value(), sc.presentation));
  }

  return sc;
}

}  // namespace cda
