#include "cda/operators.hpp"

#include <sstream>
#include <utility>

#include "cda/errors.hpp"

namespace cda {

struct LinearOperator::Node {
  enum class Kind { Ad, Left, Right, Leibniz, Sum, Compose, Power };

  Kind kind;
  PresentationPtr pres;
  std::optional<Element> x;            // Ad / Left / Right
  int leibniz_degree = 0;              // Leibniz
  std::map<int, Element> values;       // Leibniz: generator id -> image
  std::vector<LinearOperator> children;  // Sum / Compose / Power (one child)
  int exponent = 0;                    // Power
};

namespace {

const PresentationPtr& common(const PresentationPtr& a,
                              const PresentationPtr& b) {
  if (a == b) return a;
  if (a && b && *a == *b) return a;
  throw ValidationError("operators belong to different presentations");
}

}  // namespace

LinearOperator::LinearOperator(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

LinearOperator LinearOperator::inner_derivation(Element x) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Ad;
  n->pres = x.presentation();
  n->x = std::move(x);
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::left_mult(Element x) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Left;
  n->pres = x.presentation();
  n->x = std::move(x);
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::right_mult(Element x) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Right;
  n->pres = x.presentation();
  n->x = std::move(x);
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::leibniz_derivation(
    PresentationPtr p, int degree,
    std::map<std::string, Element> generator_values) {
  if (!p) throw ValidationError("leibniz derivation requires a presentation");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Leibniz;
  n->pres = p;
  n->leibniz_degree = degree;
  for (auto& [name, value] : generator_values) {
    const int id = p->generator_id(name);
    common(p, value.presentation());
    n->values.emplace(id, std::move(value));
  }
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::sum(std::vector<LinearOperator> ops) {
  if (ops.empty()) throw ValidationError("sum of no operators");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Sum;
  n->pres = ops.front().presentation();
  for (const LinearOperator& op : ops) common(n->pres, op.presentation());
  n->children = std::move(ops);
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::compose(std::vector<LinearOperator> ops) {
  if (ops.empty()) throw ValidationError("composition of no operators");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Compose;
  n->pres = ops.front().presentation();
  for (const LinearOperator& op : ops) common(n->pres, op.presentation());
  n->children = std::move(ops);
  return LinearOperator(std::move(n));
}

LinearOperator LinearOperator::power(LinearOperator op, int k) {
  if (k < 0) throw ValidationError("operator power must be >= 0");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Power;
  n->pres = op.presentation();
  n->children.push_back(std::move(op));
  n->exponent = k;
  return LinearOperator(std::move(n));
}

const PresentationPtr& LinearOperator::presentation() const {
  return node_->pres;
}

Element LinearOperator::apply(const Element& a) const {
  const Node& n = *node_;
  common(n.pres, a.presentation());
  switch (n.kind) {
    case Node::Kind::Ad:
      return graded_commutator(*n.x, a);
    case Node::Kind::Left:
      return *n.x * a;
    case Node::Kind::Right:
      return a * *n.x;
    case Node::Kind::Leibniz: {
      const Presentation& p = *n.pres;
      const bool odd = n.leibniz_degree % 2 != 0;
      TermMap raw;
      for (const auto& [w, c] : a.terms()) {
        int prefix_deg = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          auto it = n.values.find(w[i]);
          if (it == n.values.end()) {
            throw ValidationError(
                "leibniz derivation has no value for generator '" +
                p.generator(w[i]).name + "'");
          }
          const bool negate = odd && prefix_deg % 2 != 0;
          for (const auto& [vw, vc] : it->second.terms()) {
            Word nw;
            nw.reserve(w.size() - 1 + vw.size());
            nw.insert(nw.end(), w.begin(),
                      w.begin() + static_cast<long>(i));
            nw.insert(nw.end(), vw.begin(), vw.end());
            nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1,
                      w.end());
            Rational q = c * vc;
            if (negate) q = -q;
            add_term(raw, nw, q);
          }
          prefix_deg += p.generator(w[i]).degree;
        }
      }
      return Element::from_terms(n.pres, std::move(raw));
    }
    case Node::Kind::Sum: {
      Element acc = Element::zero(n.pres);
      for (const LinearOperator& op : n.children) acc = acc + op.apply(a);
      return acc;
    }
    case Node::Kind::Compose: {
      Element cur = a;
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
        cur = it->apply(cur);
      }
      return cur;
    }
    case Node::Kind::Power: {
      Element cur = a;
      for (int i = 0; i < n.exponent; ++i) cur = n.children.front().apply(cur);
      return cur;
    }
  }
  throw Error("unreachable operator kind");
}

std::optional<int> LinearOperator::degree() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Ad:
    case Node::Kind::Left:
    case Node::Kind::Right:
      return n.x->homogeneous_degree();
    case Node::Kind::Leibniz:
      return n.leibniz_degree;
    case Node::Kind::Sum: {
      std::optional<int> deg;
      for (const LinearOperator& op : n.children) {
        const std::optional<int> d = op.degree();
        if (!d) return std::nullopt;
        if (!deg) {
          deg = d;
        } else if (*deg != *d) {
          return std::nullopt;
        }
      }
      return deg;
    }
    case Node::Kind::Compose: {
      int total = 0;
      for (const LinearOperator& op : n.children) {
        const std::optional<int> d = op.degree();
        if (!d) return std::nullopt;
        total += *d;
      }
      return total;
    }
    case Node::Kind::Power: {
      const std::optional<int> d = n.children.front().degree();
      if (!d) return std::nullopt;
      return *d * n.exponent;
    }
  }
  return std::nullopt;
}

std::string LinearOperator::describe() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::Ad:
      return "ad(" + to_expression_string(*n.x) + ")";
    case Node::Kind::Left:
      return "L(" + to_expression_string(*n.x) + ")";
    case Node::Kind::Right:
      return "R(" + to_expression_string(*n.x) + ")";
    case Node::Kind::Leibniz: {
      std::ostringstream os;
      os << "leibniz(degree " << n.leibniz_degree << ")";
      return os.str();
    }
    case Node::Kind::Sum: {
      std::string out = "sum(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += ", ";
        out += n.children[i].describe();
      }
      return out + ")";
    }
    case Node::Kind::Compose: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += " . ";
        out += n.children[i].describe();
      }
      return out;
    }
    case Node::Kind::Power:
      return "(" + n.children.front().describe() + ")^" +
             std::to_string(n.exponent);
  }
  return "?";
}

}  // namespace cda
