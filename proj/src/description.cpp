#include "circulant/description.hpp"

#include <numeric>

#include "circulant/errors.hpp"

namespace circulant {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

GroupDescription::Ptr share(GroupDescription d) {
  return std::make_shared<const GroupDescription>(std::move(d));
}

bool is_compound(const GroupDescription& d) {
  return std::holds_alternative<GroupDescription::Wreath>(d.node()) ||
         std::holds_alternative<GroupDescription::DirectProduct>(d.node());
}

}  // namespace

GroupDescription GroupDescription::symmetric(int degree) {
  if (degree < 1) throw InvalidArgument("symmetric group needs degree >= 1");
  return GroupDescription(Symmetric{degree});
}

GroupDescription GroupDescription::holomorph(UnitSubgroup multipliers) {
  return GroupDescription(Holomorph{std::move(multipliers)});
}

GroupDescription GroupDescription::wreath(GroupDescription outer, GroupDescription inner,
                                          WreathLayout layout) {
  return GroupDescription(Wreath{share(std::move(outer)), share(std::move(inner)), layout});
}

GroupDescription GroupDescription::direct_product(GroupDescription left,
                                                  GroupDescription right) {
  if (std::gcd(left.degree(), right.degree()) != 1)
    throw InvalidArgument("CRT direct product needs coprime degrees");
  return GroupDescription(DirectProduct{share(std::move(left)), share(std::move(right))});
}

GroupDescription GroupDescription::generated_by(int degree,
                                                std::vector<Permutation> generators) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidArgument("generator degree does not match declared degree");
  return GroupDescription(GeneratedBy{degree, std::move(generators)});
}

GroupDescription GroupDescription::generated_by(const PermGroup& group) {
  return generated_by(group.degree(), group.generators());
}

int GroupDescription::degree() const {
  return std::visit(
      Overloaded{
          [](const Symmetric& s) { return s.degree; },
          [](const Holomorph& h) { return static_cast<int>(h.multipliers.modulus()); },
          [](const Wreath& w) { return w.outer->degree() * w.inner->degree(); },
          [](const DirectProduct& d) { return d.left->degree() * d.right->degree(); },
          [](const GeneratedBy& g) { return g.degree; },
      },
      node_);
}

BigInt GroupDescription::symbolic_order() const {
  return std::visit(
      Overloaded{
          [](const Symmetric& s) { return factorial(s.degree); },
          [](const Holomorph& h) {
            const Int n = h.multipliers.modulus();
            return BigInt(n) * std::max<std::size_t>(h.multipliers.size(), 1);
          },
          [](const Wreath& w) {
            BigInt inner = w.inner->symbolic_order();
            BigInt out = w.outer->symbolic_order();
            for (int i = 0; i < w.outer->degree(); ++i) out *= inner;
            return out;
          },
          [](const DirectProduct& d) {
            return BigInt(d.left->symbolic_order() * d.right->symbolic_order());
          },
          [](const GeneratedBy& g) { return PermGroup(g.degree, g.generators).order(); },
      },
      node_);
}

std::vector<Int> unit_generators(const UnitSubgroup& a) {
  const Modulus modulus(a.modulus());
  std::vector<Int> chosen;
  UnitSubgroup span(a.modulus());
  for (Int x : a.elements()) {
    if (span.contains(x)) continue;
    chosen.push_back(x);
    span = subgroup_generated(modulus, chosen);
    if (span.size() == a.size()) break;
  }
  return chosen;
}

PermGroup realize(const GroupDescription& d) {
  return std::visit(
      Overloaded{
          [](const GroupDescription::Symmetric& s) { return symmetric_group(s.degree); },
          [](const GroupDescription::Holomorph& h) {
            const Int n = h.multipliers.modulus();
            if (n < 2) return PermGroup(static_cast<int>(n));
            std::vector<Permutation> gens{rotation(static_cast<int>(n))};
            for (Int a : unit_generators(h.multipliers)) gens.push_back(affine(n, a, 0));
            return PermGroup(static_cast<int>(n), std::move(gens));
          },
          [](const GroupDescription::Wreath& w) {
            PermGroup product = wreath_group(realize(*w.outer), realize(*w.inner));
            if (w.layout == WreathLayout::Product) return product;
            const int u = w.outer->degree();
            const int v = w.inner->degree();
            std::vector<int> to_coset(static_cast<std::size_t>(u * v));
            for (int a = 0; a < u; ++a)
              for (int b = 0; b < v; ++b)
                to_coset[static_cast<std::size_t>(a * v + b)] = a + u * b;
            return relabel(product, to_coset);
          },
          [](const GroupDescription::DirectProduct& p) {
            return direct_product_crt(realize(*p.left), realize(*p.right));
          },
          [](const GroupDescription::GeneratedBy& g) {
            return PermGroup(g.degree, g.generators);
          },
      },
      d.node());
}

std::string to_string(const GroupDescription& d) {
  auto wrapped = [](const GroupDescription& x) {
    return is_compound(x) ? "(" + to_string(x) + ")" : to_string(x);
  };
  return std::visit(
      Overloaded{
          [](const GroupDescription::Symmetric& s) { return "S_" + std::to_string(s.degree); },
          [](const GroupDescription::Holomorph& h) {
            std::string set;
            for (std::size_t i = 0; i < h.multipliers.elements().size(); ++i) {
              if (i) set += ',';
              set += std::to_string(h.multipliers.elements()[i]);
            }
            return "{T_{a,b} : a ∈ {" + set + "}, b ∈ Z_" +
                   std::to_string(h.multipliers.modulus()) + "}";
          },
          [&](const GroupDescription::Wreath& w) {
            return wrapped(*w.outer) + " ≀ " + wrapped(*w.inner);
          },
          [&](const GroupDescription::DirectProduct& p) {
            return wrapped(*p.left) + " × " + wrapped(*p.right);
          },
          [](const GroupDescription::GeneratedBy& g) {
            return "⟨" + std::to_string(g.generators.size()) + " generators on " +
                   std::to_string(g.degree) + " points⟩";
          },
      },
      d.node());
}

}  // namespace circulant
