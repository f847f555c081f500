#include "ggs/model.hpp"

#include <set>
#include <stdexcept>

namespace ggs {

std::string GeneratorRef::address() const {
  return sing + ":" + std::to_string(k) + ":" + std::to_string(slot);
}

std::string GeneratorRef::label() const {
  return "h^" + std::to_string(slot) + "_" + std::to_string(k) + "(" + sing + ")";
}

GeneratorRef parse_generator_ref(const std::string& text) {
  size_t p1 = text.rfind(':');
  size_t p0 = p1 == std::string::npos ? std::string::npos : text.rfind(':', p1 - 1);
  if (p0 == std::string::npos || p0 == 0)
    throw std::invalid_argument("generator address '" + text + "' is not <sid>:<k>:<i>");
  GeneratorRef g;
  g.sing = text.substr(0, p0);
  try {
    g.k = std::stoi(text.substr(p0 + 1, p1 - p0 - 1));
    g.slot = std::stoi(text.substr(p1 + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("generator address '" + text + "' is not <sid>:<k>:<i>");
  }
  if (g.k < 0 || g.k > 2)
    throw std::invalid_argument("generator address '" + text + "': index must be 0, 1 or 2");
  return g;
}

const Singularity* GGSPair::find(const std::string& id) const {
  for (const auto& s : singularities)
    if (s.id == id) return &s;
  return nullptr;
}

int GGSPair::declaration_index(const std::string& id) const {
  for (size_t i = 0; i < singularities.size(); ++i)
    if (singularities[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<GeneratorRef> generators(const GGSPair& pair) {
  std::vector<GeneratorRef> out;
  for (int k = 0; k <= 2; ++k)
    for (const auto& s : pair.singularities) {
      int eta = nature_numbers(s.nature)[k];
      for (int i = 1; i <= eta; ++i) out.push_back(GeneratorRef{s.id, k, i});
    }
  return out;
}

bool is_saddle_cone(const GGSPair& pair, const GeneratorRef& g) {
  const Singularity* s = pair.find(g.sing);
  return s && s->kind.tag() == KindTag::Cone && g.k == 1;
}

namespace {

int cross_cap_lift_bound(const Kind& k) {
  switch (k.tag()) {
    case KindTag::CrossCap: return 2 * (k.arity() - 1);
    case KindTag::Wedge:
    case KindTag::Concat: return cross_cap_lift_bound(k.left()) + cross_cap_lift_bound(k.right());
    default: return 0;
  }
}

// Expected word length for a pure super-attractor/repeller of the given type,
// per the nature conventions in section 3. Unspecified shapes yield nothing.
std::optional<int> super_nature_length(const Kind& k) {
  switch (k.tag()) {
    case KindTag::Regular: return 1;
    case KindTag::Cone: return 1;
    case KindTag::CrossCap: return 1;
    case KindTag::Double: return k.arity();
    case KindTag::Triple: return k.arity();
    case KindTag::Wedge: {
      KindTag lt = k.left().tag();
      if (lt == KindTag::Cone || lt == KindTag::CrossCap) return super_nature_length(k.right());
      auto p = super_nature_length(k.left());
      auto q = super_nature_length(k.right());
      if (!p || !q) return std::nullopt;
      return *p + *q;
    }
    case KindTag::Concat: {
      if (k.left().tag() == KindTag::CrossCap) return super_nature_length(k.right());
      if (k.left().tag() == KindTag::Double && k.right().tag() == KindTag::Triple)
        return k.left().arity() + k.right().arity() - 1;  // a^(n+2k)
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool pure_letter(const Nature& n, Letter l) {
  for (Letter w : n.word)
    if (w != l) return false;
  return !n.word.empty();
}

}  // namespace

int lift_copies(const GGSPair& pair, const GeneratorRef& g) {
  if (is_saddle_cone(pair, g)) return 2;
  const Singularity* s = pair.find(g.sing);
  if (s && g.k != 1 && s->kind.contains(KindTag::CrossCap)) return s->lift_count.value_or(1);
  return 1;
}

ValidationReport validate_condition_h(const GGSPair& pair) {
  ValidationReport rep;
  auto violate = [&rep](const std::string& code, const std::string& msg) {
    rep.violations.push_back(Violation{code, msg});
  };

  std::set<std::string> sing_ids;
  for (const auto& s : pair.singularities) {
    if (!sing_ids.insert(s.id).second)
      violate("duplicate-singularity", "singularity id '" + s.id + "' declared twice");
    if (s.lift_count) {
      int bound = cross_cap_lift_bound(s.kind);
      if (bound == 0 && *s.lift_count != 1)
        violate("lift-count", "singularity '" + s.id + "' is not a cross-cap; lifts must be 1");
      else if (bound > 0 && (*s.lift_count < 1 || *s.lift_count > bound))
        violate("lift-count", "singularity '" + s.id + "' lift count " +
                                  std::to_string(*s.lift_count) + " outside 1.." + std::to_string(bound));
    }
    if (pure_letter(s.nature, Letter::Attract) || pure_letter(s.nature, Letter::Repel)) {
      auto want = super_nature_length(s.kind);
      if (want && static_cast<int>(s.nature.word.size()) != *want)
        rep.warnings.push_back(Violation{
            "nature-convention",
            "singularity '" + s.id + "' of type " + s.kind.to_string() + " has super nature '" +
                nature_text(s.nature) + "' of length " + std::to_string(s.nature.word.size()) +
                ", convention expects " + std::to_string(*want)});
    }
  }

  auto check_endpoint = [&](const std::string& owner, const GeneratorRef& g) -> const Singularity* {
    const Singularity* s = pair.find(g.sing);
    if (!s) {
      violate("dangling-reference", owner + " references unknown singularity '" + g.sing + "'");
      return nullptr;
    }
    int eta = nature_numbers(s->nature)[g.k];
    if (g.slot < 1 || g.slot > eta)
      violate("slot-range", owner + " references " + g.label() + " but eta_" + std::to_string(g.k) +
                                "(" + g.sing + ") = " + std::to_string(eta));
    return s;
  };

  std::set<std::string> line_ids;
  for (const auto& line : pair.lines) {
    std::string owner = "line '" + line.id + "'";
    if (!line_ids.insert(line.id).second) violate("duplicate-line", owner + " declared twice");
    const Singularity* src = check_endpoint(owner, line.src);
    const Singularity* dst = check_endpoint(owner, line.dst);
    if (line.src.k != line.dst.k + 1)
      violate("index-step", owner + " must connect index k to k-1, got " +
                                std::to_string(line.src.k) + " -> " + std::to_string(line.dst.k));
    for (int v : line.lifts)
      if (v != 1 && v != -1)
        violate("lift-sign", owner + " has lift sign " + std::to_string(v) + ", expected +1 or -1");

    size_t want = 1;
    const char* why = "a regular-part line";
    if (line.part == LinePart::Fold) {
      want = 2;
      why = "a fold line (Def 5.2(ii) ordered pair)";
    } else if (is_saddle_cone(pair, line.src) || is_saddle_cone(pair, line.dst)) {
      want = 2;
      why = "a saddle-cone connection (the u~, u~' pair)";
    }
    if (line.lifts.size() != want)
      violate("lift-arity", owner + " carries " + std::to_string(line.lifts.size()) +
                                " lift sign(s) but " + why + " needs " + std::to_string(want));

    if (line.part == LinePart::Fold && src && dst) {
      bool w = src->kind.contains(KindTag::CrossCap) || dst->kind.contains(KindTag::CrossCap);
      bool dt = src->kind.contains(KindTag::Double) || src->kind.contains(KindTag::Triple) ||
                dst->kind.contains(KindTag::Double) || dst->kind.contains(KindTag::Triple);
      bool w_side = src->kind.contains(KindTag::CrossCap) != dst->kind.contains(KindTag::CrossCap);
      if (w && dt && w_side)
        violate("condition-H", owner + " is a fold connecting a cross-cap to a double/triple crossing (Def 3.6(i))");
      if (src->kind.tag() == KindTag::Cone || dst->kind.tag() == KindTag::Cone)
        violate("fold-endpoint", owner + " is a fold line incident to a cone (cones carry no folds)");
    }
  }

  for (const auto& arc : pair.folds) {
    std::string owner = "fold arc (" + arc.a + ", " + arc.b + ")";
    const Singularity* a = pair.find(arc.a);
    const Singularity* b = pair.find(arc.b);
    if (!a) violate("dangling-reference", owner + " references unknown singularity '" + arc.a + "'");
    if (!b) violate("dangling-reference", owner + " references unknown singularity '" + arc.b + "'");
    if (!a || !b) continue;
    if (a->kind.is_regular() || b->kind.is_regular())
      violate("fold-endpoint", owner + " must join singular kinds");
    bool a_w = a->kind.contains(KindTag::CrossCap), b_w = b->kind.contains(KindTag::CrossCap);
    bool a_dt = a->kind.contains(KindTag::Double) || a->kind.contains(KindTag::Triple);
    bool b_dt = b->kind.contains(KindTag::Double) || b->kind.contains(KindTag::Triple);
    if ((a_w && b_dt && !b_w) || (b_w && a_dt && !a_w))
      violate("condition-H", owner + " joins a cross-cap to a double/triple crossing (Def 3.6(i))");
  }

  if (!pair.order.empty()) {
    for (const auto& g : pair.order) check_endpoint("order directive", g);
  }
  return rep;
}

}  // namespace ggs
