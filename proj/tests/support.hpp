#pragma once

#include <optional>
#include <string>

#include "classical.hpp"
#include "sqsym/algebra.hpp"
#include "sqsym/composition.hpp"

namespace support {

inline sqsym::Composition C(const std::string& text) { return sqsym::Composition::parse(text); }

inline sqsym::Composition from_classical(const classical::Comp& c) {
  std::vector<sqsym::DottedPart> parts;
  for (int v : c) parts.push_back(sqsym::DottedPart::plain(v));
  return sqsym::Composition(parts);
}

inline classical::Comp to_classical(const sqsym::Composition& a) {
  classical::Comp c;
  for (const auto& p : a.parts()) c.push_back(p.value);
  return c;
}

/// nullopt when a coefficient is not an integer or a part is dotted.
inline std::optional<classical::Lin> to_classical(const sqsym::Expr& e) {
  classical::Lin out;
  for (const auto& [a, k] : e.terms()) {
    if (a.fermionic_degree() != 0 || k.get_den() != 1) return std::nullopt;
    out[to_classical(a)] = k.get_num().get_si();
  }
  return out;
}

inline std::optional<classical::Lin2> to_classical(const sqsym::TensorExpr& t) {
  classical::Lin2 out;
  for (const auto& [key, k] : t.terms()) {
    if (key.first.fermionic_degree() != 0 || key.second.fermionic_degree() != 0 ||
        k.get_den() != 1)
      return std::nullopt;
    out[{to_classical(key.first), to_classical(key.second)}] = k.get_num().get_si();
  }
  return out;
}

}  // namespace support
