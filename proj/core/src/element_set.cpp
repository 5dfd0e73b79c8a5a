#include <algorithm>
#include <string>

#include "cosetcover/element_set.hpp"
#include "cosetcover/index_set.hpp"

namespace cosetcover {

bool size_lex_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i + 1);
  });
  return out + "}";
}

}  // namespace cosetcover
