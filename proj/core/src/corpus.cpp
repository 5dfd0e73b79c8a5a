#include "cosetcover/corpus.hpp"

#include "cosetcover/search.hpp"

namespace cosetcover {

ZSystem classic_cover() { return parse_zsystem("0/2, 0/3, 1/4, 5/6, 7/12"); }

ZSystem regular_noncover() { return parse_zsystem("0/2, 0/4, 2/4"); }

CosetSystem example21(std::size_t k) { return construct_example21(k); }

CosetSystem subgroups_of_order(const GroupPtr& g, std::size_t order) {
  CosetSystem sys{g, {}};
  for (auto& h : all_subgroups(*g))
    if (h.order() == order && h.order() != g->order()) sys.items.emplace_back(*g, 0, std::move(h));
  return sys;
}

CosetSystem klein_cover() { return subgroups_of_order(make_group_ptr("Z2xZ2"), 2); }

CosetSystem q8_cover() { return subgroups_of_order(make_group_ptr("Q8"), 4); }

CosetSystem centralizer_cover(std::string_view group_spec) { return centralizer_cover(make_group_ptr(group_spec)); }

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {"classic_cover", "regular_noncover", "example21",
                                                 "klein_cover",   "q8_cover",         "centralizer_cover"};
  return names;
}

}  // namespace cosetcover
