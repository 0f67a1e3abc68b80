#include "grouplabel/figures.hpp"

#include <stdexcept>

namespace grouplabel {
namespace {

EdgeLabeling labeling(GroupSpec group, std::vector<GroupElement> labels) { return {std::move(group), std::move(labels)}; }

std::vector<GroupElement> cyclic_labels(std::initializer_list<std::int64_t> values) {
  std::vector<GroupElement> out;
  for (auto v : values) out.push_back(GroupElement{v});
  return out;
}

Certificate figure1() {
  // root 0 with children 1..4; 1-5, 3-6, 4-7
  auto tree = SimpleGraph::tree(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {3, 6}, {4, 7}});
  return certify(Notion::a_star_antimagic, tree,
                 labeling(GroupSpec({2, 2, 2}),
                          {{1, 1, 1}, {1, 0, 1}, {0, 1, 1}, {0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
}

Certificate figure2() {
  return certify(Notion::ea_cordial, SimpleGraph::path(24),
                 labeling(GroupSpec({8, 3}), {{0, 0}, {4, 0}, {1, 0}, {5, 0}, {2, 0}, {7, 0}, {3, 0}, {0, 1},
                                              {4, 1}, {1, 1}, {5, 1}, {2, 1}, {6, 1}, {3, 1}, {7, 1}, {4, 2},
                                              {0, 2}, {5, 2}, {1, 2}, {6, 2}, {2, 2}, {7, 2}, {3, 2}}));
}

Certificate figure3() {
  return certify(Notion::ea_cordial, SimpleGraph::path(24),
                 labeling(GroupSpec({24}), cyclic_labels({0, 12, 1, 13, 2, 14, 3, 15, 4, 16, 5, 17, 6, 19, 7,
                                                          20, 8, 21, 9, 22, 10, 23, 11})));
}

Certificate figure4() {
  return certify(Notion::a_antimagic, SimpleGraph::path(8),
                 labeling(GroupSpec({2, 2, 2}),
                          {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}}));
}

}  // namespace

Certificate figure_certificate(int number) {
  switch (number) {
    case 1: return figure1();
    case 2: return figure2();
    case 3: return figure3();
    case 4: return figure4();
  }
  throw std::out_of_range("figures are numbered 1 to 4");
}

}  // namespace grouplabel
