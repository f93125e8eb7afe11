#include "gaussalg/reference.hpp"

#include <array>

namespace gaussalg {

namespace {

Witness make(Index d, std::vector<Int> target, std::vector<std::array<int, 3>> triples) {
  Witness w;
  w.dim = d;
  w.target = Monomial(d);
  for (Index i = 0; i < d; ++i) w.target(i) = target[static_cast<std::size_t>(i)];
  for (const auto& t : triples) {
    Monomial g = Monomial::Zero(d);
    for (int v : t) g(v - 1) += 1;
    w.generators.push_back(std::move(g));
  }
  w.det = determinant(log_matrix(w.generators));
  return w;
}

}  // namespace

const std::vector<Witness>& reference_witnesses() {
  static const std::vector<Witness> all = [] {
    std::vector<Witness> v;
    // dimension 5
    v.push_back(make(5, {2, 2, 2, 2, 2}, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}}));
    v.push_back(make(5, {3, 2, 2, 2, 1}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {3, 4, 5}}));
    v.push_back(make(5, {3, 3, 2, 1, 1}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {2, 3, 5}}));
    v.push_back(make(5, {3, 3, 2, 2, 0}, {{1, 2, 3}, {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 5}}));
    // dimension 6
    v.push_back(make(6, {2, 2, 2, 2, 2, 2},
                     {{1, 2, 3}, {1, 4, 5}, {1, 3, 6}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}}));
    v.push_back(make(6, {3, 2, 2, 2, 2, 1},
                     {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {1, 5, 6}, {2, 3, 5}, {2, 4, 5}}));
    v.push_back(make(6, {3, 3, 2, 2, 1, 1},
                     {{1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {2, 3, 5}, {3, 4, 6}}));
    v.push_back(make(6, {3, 3, 3, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {2, 3, 6}, {3, 4, 5}}));
    v.push_back(make(6, {4, 2, 2, 2, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 4, 6}, {3, 5, 6}}));
    v.push_back(make(6, {4, 3, 2, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {3, 5, 6}}));
    v.push_back(make(6, {4, 4, 1, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {2, 5, 6}}));
    // dimension 7
    v.push_back(make(7, {2, 2, 2, 2, 2, 2, 2},
                     {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {1, 6, 7}, {1, 2, 7}}));
    v.push_back(make(7, {3, 2, 2, 2, 2, 2, 1},
                     {{1, 2, 3}, {1, 4, 5}, {1, 5, 6}, {1, 5, 7}, {2, 3, 4}, {2, 4, 6}, {3, 6, 7}}));
    v.push_back(make(7, {3, 3, 2, 2, 2, 1, 1},
                     {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 3, 4}, {2, 5, 7}, {2, 6, 7}}));
    v.push_back(make(7, {3, 3, 3, 2, 1, 1, 1},
                     {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {1, 5, 6}, {2, 3, 5}, {2, 3, 7}, {2, 4, 7}}));
    v.push_back(make(7, {4, 2, 2, 2, 2, 1, 1},
                     {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7}, {2, 3, 5}, {2, 4, 7}}));
    v.push_back(make(7, {4, 3, 2, 2, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {1, 4, 7}, {2, 4, 7}, {3, 5, 6}}));
    v.push_back(make(7, {4, 3, 3, 1, 1, 1, 1},
                     {{1, 2, 3}, {1, 3, 4}, {1, 4, 6}, {1, 5, 6}, {1, 2, 7}, {2, 3, 5}, {2, 3, 7}}));
    v.push_back(make(7, {4, 4, 2, 1, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {2, 3, 5}, {1, 2, 6}, {1, 3, 4}, {1, 5, 7}, {2, 6, 7}}));
    v.push_back(make(7, {5, 2, 2, 2, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7}, {2, 3, 7}}));
    v.push_back(make(7, {5, 3, 2, 1, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 7}, {1, 5, 6}, {2, 6, 7}}));
    v.push_back(make(7, {5, 4, 1, 1, 1, 1, 1},
                     {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 5, 7}, {2, 6, 7}}));
    return v;
  }();
  return all;
}

}  // namespace gaussalg
