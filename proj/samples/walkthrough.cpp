// Walks one clutter through the whole pipeline and prints each invariant.

#include <iostream>

#include "clutterlab/clutterlab.hpp"

int main() {
  using namespace clutterlab;

  const Clutter c = make_clutter(5, 3, std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 4, 5}});
  const auto search = find_simplicial_order(c);
  if (search.status != Chordality::chordal) {
    std::cout << c.to_string() << " is " << to_string(search.status) << '\n';
    return 1;
  }
  const Multiset multiset = simplicial_multiset(*search.order);
  std::cout << "clutter        " << c.to_string() << '\n';
  std::cout << "order          " << search.order->to_string() << '\n';
  std::cout << "lambda         " << lambda_sequence(multiset, c.n(), c.d()).to_string() << '\n';
  std::cout << "f-polynomial   " << f_polynomial_from_multiset(c.n(), c.d(), multiset) << '\n';
  std::cout << "h-polynomial   " << h_polynomial_from_multiset(c.n(), c.d(), multiset) << '\n';

  const auto betti = betti_from_multiset(c.n(), c.d(), multiset);
  std::cout << "betti          ";
  for (const auto& b : betti.beta) std::cout << b << ' ';
  std::cout << "\nhochster betti ";
  for (const auto& b : hochster_betti(c).totals().beta) std::cout << b << ' ';
  std::cout << '\n';
  return 0;
}
