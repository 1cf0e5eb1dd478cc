// Prints every separator and monoid congruence of a table read from a file.
//
//   separators samples/e3.tbl

#include <fstream>
#include <iostream>
#include <sstream>

#include "sepcong/sepcong.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: " << argv[0] << " TABLE\n";
    return 2;
  }
  std::ifstream     in(argv[1]);
  std::stringstream text;
  text << in.rdbuf();

  try {
    auto s = sepcong::parse_table(text.str());
    std::cout << "order " << s.order() << (s.is_commutative() ? ", commutative\n" : "\n");

    sepcong::for_each_subset(s.order(), [&](sepcong::SubsetMask a) {
      if (!a.is_proper()) {
        return;
      }
      auto sep = sepcong::separator(s, a);
      std::cout << "Sep(" << to_string(a) << ") = " << to_string(sep);
      if (!sep.is_empty()) {
        std::cout << "  P_A = " << to_string(sepcong::p_h(s, a).partition());
      }
      std::cout << '\n';
    });

    for (auto const& p : sepcong::enumerate_congruences(s)) {
      if (auto m = sepcong::classify_monoid_congruence(s, p)) {
        std::cout << "monoid congruence " << to_string(p.partition()) << " identity class "
                  << to_string(m->identity_class) << '\n';
      }
    }
  } catch (sepcong::Error const& e) {
    std::cerr << argv[1] << ": " << e.what() << '\n';
    return 2;
  }
}
