// e^x |>_h e^y against e^(x |>> y) for the 2-dim Lie algebra [e1,e2] = e2.
#include <rackbi/corpus.hpp>
#include <rackbi/star_product.hpp>

#include <iostream>

int main()
{
  using namespace rackbi;
  LeibnizAlgebra h = corpus::lie_2d();
  std::size_t N = 5;
  StarExp s = star_exp(h, QVec::basis(0), QVec::basis(1), N);
  std::cout << "x |>> y = (" << s.rack[0].str() << ", " << s.rack[1].str() << ")\n";
  std::cout << "lhs = " << s.lhs.str() << "\n";
  std::cout << (s.check.passed ? "equal" : "differ") << " mod h^" << N << "\n";
}
