// Print the rack product of UAR(h)_(2) for [e1,e1] = e2, [e1,e2] = e3 and certify it.
#include <rackbi/corpus.hpp>
#include <rackbi/rack_bialg.hpp>

#include <iostream>

int main()
{
  using namespace rackbi;
  LeibnizAlgebra h = corpus::non_lie_3d();
  RackBialgebra rb = uar_infinity(h, 2);
  std::cout << "dim S(h)_(2) = " << rb.dim() << "\n";
  for (std::size_t a = 0; a < rb.dim(); ++a)
    for (std::size_t b = 0; b < rb.dim(); ++b)
      if (!rb.op(a, b).empty() && a != 0 && rb.op(a, b) != rb.carrier.unit * rb.carrier.eps[a])
        std::cout << rb.carrier.label(a) << " |> " << rb.carrier.label(b) << " = " << rb.show(rb.op(a, b)) << "\n";
  std::cout << "Yang-Baxter: " << (yang_baxter_check(rb).passed ? "ok" : "fails") << "\n";
}
