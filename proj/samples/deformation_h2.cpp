// Cochain dimensions, complex checks and H^2 for UR(h) over the small corpus.
#include <rackbi/corpus.hpp>
#include <rackbi/deformation.hpp>

#include <iostream>

int main()
{
  using namespace rackbi;
  for (const auto& [name, h] : corpus::leibniz_corpus()) {
    DeformationComplex D(ur(h));
    Report r = verify_complex(D, 2);
    H2 c = h2(D);
    std::cout << "UR(" << name << "): dim C^1..3 = " << D.cochains(1).size() << "," << D.cochains(2).size() << ","
              << D.cochains(3).size() << "  Z2 " << c.cocycles << "  B2 " << c.coboundaries << "  H2 " << c.cohomology
              << (r.all_passed() ? "" : "  (complex check failed)") << "\n";
  }
}
