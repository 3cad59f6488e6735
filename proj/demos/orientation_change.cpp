// Walks through one instance of the change-of-orientation correction: the
// pushforward of a class along P^1 x P^2 -> P^2 computed with the ku
// orientation directly, and again through the additive orientation after
// multiplying by the Todd class of the relative tangent bundle.

#include <iostream>

#include "orientrr/pushforward.hpp"

using namespace orientrr;

int main() {
  RingShape source = RingShape::product({1, 2});
  CohElement a = CohElement::constant(source, Rat(1)) +
                 CohElement::monomial(source, {1, 1}, Rat(3)) +
                 CohElement::monomial(source, {0, 2}, Rat(-1, 2));
  std::cout << "a = " << coh_to_string(a) << "   on " << source.to_string()
            << "\n";

  PushforwardProblem f =
      PushforwardProblem::projection(Orientation::ku(), source, 0);
  std::cout << "f : " << f.to_string() << "\n\n";

  CohElement direct = pushforward(f, a);
  std::cout << "f_*^{ku}(a)            = " << coh_to_string(direct) << "\n";

  SplitBundle t_f = f.relative_tangent();
  std::cout << "T_f                    = " << bundle_to_string(t_f) << "\n";

  CohElement td =
      todd_class(Orientation::ku(), Orientation::additive(), t_f);
  std::cout << "td_{ku,additive}(T_f)  = " << coh_to_string(td) << "\n";

  PushforwardProblem f_add = f.with_orientation(Orientation::additive());
  CohElement corrected = pushforward(f_add, a * td);
  std::cout << "f_*^{add}(a td(T_f))   = " << coh_to_string(corrected)
            << "\n\n";

  if (!(direct == corrected)) {
    std::cerr << "the two pushforwards disagree\n";
    return 1;
  }
  std::cout << "the two computations agree exactly\n";
  return 0;
}
