// Small tour of the library: mu of a few named graphs with their witnesses,
// and the lowest mu reachable by a degree sequence.

#include <iostream>

#include "mms/mms.hpp"

namespace {

void show(const char* name, const mms::Graph& g) {
  mms::MuCertificate cert = mms::mu_exact(g);
  std::cout << name << ": n=" << g.order() << " m=" << g.size() << " min degree=" << mms::min_degree(g)
            << " mu=" << cert.value << "  S={";
  for (int v : cert.S) std::cout << ' ' << v;
  std::cout << " } T={";
  for (int v : cert.T) std::cout << ' ' << v;
  std::cout << " }" << (mms::verify_certificate(g, cert) ? "" : "  (certificate rejected!)") << '\n';
}

}  // namespace

int main() {
  show("K5", mms::complete_graph(5));
  show("K6", mms::complete_graph(6));
  show("C(4,7)", mms::circulant(4, 7));
  show("C(4,9)", mms::circulant(4, 9));
  show("C7", mms::cycle_graph(7));

  // A 4-regular graph on 7 vertices can be rewired down to mu = 2, but no
  // realization keeps mu at the minimum degree 4.
  mms::DegreeSequence d = mms::DegreeSequence::regular(4, 7);
  mms::LowerMuResult low = mms::lower_mu(d);
  std::cout << "lower mu of " << d.to_string() << " = " << low.value << " (|S| = " << low.k_star << ")\n";
  show("  witness", low.witness);

  mms::RegularSpec spec(4, 7);
  std::cout << "4-regular on 7 vertices: mu ranges over [" << mms::lower_mu_regular(spec) << ", "
            << mms::upper_mu_regular(spec) << "]\n";
  return 0;
}
