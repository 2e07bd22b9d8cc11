#include "covtop/standard_complexes.hpp"

#include <string>

namespace covtop {

Complex circle() {
  Complex c;
  const int x = c.add_vertex("x");
  c.add_edge("a", x, x);
  c.set_basepoint(x);
  return c;
}

Complex disc() {
  Complex c = circle();
  c.add_face("D", {{0, false}});
  return c;
}

Complex theta() {
  Complex c;
  const int u = c.add_vertex("u");
  const int v = c.add_vertex("v");
  for (const char* id : {"a", "b", "c"}) c.add_edge(id, u, v);
  c.set_basepoint(u);
  return c;
}

Complex bouquet(int n) {
  Complex c;
  const int x = c.add_vertex("x");
  for (int k = 0; k < n; ++k) {
    const std::string id = n <= 26 ? std::string(1, static_cast<char>('a' + k)) : "a" + std::to_string(k + 1);
    c.add_edge(id, x, x);
  }
  c.set_basepoint(x);
  return c;
}

Complex cyclic(int k) {
  Complex c = circle();
  c.add_face("R", EdgePath(k, SignedEdge{0, false}));
  return c;
}

}  // namespace covtop
