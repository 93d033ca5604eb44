// Counts region colorings of one diagram over a spread of built-in algebras.
//
//   ./region_counts [diagram.pd]
//
// With no argument it runs the right trefoil and prints the counts that make
// it distinguishable from the unknot.

#include <iostream>
#include <string>

#include "tknot/coloring.hpp"
#include "tknot/io.hpp"

int main(int argc, char** argv) {
  using namespace tknot;
  try {
    Diagram d = argc > 1 ? load_diagram(argv[1])
                         : parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    std::cout << "diagram: " << diagram_fingerprint(d) << ", " << d.crossing_count()
              << " crossings\n";

    for (const std::string& spec : {"core:c3", "core:c5", "knot:s3", "core:s3",
                                    "paper-unoriented-4", "paper-oriented-4"}) {
      auto A = builtin_algebra(spec);
      auto sd = shade(d, A.kind == Kind::oriented);
      std::cout << spec << ": " << count_colorings(sd, A) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
