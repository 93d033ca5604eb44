#pragma once

// PD strings shared across the suite.  Hand-checked; the .pd files under
// fixtures/ mirror these.

namespace fx {

// right trefoil, all crossings positive
inline const char* trefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
// figure eight, signs -,+,-,+
inline const char* fig8 = "X(4,2,5,1) X(2,7,3,8) X(8,6,1,5) X(6,3,7,4)";
inline const char* hopf_pos = "X(1,4,2,3) X(3,2,4,1)";
inline const char* hopf_neg = "X(3,2,4,1) X(2,3,1,4)";
inline const char* kink = "X(1,2,2,1)";
// a circle running over a four-crossing strand; edges 5..8 never go under
inline const char* over_circle = "X(1,5,2,6) X(2,7,3,6) X(3,7,4,8) X(4,5,1,8)";
inline const char* unknot0 = "circles 1";
// two-component tangles closing off a triangle where edge 2 runs over
// edges 4 and 5; in r3a the circle passes over at its last crossing, in
// r3b under, so the two diagrams exercise mirrored slide geometries
inline const char* r3a = "X(6,1,5,2) X(3,2,4,3) X(4,5,1,6)";
inline const char* r3b = "X(6,1,5,2) X(3,2,4,3) X(5,1,6,4)";

}  // namespace fx
