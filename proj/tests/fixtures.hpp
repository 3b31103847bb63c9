#ifndef TAUCAT_TEST_FIXTURES_HPP
#define TAUCAT_TEST_FIXTURES_HPP

#include "taucat/algebra.hpp"

namespace fixtures {

// Linear A2 quiver: 1 -a-> 2.
inline taucat::AlgebraPtr a2() {
    taucat::MonomialPresentation p;
    p.quiver.vertices = {"1", "2"};
    p.quiver.arrows = {{"a", 0, 1}};
    return taucat::BasedAlgebra::path_algebra(p, "A2");
}

// Linear A3 quiver: 1 -a-> 2 -b-> 3, hereditary.
inline taucat::AlgebraPtr a3() {
    taucat::MonomialPresentation p;
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return taucat::BasedAlgebra::path_algebra(p, "A3");
}

// Nakayama N3: 1 -a-> 2 -b-> 3 with relation ab = 0.
inline taucat::AlgebraPtr n3() {
    taucat::MonomialPresentation p;
    p.quiver.vertices = {"1", "2", "3"};
    p.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    p.relations = {{0, 1}};
    return taucat::BasedAlgebra::path_algebra(p, "N3");
}

// The ground field as a path algebra: one vertex, no arrows.
inline taucat::AlgebraPtr field() {
    taucat::MonomialPresentation p;
    p.quiver.vertices = {"1"};
    return taucat::BasedAlgebra::path_algebra(p, "k");
}

}  // namespace fixtures

#endif
