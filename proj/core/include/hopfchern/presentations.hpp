#pragma once

// The four shipped *-presentations and the embeddings of the two base
// algebras into their ambient algebras.

#include "hopfchern/ncalg.hpp"

namespace hopfchern {

/// Heegaard-type quantum 3-sphere: a, a*, b, b*; graded by the U(1) winding.
const Presentation& heegaard();
/// Quantum SU(2): alpha, alpha*, gamma, gamma*.
const Presentation& qsu2();
/// Mirror quantum sphere: f0 (self-adjoint), f1, f1*.
const Presentation& s2pq();
/// Podles sphere with symbolic s: K (self-adjoint), L, L*.
const Presentation& podles();

/// Images of f0, f1, f1* in heegaard(), normal-formed.
NCPolynomial heegaard_image(Symbol base_generator);
/// Images of K, L, L* in qsu2() for the given s, normal-formed.
NCPolynomial qsu2_image(Symbol base_generator, const RF& s);

/// Convenience: the generator by name in a presentation.
inline NCPolynomial gen(const Presentation& pres, std::string_view name) { return NCPolynomial::gen(pres, name); }

}  // namespace hopfchern
