#pragma once

#include "sod/collections.hpp"

namespace sod {

/// Ordered list of K-classes over a fixed Gr(k, n).
struct KCollection {
    Context ctx;
    std::vector<KClass> classes;
};

/// [A'] = [A] - chi(A, B) [B]: the K-class of the fiber of the
/// coevaluation map A -> Hom(A, B)* (x) B.
KClass right_mutation_k(const Engine& engine, const KClass& a, const KClass& b);

/// [B'] = [B] - chi(A, B) [A].
KClass left_mutation_k(const Engine& engine, const KClass& a, const KClass& b);

/// Last class mutated leftward through all predecessors, then moved to
/// the front. Defined up to the sign of the moved class.
KCollection rotate_right_k(const Engine& engine, const KCollection& coll);

/// First class mutated rightward through all successors, then moved to
/// the back.
KCollection rotate_left_k(const Engine& engine, const KCollection& coll);

/// K-classes of the Kapranov collection in box order.
KCollection kapranov_kcollection(const Engine& engine);

/// Checks the staircase resolution relating L_{lambda^T} Q to the bundles
/// L_mu U over mu strictly inside lambda: every graded Hom multiplicity
/// entering the resolution is verified to sit in degree zero, and the
/// alternating sum of K-classes is compared exactly.
VerificationReport verify_resolution(const Engine& engine, const Partition& lambda);

/// Rotates <L_lambda U, {L_mu U}> through the K-theoretic mutation
/// sequence and compares the outcome, item by item up to sign, with
/// <{L_{mu^T} Q}, L_{lambda^T} Q>.
VerificationReport verify_mutation_equivalence(const Engine& engine, const Partition& lambda);

/// Exploratory check, informational only: whether rotating the full
/// Kapranov K-collection binomial(n, k) times returns the original
/// classes up to per-item sign. Fails already on P^1, where a full turn
/// twists by the canonical bundle.
bool rotation_periodicity_holds(const Engine& engine);

}  // namespace sod
