#pragma once

#include "sod/homspaces.hpp"

namespace sod {

enum class BlockLabel { plain, j_part, pi_part };

struct CollectionItem {
    BlockLabel label = BlockLabel::plain;
    GrObject object;
};

/// An ordered collection of objects, either on Gr(k, n) itself or split
/// into a pushforward block and a pullback block on Tot(U).
struct CollectionSpec {
    enum class Space { grassmannian, total_space };

    Space space = Space::grassmannian;
    Context ctx;
    std::vector<CollectionItem> items;
    /// Whether verification should also require the collection to be
    /// strong (no graded Homs outside degree zero in either direction).
    bool strong_expected = false;
    std::string name;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    std::map<std::string, std::string> parameters;
    bool overall = true;

    void add(std::string name, bool passed, std::string witness);
};

/// Kapranov's full strong exceptional collection {L_lambda U} over the
/// box order.
CollectionSpec kapranov_collection(int k, int n);

/// The two-block collection on Gr(k, n): {L_lambda U} over diagrams with
/// exactly k rows (inclusion-reversing), then {L_{mu^T} Q} over the
/// complement (inclusion-preserving).
CollectionSpec modified_collection(int k, int n);

/// The induced collection on Tot(U): the first block pushed forward along
/// the zero section, the second pulled back along the projection.
CollectionSpec total_space_collection(int k, int n);

/// Swaps two items; used to build deliberately broken fixtures.
CollectionSpec with_swapped_items(CollectionSpec spec, int i, int j);

/// Swaps the first two items (always a comparable pair in box order), which
/// must make verification fail with a concrete witness.
CollectionSpec misordered_fixture(CollectionSpec spec);

/// Runs all applicable checks: exceptionality, semiorthogonality,
/// optional strongness and K-spanning on the Grassmannian; the finite
/// pushforward/pullback criteria, cross-block vanishing, zero-section
/// exceptionality, pullback endomorphism strata and block counts on the
/// total space. Failures are verdicts with witnesses, never errors.
VerificationReport verify(const Engine& engine, const CollectionSpec& spec, int max_sym_degree);

/// Raw graded Hom data behind `verify`: entry (i, j) is the graded Hom
/// from item i to item j; absent when the direction is not computable
/// (pushforward source, pullback target).
std::vector<std::vector<std::optional<HomProfile>>> hom_matrix(const Engine& engine,
                                                               const CollectionSpec& spec,
                                                               int max_sym_degree);

}  // namespace sod
