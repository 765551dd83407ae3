#include <doctest.h>

#include "pglab/generate.hpp"
#include "pglab/stability.hpp"

using namespace pglab;

TEST_CASE("a single perturbed point is found and reverted in one step") {
    Plane pl(Field::make(3, 3));  // q = 27
    Rng rng(101);
    const int k = 2;
    WeightedMultiset base = random_kmod_multiset(pl, k, rng);
    WeightedMultiset m = base;
    std::uint32_t pt = 100;
    m.add_weight(pt, 2);

    RepairReport rep = repair(m, k);
    CHECK(rep.status == RepairStatus::success);
    REQUIRE(rep.steps.size() == 1);
    CHECK(rep.steps[0].point == pt);
    CHECK(rep.steps[0].added == 1);  // (k - (k+2)) mod 3
    CHECK(rep.steps[0].progress_ok);
    CHECK(rep.delta0 == pl.q() + 1);
    CHECK(rep.final_delta == 0);
    CHECK(rep.target == 1);
    CHECK(rep.changed_points == 1);
    CHECK(rep.changed_equals_target);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.pointset_consistent);
    CHECK(rep.all_progress_ok);
    CHECK(rep.result.w == base.w);
}

TEST_CASE("planted perturbations of up to four points are repaired exactly") {
    Plane pl(Field::make(5, 2));  // q = 25
    for (int eps = 1; eps <= 4; ++eps) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            Rng rng = Rng::for_trial(900 + eps, seed);
            const int k = static_cast<int>(rng.below(5));
            WeightedMultiset base = random_kmod_multiset(pl, k, rng);
            WeightedMultiset m = base;
            std::vector<std::uint32_t> planted = plant_perturbation(m, rng, eps);
            REQUIRE(static_cast<int>(planted.size()) == eps);

            RepairReport rep = repair(m, k);
            CAPTURE(eps);
            CAPTURE(seed);
            CHECK(rep.status == RepairStatus::success);
            CHECK(rep.final_delta == 0);
            CHECK(rep.target == eps);
            CHECK(rep.changed_points == eps);
            CHECK(rep.hypothesis_ok);
            CHECK(rep.result.w == base.w);

            BlockingSetReport bs = blocking_set(m, k);
            CHECK(bs.set == planted);
            CHECK(bs.target_size == eps);
            CHECK(bs.blocks_all);
            for (std::uint32_t pt : planted) CHECK(bs.per_point_index.at(pt) >= pl.q() + 1 - 3);
        }
    }
}

TEST_CASE("dominant residue of a uniformly shifted point") {
    Plane pl(Field::make(5, 2));
    Rng rng(55);
    const int k = 1;
    WeightedMultiset m = random_kmod_multiset(pl, k, rng);
    m.add_weight(77, 3);
    DominantResidue dr = dominant_residue(m, k, 77);
    REQUIRE(dr.present);
    CHECK(dr.residue == (k + 3) % 5);
    CHECK(dr.count == pl.q() + 1);

    // a point with no non-k lines through it fails the precondition
    DominantResidue none = dominant_residue(m, k, 78);
    CHECK_FALSE(none.present);
    CHECK_FALSE(none.reason.empty());
}

TEST_CASE("large-index points are exactly the planted ones") {
    Plane pl(Field::make(7, 2));  // q = 49
    Rng rng(12);
    const int k = 4;
    WeightedMultiset m = random_kmod_multiset(pl, k, rng);
    std::vector<std::uint32_t> planted = plant_perturbation(m, rng, 3);
    CHECK(large_index_points(m, k) == planted);
}

TEST_CASE("delta bound check at q = 25") {
    Plane pl(Field::make(5, 2));
    Rng rng(31);
    WeightedMultiset m = random_kmod_multiset(pl, 2, rng);
    plant_perturbation(m, rng, 1);
    DeltaBoundCheck chk = delta_bound_check(m, 2);
    // floor(sqrt 25) = 5: bound = 5*25 - 25 + 2*5 + 1 = 111
    CHECK(chk.bound == 111);
    CHECK(chk.holds);
    // one planted point has index near q+1 >= 20 = q - floor(sqrt q),
    // so the hypothesis is off
    CHECK_FALSE(chk.hypothesis_ok);

    WeightedMultiset clean = random_kmod_multiset(pl, 2, rng);
    DeltaBoundCheck clean_chk = delta_bound_check(clean, 2);
    CHECK(clean_chk.delta == 0);
    CHECK(clean_chk.hypothesis_ok);
    CHECK(clean_chk.holds);
}

TEST_CASE("repair guard trips on a hopeless configuration") {
    // a bare single point is 1 mod p on its pencil and 0 elsewhere: delta is
    // huge, no dominant-residue step can fix it within the step budget
    Plane pl(Field::make(5, 2));
    WeightedMultiset m(pl);
    m.add_weight(0, 1);
    RepairReport rep = repair(m, 1);
    CHECK(rep.status != RepairStatus::success);
    CHECK_FALSE(rep.failure_reason.empty());
}
