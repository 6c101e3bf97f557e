#include <doctest.h>

#include <cmath>

#include "cqf/eig.hpp"
#include "cqf/model.hpp"
#include "cqf/model_io.hpp"

using namespace cqf;

namespace {

const Mat kBj{{0, 1}, {-1, 0}};

// Minimal valid 2/2/2/2/2 model with identity data.
Model tiny_model() {
    Model m;
    m.plant.n = 2;
    m.plant.m = 2;
    m.plant.theta = kBj;
    m.plant.R = Mat::identity(2);
    m.plant.N = Mat::identity(2);
    m.observer.nu = 2;
    m.observer.p = 2;
    m.observer.mu = 2;
    m.observer.vartheta = kBj;
    m.observer.r = Mat::identity(2);
    m.observer.N1 = Mat::identity(2);
    m.observer.N2 = Mat::identity(2);
    m.observer.pi_columns = {1, 2};
    m.cost.F = Mat::identity(2);
    m.cost.G = Mat::zero(2, 2);
    return m;
}

}  // namespace

TEST_CASE("ito matrix blocks") {
    CHECK(frob_norm(build_ito(2) - kBj) == 0.0);
    CHECK(frob_norm(build_ito(4) - block_diag(kBj, kBj)) == 0.0);
    CHECK_THROWS_AS(build_ito(3), Error);

    // J^2 = -I
    Mat j = build_ito(6);
    CHECK(frob_norm(j * j + Mat::identity(6)) == 0.0);
}

TEST_CASE("plant derivation fixtures") {
    PlantSpec plant{2, 2, kBj, Mat::identity(2), Mat::identity(2)};
    PlantMatrices pm = derive_plant(plant);
    CHECK(frob_norm(pm.A - Mat{{-2, 2}, {-2, -2}}) == 0.0);
    CHECK(frob_norm(pm.B - Mat{{0, 2}, {-2, 0}}) == 0.0);
    CHECK(frob_norm(pm.C - Mat{{0, 2}, {-2, 0}}) == 0.0);

    // no coupling: pure rotation dynamics
    PlantSpec decoupled{2, 2, kBj, Mat::identity(2), Mat::zero(2, 2)};
    PlantMatrices dm = derive_plant(decoupled);
    CHECK(frob_norm(dm.A - 2.0 * (kBj * Mat::identity(2))) == 0.0);
    CHECK(frob_norm(dm.B) == 0.0);
    CHECK(frob_norm(dm.C) == 0.0);

    // zero energy matrix: drift from the field coupling alone
    PlantSpec free{2, 2, kBj, Mat::zero(2, 2), Mat::identity(2)};
    CHECK(frob_norm(derive_plant(free).A + 2.0 * Mat::identity(2)) == 0.0);
}

TEST_CASE("observer derivation fixtures") {
    Model m = tiny_model();
    ObserverMatrices om = derive_observer(m.observer, 2);
    CHECK(frob_norm(om.a - Mat{{-4, 2}, {-2, -4}}) == 0.0);
    CHECK(frob_norm(om.b1 - Mat{{0, 2}, {-2, 0}}) == 0.0);
    CHECK(frob_norm(om.b2 - Mat{{0, 2}, {-2, 0}}) == 0.0);

    m.observer.N1 = Mat::zero(2, 2);
    m.observer.N2 = Mat::zero(2, 2);
    ObserverMatrices quiet = derive_observer(m.observer, 2);
    CHECK(frob_norm(quiet.a - 2.0 * (kBj * m.observer.r)) == 0.0);
    CHECK(frob_norm(quiet.b1) == 0.0);
    CHECK(frob_norm(quiet.b2) == 0.0);

    m.observer.r = Mat::zero(2, 2);
    m.observer.N2 = Mat::identity(2);
    CHECK(frob_norm(derive_observer(m.observer, 2).a + 2.0 * Mat::identity(2)) == 0.0);
}

TEST_CASE("coupling terms scale quadratically") {
    Model m = tiny_model();
    Mat base = derive_observer(m.observer, 2).a;
    Mat quad_term = base - 2.0 * (m.observer.vartheta * (m.observer.r + transpose(m.observer.N2) * kBj * m.observer.N2));
    m.observer.N1 = 2.0 * m.observer.N1;
    Mat doubled = derive_observer(m.observer, 2).a;
    Mat quad_term2 =
        doubled - 2.0 * (m.observer.vartheta * (m.observer.r + transpose(m.observer.N2) * kBj * m.observer.N2));
    CHECK(frob_norm(quad_term2 - 4.0 * quad_term) <= 1e-14);
}

TEST_CASE("validate accepts the tiny model and flags defects") {
    Model m = tiny_model();
    CHECK(validate(m).empty());

    SUBCASE("asymmetric R") {
        m.plant.R = Mat{{0, 1}, {0, 0}};
        auto v = validate(m);
        REQUIRE(!v.empty());
        CHECK(v[0].find("plant.R") != std::string::npos);
        CHECK_THROWS_AS(require_valid(m), Error);
    }
    SUBCASE("non-antisymmetric theta") {
        m.plant.theta = Mat::identity(2);
        CHECK(!validate(m).empty());
    }
    SUBCASE("odd field dimension") {
        m.plant.m = 3;
        CHECK(!validate(m).empty());
    }
    SUBCASE("selector must take whole quadrature pairs") {
        Model big = tiny_model();
        big.plant.m = 4;
        big.plant.N = Mat::zero(4, 2);
        big.observer.pi_columns = {1, 3};
        auto v = validate(big);
        REQUIRE(!v.empty());
        CHECK(v[0].find("pi_columns") != std::string::npos);

        big.observer.pi_columns = {3, 4};  // second pair is fine
        CHECK(validate(big).empty());

        big.observer.pi_columns = {2, 1};  // reversed order breaks the Ito structure
        CHECK(!validate(big).empty());
    }
    SUBCASE("duplicate selector channel") {
        m.observer.pi_columns = {1, 1};
        CHECK(!validate(m).empty());
    }
    SUBCASE("shape mismatch reported with the field name") {
        m.cost.G = Mat::zero(2, 3);
        auto v = validate(m);
        REQUIRE(!v.empty());
        CHECK(v[0].find("cost.G") != std::string::npos);
    }
}

TEST_CASE("assemble block structure") {
    Model m = tiny_model();
    StateSpace ss = assemble(m);

    CHECK(frob_norm(ss.A_aug.block(0, 0, 2, 2) - ss.A) == 0.0);
    CHECK(frob_norm(ss.A_aug.block(0, 2, 2, 2)) == 0.0);
    CHECK(frob_norm(ss.A_aug.block(2, 0, 2, 2) - ss.b1 * ss.C) == 0.0);
    CHECK(frob_norm(ss.A_aug.block(2, 2, 2, 2) - ss.a) == 0.0);
    CHECK(frob_norm(ss.B_aug - block2x2(ss.B, Mat::zero(2, 2), ss.b1, ss.b2)) == 0.0);
    CHECK(frob_norm(ss.C_aug - hstack(m.cost.F, -1.0 * m.cost.G)) == 0.0);
    CHECK(frob_norm(ss.Theta_aug + transpose(ss.Theta_aug)) == 0.0);

    // block-triangular: abscissa of the cascade is the worse of the two
    const double full = spectral_abscissa(ss.A_aug);
    const double parts = std::max(spectral_abscissa(ss.A), spectral_abscissa(ss.a));
    CHECK(full == doctest::Approx(parts).epsilon(1e-10));

    // decoupled observer gives a block-diagonal drift
    Model dec = tiny_model();
    dec.observer.N1 = Mat::zero(2, 2);
    StateSpace dss = assemble(dec);
    CHECK(frob_norm(dss.A_aug.block(2, 0, 2, 2)) == 0.0);

    // assembling twice yields identical matrices
    StateSpace ss2 = assemble(m);
    CHECK(frob_norm(ss.A_aug - ss2.A_aug) == 0.0);
    CHECK(frob_norm(ss.B_aug - ss2.B_aug) == 0.0);
}

TEST_CASE("assemble rejects unstable dynamics") {
    Model m = tiny_model();
    m.plant.N = Mat::zero(2, 2);  // A = 2*theta*R, purely oscillatory
    CHECK_THROWS_AS(assemble(m), Error);
}

TEST_CASE("parameter recovery round-trip for invertible theta") {
    // Given (A, B) from the derivation with symplectic theta, the data
    // (R, N) can be recovered and re-derivation reproduces (A, B, C).
    Model m = tiny_model();
    m.plant.R = Mat{{1.5, -0.25}, {-0.25, 0.5}};
    m.plant.N = Mat{{0.7, -1.2}, {0.3, 2.0}};
    PlantMatrices pm = derive_plant(m.plant);

    const Mat theta_inv = -1.0 * kBj;  // bJ^{-1} = -bJ
    const Mat n_rec = 0.5 * transpose(theta_inv * pm.B);
    const Mat j = build_ito(2);
    const Mat r_rec = symmetrize(0.5 * (theta_inv * pm.A)) - symmetrize(transpose(n_rec) * j * n_rec);
    CHECK(frob_norm(n_rec - m.plant.N) <= 1e-14);
    CHECK(frob_norm(r_rec - m.plant.R) <= 1e-14);

    PlantSpec rec{2, 2, kBj, r_rec, n_rec};
    PlantMatrices pm2 = derive_plant(rec);
    CHECK(frob_norm(pm2.A - pm.A) <= 1e-14);
    CHECK(frob_norm(pm2.B - pm.B) <= 1e-14);
    CHECK(frob_norm(pm2.C - pm.C) <= 1e-14);
}

TEST_CASE("random instances are deterministic, valid, and assemble") {
    const Dims dims{4, 2, 4, 2, 2};
    Model a = random_instance(1, dims);
    Model b = random_instance(1, dims);
    CHECK(frob_norm(a.plant.R - b.plant.R) == 0.0);
    CHECK(frob_norm(a.observer.N1 - b.observer.N1) == 0.0);
    CHECK(frob_norm(a.cost.F - b.cost.F) == 0.0);

    Model c = random_instance(2, dims);
    CHECK(frob_norm(a.plant.R - c.plant.R) != 0.0);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Model m = random_instance(seed, dims);
        CHECK(validate(m).empty());
        CHECK_NOTHROW(assemble(m));
    }
}

TEST_CASE("json round-trip preserves every bit") {
    Model m = random_instance(3, Dims{4, 4, 2, 2, 2});
    nlohmann::json j = model_to_json(m);
    Model back = model_from_json(j);
    CHECK(frob_norm(m.plant.theta - back.plant.theta) == 0.0);
    CHECK(frob_norm(m.plant.R - back.plant.R) == 0.0);
    CHECK(frob_norm(m.plant.N - back.plant.N) == 0.0);
    CHECK(frob_norm(m.observer.r - back.observer.r) == 0.0);
    CHECK(frob_norm(m.observer.N1 - back.observer.N1) == 0.0);
    CHECK(frob_norm(m.observer.N2 - back.observer.N2) == 0.0);
    CHECK(frob_norm(m.cost.F - back.cost.F) == 0.0);
    CHECK(back.observer.pi_columns == m.observer.pi_columns);

    // and after a dump/parse cycle through text
    Model back2 = model_from_json(nlohmann::json::parse(j.dump()));
    CHECK(frob_norm(m.plant.R - back2.plant.R) == 0.0);
    CHECK(frob_norm(m.cost.G - back2.cost.G) == 0.0);
}

TEST_CASE("json rejects malformed documents") {
    Model m = tiny_model();
    nlohmann::json j = model_to_json(m);
    j["plant"].erase("R");
    CHECK_THROWS_AS(model_from_json(j), Error);

    nlohmann::json j2 = model_to_json(m);
    j2["observer"]["N1"] = "oops";
    CHECK_THROWS_AS(model_from_json(j2), Error);

    nlohmann::json j3 = model_to_json(m);
    j3["cost"]["F"] = nlohmann::json::array({nlohmann::json::array({1.0, 2.0}), nlohmann::json::array({3.0})});
    CHECK_THROWS_AS(model_from_json(j3), Error);
}
