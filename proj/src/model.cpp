#include "cqf/model.hpp"

#include <cmath>
#include <sstream>

#include "cqf/eig.hpp"
#include "cqf/rng.hpp"

namespace cqf {

Mat ObserverSpec::pi(int m) const {
    Mat out(p, m);
    for (int i = 0; i < p; ++i) {
        const int col = pi_columns.at(i) - 1;
        if (col < 0 || col >= m) throw Error(ErrorKind::InvalidSpec, "pi_columns entry out of range");
        out(i, col) = 1.0;
    }
    return out;
}

Mat build_ito(int m) {
    if (m < 0 || m % 2 != 0) throw Error(ErrorKind::OddDimension, "field dimension must be even, got " + std::to_string(m));
    const Mat bj{{0.0, 1.0}, {-1.0, 0.0}};
    Mat j(m, m);
    for (int k = 0; k < m / 2; ++k) j.set_block(2 * k, 2 * k, bj);
    return j;
}

PlantMatrices derive_plant(const PlantSpec& plant) {
    const Mat j = build_ito(plant.m);
    const Mat nt = transpose(plant.N);
    PlantMatrices out;
    out.A = 2.0 * (plant.theta * (plant.R + nt * j * plant.N));
    out.B = 2.0 * (plant.theta * nt);
    out.C = 2.0 * (j * plant.N);
    return out;
}

ObserverMatrices derive_observer(const ObserverSpec& obs, int m) {
    const Mat j = build_ito(m);
    const Mat jmu = build_ito(obs.mu);
    const Mat pi = obs.pi(m);
    const Mat n1t = transpose(obs.N1);
    const Mat n2t = transpose(obs.N2);
    ObserverMatrices out;
    out.a = 2.0 * (obs.vartheta * (obs.r + n1t * pi * j * transpose(pi) * obs.N1 + n2t * jmu * obs.N2));
    out.b1 = 2.0 * (obs.vartheta * n1t * pi);
    out.b2 = 2.0 * (obs.vartheta * n2t);
    return out;
}

namespace {

void check_antisymmetric(std::vector<std::string>& out, const Mat& m, const std::string& name) {
    if (!m.square()) {
        out.push_back(name + ": must be square");
        return;
    }
    if (frob_norm(m + transpose(m)) != 0.0) out.push_back(name + ": must be antisymmetric");
}

void check_symmetric(std::vector<std::string>& out, const Mat& m, const std::string& name) {
    if (!m.square()) {
        out.push_back(name + ": must be square");
        return;
    }
    if (frob_norm(m - transpose(m)) != 0.0) out.push_back(name + ": must be symmetric");
}

void check_shape(std::vector<std::string>& out, const Mat& m, int rows, int cols, const std::string& name) {
    if (m.rows() != rows || m.cols() != cols) {
        std::ostringstream os;
        os << name << ": expected " << rows << "x" << cols << ", got " << m.rows() << "x" << m.cols();
        out.push_back(os.str());
    }
}

}  // namespace

std::vector<std::string> validate(const Model& model) {
    std::vector<std::string> v;
    const PlantSpec& pl = model.plant;
    const ObserverSpec& ob = model.observer;
    const CostSpec& co = model.cost;

    if (pl.n <= 0) v.push_back("plant.n: must be positive");
    if (pl.m <= 0) v.push_back("plant.m: must be positive");
    if (pl.m % 2 != 0) v.push_back("plant.m: must be even");
    check_shape(v, pl.theta, pl.n, pl.n, "plant.theta");
    check_shape(v, pl.R, pl.n, pl.n, "plant.R");
    check_shape(v, pl.N, pl.m, pl.n, "plant.N");
    if (pl.theta.rows() == pl.n && pl.theta.cols() == pl.n) check_antisymmetric(v, pl.theta, "plant.theta");
    if (pl.R.rows() == pl.n && pl.R.cols() == pl.n) check_symmetric(v, pl.R, "plant.R");

    if (ob.nu <= 0) v.push_back("observer.nu: must be positive");
    if (ob.p <= 0) v.push_back("observer.p: must be positive");
    if (ob.p % 2 != 0) v.push_back("observer.p: must be even");
    if (ob.p > pl.m) v.push_back("observer.p: must not exceed plant.m");
    if (ob.mu <= 0) v.push_back("observer.mu: must be positive");
    if (ob.mu % 2 != 0) v.push_back("observer.mu: must be even");
    check_shape(v, ob.vartheta, ob.nu, ob.nu, "observer.vartheta");
    check_shape(v, ob.r, ob.nu, ob.nu, "observer.r");
    check_shape(v, ob.N1, ob.p, ob.nu, "observer.N1");
    check_shape(v, ob.N2, ob.mu, ob.nu, "observer.N2");
    if (ob.vartheta.square() && ob.vartheta.rows() == ob.nu) check_antisymmetric(v, ob.vartheta, "observer.vartheta");
    if (ob.r.square() && ob.r.rows() == ob.nu) check_symmetric(v, ob.r, "observer.r");

    // Selector: one output channel per row, no channel twice, and whole
    // quadrature pairs (2k-1, 2k) taken in order so the selected field
    // keeps the paired Ito structure.
    if (static_cast<int>(ob.pi_columns.size()) != ob.p) {
        v.push_back("observer.pi_columns: must list exactly p entries");
    } else {
        std::vector<bool> used(static_cast<std::size_t>(pl.m > 0 ? pl.m : 0), false);
        bool in_range = true;
        for (int c : ob.pi_columns) {
            if (c < 1 || c > pl.m) {
                v.push_back("observer.pi_columns: entry " + std::to_string(c) + " out of range 1..m");
                in_range = false;
                break;
            }
            if (used[c - 1]) {
                v.push_back("observer.pi_columns: channel " + std::to_string(c) + " selected twice");
                in_range = false;
                break;
            }
            used[c - 1] = true;
        }
        if (in_range) {
            for (int k = 0; k + 1 < ob.p; k += 2) {
                const int c0 = ob.pi_columns[k];
                const int c1 = ob.pi_columns[k + 1];
                if (c0 % 2 != 1 || c1 != c0 + 1) {
                    v.push_back("observer.pi_columns: rows " + std::to_string(k + 1) + "," + std::to_string(k + 2) +
                                " select channels (" + std::to_string(c0) + "," + std::to_string(c1) +
                                "), not an adjacent quadrature pair (2k-1, 2k)");
                }
            }
        }
    }

    const int q = co.F.rows();
    if (q <= 0) v.push_back("cost.F: must have at least one row");
    check_shape(v, co.F, q, pl.n, "cost.F");
    check_shape(v, co.G, q, ob.nu, "cost.G");

    return v;
}

void require_valid(const Model& model) {
    const auto violations = validate(model);
    if (violations.empty()) return;
    std::string msg = "invalid model:";
    for (const auto& s : violations) msg += "\n  - " + s;
    throw Error(ErrorKind::InvalidSpec, msg);
}

StateSpace assemble(const Model& model, double hurwitz_margin) {
    require_valid(model);
    const PlantMatrices pm = derive_plant(model.plant);
    const ObserverMatrices om = derive_observer(model.observer, model.plant.m);

    if (!is_hurwitz(pm.A, hurwitz_margin))
        throw Error(ErrorKind::NotHurwitz, "assemble: plant drift matrix A is not Hurwitz");
    if (!is_hurwitz(om.a, hurwitz_margin))
        throw Error(ErrorKind::NotHurwitz, "assemble: observer drift matrix a is not Hurwitz");

    StateSpace ss;
    ss.n = model.plant.n;
    ss.nu = model.observer.nu;
    ss.m = model.plant.m;
    ss.mu = model.observer.mu;
    ss.q = model.cost.F.rows();
    ss.A = pm.A;
    ss.B = pm.B;
    ss.C = pm.C;
    ss.a = om.a;
    ss.b1 = om.b1;
    ss.b2 = om.b2;
    ss.A_aug = block2x2(pm.A, Mat::zero(ss.n, ss.nu), om.b1 * pm.C, om.a);
    ss.B_aug = block2x2(pm.B, Mat::zero(ss.n, ss.mu), om.b1, om.b2);
    ss.C_aug = hstack(model.cost.F, -model.cost.G);
    ss.Theta_aug = block_diag(model.plant.theta, model.observer.vartheta);
    return ss;
}

namespace {

Mat symplectic_ccr(int n) {
    // blkdiag(bJ, ..., bJ); n must be even for the generator.
    return build_ito(n);
}

}  // namespace

Model random_instance(std::uint64_t seed, const Dims& dims) {
    if (dims.n <= 0 || dims.m <= 0 || dims.nu <= 0 || dims.p <= 0 || dims.mu <= 0)
        throw Error(ErrorKind::InvalidSpec, "random_instance: dimensions must be positive");
    if (dims.n % 2 != 0 || dims.m % 2 != 0 || dims.nu % 2 != 0 || dims.p % 2 != 0 || dims.mu % 2 != 0)
        throw Error(ErrorKind::OddDimension, "random_instance: all dimensions must be even");
    if (dims.p > dims.m) throw Error(ErrorKind::InvalidSpec, "random_instance: p must not exceed m");

    Rng rng(seed);
    const int q = dims.n;  // estimate all plant variables by default

    double energy_scale = 1.0;
    for (int attempt = 0; attempt < 100; ++attempt) {
        Model model;
        model.plant.n = dims.n;
        model.plant.m = dims.m;
        model.plant.theta = symplectic_ccr(dims.n);
        model.plant.R = energy_scale * rng.symmetric_normal(dims.n);
        model.plant.N = rng.normal_mat(dims.m, dims.n);

        model.observer.nu = dims.nu;
        model.observer.p = dims.p;
        model.observer.mu = dims.mu;
        model.observer.vartheta = symplectic_ccr(dims.nu);
        model.observer.r = energy_scale * rng.symmetric_normal(dims.nu);
        model.observer.N1 = rng.normal_mat(dims.p, dims.nu);
        model.observer.N2 = rng.normal_mat(dims.mu, dims.nu);
        model.observer.pi_columns.resize(dims.p);
        for (int i = 0; i < dims.p; ++i) model.observer.pi_columns[i] = i + 1;

        model.cost.F = rng.normal_mat(q, dims.n);
        model.cost.G = rng.normal_mat(q, dims.nu);

        const PlantMatrices pm = derive_plant(model.plant);
        const ObserverMatrices om = derive_observer(model.observer, dims.m);
        if (is_hurwitz(pm.A, kDefaultHurwitzMargin) && is_hurwitz(om.a, kDefaultHurwitzMargin)) return model;
        energy_scale *= 0.5;
    }
    throw Error(ErrorKind::GenerationFailed, "random_instance: no Hurwitz draw in 100 attempts");
}

}  // namespace cqf
