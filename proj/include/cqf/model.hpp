#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqf/lyap.hpp"
#include "cqf/mat.hpp"

namespace cqf {

/// Open quantum harmonic oscillator plant: n dynamic variables with CCR
/// matrix theta, quadratic Hamiltonian with energy matrix R, linear
/// coupling N to m external field channels (m even).
struct PlantSpec {
    int n = 0;
    int m = 0;
    Mat theta;  // n x n, antisymmetric
    Mat R;      // n x n, symmetric
    Mat N;      // m x n
};

/// Coherent observer: nu dynamic variables with CCR matrix vartheta,
/// energy matrix r, coupling N1 to the selected plant output (p channels),
/// coupling N2 to its own noise field (mu channels). pi_columns lists the
/// 1-based output channels the selector picks; channels pair up as
/// (2k-1, 2k) quadratures and the selector must take whole pairs in order.
struct ObserverSpec {
    int nu = 0;
    int p = 0;
    int mu = 0;
    Mat vartheta;  // nu x nu, antisymmetric
    Mat r;         // nu x nu, symmetric
    Mat N1;        // p x nu
    Mat N2;        // mu x nu
    std::vector<int> pi_columns;  // p entries, 1-based

    Mat pi(int m) const;  // p x m selector matrix
};

/// Estimation error weights: error = F X - G xi, q components.
struct CostSpec {
    Mat F;  // q x n
    Mat G;  // q x nu
};

struct Model {
    PlantSpec plant;
    ObserverSpec observer;
    CostSpec cost;
};

/// Imaginary part of the field Ito matrix for an even channel count:
/// blkdiag(bJ, ..., bJ) with bJ = [[0,1],[-1,0]], one block per
/// quadrature pair. Throws OddDimension.
Mat build_ito(int m);

struct PlantMatrices {
    Mat A;  // n x n drift
    Mat B;  // n x m dispersion
    Mat C;  // m x n output
};

struct ObserverMatrices {
    Mat a;   // nu x nu drift
    Mat b1;  // nu x m gain on the full plant output (selector folded in)
    Mat b2;  // nu x mu gain on the observer noise
};

/// A = 2 theta (R + N^T J N), B = 2 theta N^T, C = 2 J N.
PlantMatrices derive_plant(const PlantSpec& plant);

/// a = 2 vartheta (r + N1^T Pi J Pi^T N1 + N2^T Jmu N2),
/// b1 = 2 vartheta N1^T Pi, b2 = 2 vartheta N2^T.
ObserverMatrices derive_observer(const ObserverSpec& obs, int m);

/// All real state-space matrices of the plant-observer cascade, partitioned
/// n | nu. The composite blocks satisfy
///   A_aug = [[A, 0], [b1 C, a]],  B_aug = [[B, 0], [b1, b2]],
///   C_aug = [F, -G],              Theta_aug = blkdiag(theta, vartheta).
struct StateSpace {
    int n = 0;
    int nu = 0;
    int m = 0;
    int mu = 0;
    int q = 0;
    Mat A, B, C;
    Mat a, b1, b2;
    Mat A_aug, B_aug, C_aug;
    Mat Theta_aug;
};

/// Per-field diagnostics for every violated invariant; empty means valid.
std::vector<std::string> validate(const Model& model);

/// Throws InvalidSpec listing all violations.
void require_valid(const Model& model);

/// Validates, derives, and assembles; checks that both drift matrices are
/// Hurwitz with the given margin (throws NotHurwitz naming the offender).
StateSpace assemble(const Model& model, double hurwitz_margin = kDefaultHurwitzMargin);

struct Dims {
    int n = 0;
    int m = 0;
    int nu = 0;
    int p = 0;
    int mu = 0;
};

/// Seeded random instance with symplectic CCR matrices and standard-normal
/// data, rejection-sampled (energy matrices halved per retry) until both
/// drift matrices are Hurwitz. Deterministic per seed; throws
/// GenerationFailed after 100 rejected draws.
Model random_instance(std::uint64_t seed, const Dims& dims);

}  // namespace cqf
