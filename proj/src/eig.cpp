#include "cqf/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cqf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double sign_of(double magnitude, double sign_source) {
    return sign_source >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Diagonal similarity scaling with radix-2 powers (exact in floating point)
// so that row and column norms become comparable. Classic balancing step;
// leaves the spectrum unchanged.
void balance(Mat& a) {
    const int n = a.rows();
    const double radix = 2.0;
    const double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double ginv = 1.0 / f;
                for (int j = 0; j < n; ++j) a(i, j) *= ginv;
                for (int j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

// Householder similarity reduction to upper Hessenberg form, in place.
void hessenberg(Mat& a) {
    const int n = a.rows();
    std::vector<double> v(n);
    for (int k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale = std::max(scale, std::abs(a(i, k)));
        if (scale == 0.0) continue;

        double sigma = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            sigma += v[i] * v[i];
        }
        double alpha = -sign_of(std::sqrt(sigma), v[k + 1]);
        double vtv = sigma - v[k + 1] * alpha;  // = v^T v / 2 after the update below
        v[k + 1] -= alpha;
        if (vtv == 0.0) continue;

        // a <- (I - v v^T / vtv) a (I - v v^T / vtv), v supported on k+1..n-1
        for (int j = k; j < n; ++j) {  // left update
            double s = 0.0;
            for (int i = k + 1; i < n; ++i) s += v[i] * a(i, j);
            s /= vtv;
            for (int i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
        }
        for (int i = 0; i < n; ++i) {  // right update
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += a(i, j) * v[j];
            s /= vtv;
            for (int j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
        }
        a(k + 1, k) = alpha * scale;
        for (int i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

// Francis double-shift QR iteration on an upper Hessenberg matrix,
// eigenvalues only. Follows the classic EISPACK hqr organization:
// deflate trailing 1x1/2x2 blocks, exceptional shifts every 10 stalled
// sweeps, global sweep budget 100*n.
std::vector<std::complex<double>> hqr(Mat& a) {
    const int n = a.rows();
    std::vector<std::complex<double>> eig(n);

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));
    if (anorm == 0.0) return eig;  // zero matrix

    const int max_total_sweeps = 100 * n;
    int total_sweeps = 0;

    int nn = n - 1;
    double t = 0.0;  // accumulated exceptional shift
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            // Look for a negligible subdiagonal element.
            for (l = nn; l >= 1; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= kEps * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 0) l = 0;

            double x = a(nn, nn);
            if (l == nn) {  // one real eigenvalue
                eig[nn--] = {x + t, 0.0};
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {  // a 2x2 block has decoupled
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {  // real pair
                        z = p + sign_of(z, p);
                        eig[nn - 1] = eig[nn] = {x + z, 0.0};
                        if (z != 0.0) eig[nn] = {x - w / z, 0.0};
                    } else {  // complex conjugate pair
                        eig[nn - 1] = {x + p, z};
                        eig[nn] = {x + p, -z};
                    }
                    nn -= 2;
                } else {  // no deflation yet: one double-shift sweep
                    if (++total_sweeps > max_total_sweeps)
                        throw Error(ErrorKind::ConvergenceFailure, "eigenvalues: QR iteration did not converge");
                    if (its == 10 || its == 20) {  // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    if (its > 30) its = 1;  // keep exceptional shifts firing within the global budget

                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    int m;
                    for (m = nn - 2; m >= l; --m) {  // starting position for the implicit bulge
                        z = a(m, m);
                        double rr = x - z;
                        double ss = y - z;
                        p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - rr - ss;
                        r = a(m + 2, m + 1);
                        double scl = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= scl;
                        q /= scl;
                        r /= scl;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v =
                            std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
                        if (u <= kEps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        a(i, i - 2) = 0.0;
                        if (i != m + 2) a(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {  // chase the bulge
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = (k != nn - 1) ? a(k + 2, k - 1) : 0.0;
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        double yy = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {  // row transform
                            double pp = a(k, j) + q * a(k + 1, j);
                            if (k != nn - 1) {
                                pp += r * a(k + 2, j);
                                a(k + 2, j) -= pp * z;
                            }
                            a(k + 1, j) -= pp * yy;
                            a(k, j) -= pp * x;
                        }
                        const int mmin = std::min(nn, k + 3);
                        for (int i = l; i <= mmin; ++i) {  // column transform
                            double pp = x * a(i, k) + yy * a(i, k + 1);
                            if (k != nn - 1) {
                                pp += z * a(i, k + 2);
                                a(i, k + 2) -= pp * r;
                            }
                            a(i, k + 1) -= pp * q;
                            a(i, k) -= pp;
                        }
                    }
                }
            }
        } while (l < nn - 1 && nn >= 0);
    }
    return eig;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const Mat& a) {
    require_square(a, "eigenvalues");
    if (!a.all_finite()) throw Error(ErrorKind::NotFinite, "eigenvalues: matrix has non-finite entries");
    const int n = a.rows();
    if (n == 0) return {};
    if (n == 1) return {{a(0, 0), 0.0}};
    Mat work = a;
    balance(work);
    hessenberg(work);
    return hqr(work);
}

double spectral_abscissa(const Mat& a) {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& ev : eigenvalues(a)) m = std::max(m, ev.real());
    return m;
}

double sym_norm2(const Mat& s) {
    double m = 0.0;
    for (const auto& ev : eigenvalues(symmetrize(s))) m = std::max(m, std::abs(ev.real()));
    return m;
}

double sym_min_eig(const Mat& s) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& ev : eigenvalues(symmetrize(s))) m = std::min(m, ev.real());
    return m;
}

bool is_hurwitz(const Mat& a, double margin) { return spectral_abscissa(a) < -margin; }

}  // namespace cqf
