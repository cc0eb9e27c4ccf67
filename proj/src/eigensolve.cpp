#include "sjj/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

#include "sjj/errors.hpp"

namespace sjj {

namespace {

struct Block {
    std::vector<double> diag;
    std::vector<double> offdiag;
};

struct ParityBlocks {
    Block even;
    Block odd;  // empty when N = 0
};

// Fold a mirror-symmetric chain of N+1 sites onto |n> +- |N-n>.
ParityBlocks fold(const TridiagonalHamiltonian& h) {
    const auto a = h.diag();
    const auto b = h.offdiag();
    const std::size_t n_tot = b.size();
    ParityBlocks blocks;
    if (n_tot % 2 == 0) {
        const std::size_t half = n_tot / 2;
        blocks.even.diag.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(half + 1));
        blocks.even.offdiag.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(half));
        if (half > 0) blocks.even.offdiag[half - 1] *= std::numbers::sqrt2;
        blocks.odd.diag.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(half));
        if (half > 0) blocks.odd.offdiag.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(half - 1));
    } else {
        const std::size_t pairs = (n_tot + 1) / 2;
        blocks.even.diag.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pairs));
        blocks.even.offdiag.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(pairs - 1));
        blocks.odd = blocks.even;
        blocks.even.diag[pairs - 1] += b[pairs - 1];
        blocks.odd.diag[pairs - 1] -= b[pairs - 1];
    }
    return blocks;
}

// Map a folded eigenvector back onto the N+1 site chain.
void unfold(std::span<const double> folded, Parity parity, std::size_t n_tot, std::span<double> out) {
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    const double sign = parity == Parity::Even ? 1.0 : -1.0;
    std::fill(out.begin(), out.end(), 0.0);
    const std::size_t pairs = (n_tot + 1) / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
        out[i] = folded[i] * inv_sqrt2;
        out[n_tot - i] = sign * folded[i] * inv_sqrt2;
    }
    if (n_tot % 2 == 0 && parity == Parity::Even) out[n_tot / 2] = folded[n_tot / 2];
}

void apply_sign_convention(std::span<double> v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

bool near_tie(double lo, double hi) {
    return hi - lo <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo));
}

struct Level {
    double energy;
    Parity parity;
    std::vector<double> vector;
};

Spectrum assemble(std::vector<Level> levels) {
    std::stable_sort(levels.begin(), levels.end(),
                     [](const Level& x, const Level& y) { return x.energy < y.energy; });
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        if (levels[k].parity == Parity::Odd && levels[k + 1].parity == Parity::Even &&
            near_tie(levels[k].energy, levels[k + 1].energy))
            std::swap(levels[k], levels[k + 1]);
    }
    const std::size_t dim = levels.size();
    Spectrum s;
    s.energies.resize(dim);
    s.parity.resize(dim);
    s.vectors = linalg::Matrix(dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        s.energies[k] = levels[k].energy;
        s.parity[k] = levels[k].parity;
        auto col = s.vectors.column(k);
        std::copy(levels[k].vector.begin(), levels[k].vector.end(), col.begin());
        apply_sign_convention(col);
    }
    return s;
}

bool use_parity_blocks(const TridiagonalHamiltonian& h) { return h.is_mirror_symmetric(); }

double lowest(const std::vector<double>& values) { return *std::min_element(values.begin(), values.end()); }

bool connected(std::span<const double> offdiag) {
    return std::all_of(offdiag.begin(), offdiag.end(), [](double b) { return b != 0.0; });
}

}  // namespace

Spectrum eigen_decompose(const TridiagonalHamiltonian& h) {
    const std::size_t dim = h.dim();
    std::vector<Level> levels;
    levels.reserve(dim);
    if (use_parity_blocks(h)) {
        const std::size_t n_tot = dim - 1;
        const ParityBlocks blocks = fold(h);
        for (Parity parity : {Parity::Even, Parity::Odd}) {
            const Block& blk = parity == Parity::Even ? blocks.even : blocks.odd;
            if (blk.diag.empty()) continue;
            const auto eig = linalg::tridiagonal_ql(blk.diag, blk.offdiag, true);
            for (std::size_t k = 0; k < eig.values.size(); ++k) {
                Level lv{eig.values[k], parity, std::vector<double>(dim)};
                unfold(eig.vectors.column(k), parity, n_tot, lv.vector);
                levels.push_back(std::move(lv));
            }
        }
    } else {
        const auto eig = linalg::tridiagonal_ql(h.diag(), h.offdiag(), true);
        for (std::size_t k = 0; k < dim; ++k) {
            auto col = eig.vectors.column(k);
            levels.push_back(Level{eig.values[k], Parity::Unknown, std::vector<double>(col.begin(), col.end())});
        }
    }
    return assemble(std::move(levels));
}

std::vector<double> eigenvalues(const TridiagonalHamiltonian& h) {
    std::vector<double> values;
    if (use_parity_blocks(h)) {
        const ParityBlocks blocks = fold(h);
        values = linalg::tridiagonal_ql(blocks.even.diag, blocks.even.offdiag, false).values;
        if (!blocks.odd.diag.empty()) {
            const auto odd = linalg::tridiagonal_ql(blocks.odd.diag, blocks.odd.offdiag, false).values;
            values.insert(values.end(), odd.begin(), odd.end());
        }
    } else {
        values = linalg::tridiagonal_ql(h.diag(), h.offdiag(), false).values;
    }
    std::sort(values.begin(), values.end());
    return values;
}

GroundState ground_state(const TridiagonalHamiltonian& h) {
    const std::size_t dim = h.dim();
    if (use_parity_blocks(h)) {
        // A connected chain with non-positive couplings has a positive ground
        // vector, which is necessarily even.
        const ParityBlocks blocks = fold(h);
        const Block& even = blocks.even;
        std::vector<double> folded;
        double energy = 0.0;
        if (connected(even.offdiag)) {
            energy = lowest(linalg::tridiagonal_ql(even.diag, even.offdiag, false).values);
            folded = linalg::twisted_eigenvector(even.diag, even.offdiag, energy);
        } else {
            const auto eig = linalg::tridiagonal_ql(even.diag, even.offdiag, true);
            const auto k = static_cast<std::size_t>(
                std::min_element(eig.values.begin(), eig.values.end()) - eig.values.begin());
            energy = eig.values[k];
            auto col = eig.vectors.column(k);
            folded.assign(col.begin(), col.end());
        }
        std::vector<double> full(dim);
        unfold(folded, Parity::Even, dim - 1, full);
        apply_sign_convention(full);
        return GroundState{energy, FockState::normalized(Amplitudes(full.begin(), full.end()))};
    }

    const Spectrum spec = eigen_decompose(h);
    const double energy = spec.energies[0];
    std::vector<double> vec;
    if (connected(h.offdiag())) {
        vec = linalg::twisted_eigenvector(h.diag(), h.offdiag(), energy);
    } else {
        auto col = spec.vectors.column(0);
        vec.assign(col.begin(), col.end());
    }
    apply_sign_convention(vec);
    return GroundState{energy, FockState::normalized(Amplitudes(vec.begin(), vec.end()))};
}

FockState propagate(const Spectrum& spectrum, const FockState& s0, double tau) {
    const std::size_t dim = spectrum.energies.size();
    if (s0.amps().size() != dim) throw DomainError("propagate: state dimension does not match spectrum");
    Amplitudes out(dim, {0.0, 0.0});
    for (std::size_t k = 0; k < dim; ++k) {
        const auto v = spectrum.vectors.column(k);
        std::complex<double> overlap{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) overlap += v[i] * s0[i];
        const std::complex<double> weight = overlap * std::polar(1.0, -spectrum.energies[k] * tau);
        for (std::size_t i = 0; i < dim; ++i) out[i] += weight * v[i];
    }
    return FockState(std::move(out));
}

FockState propagate(const TridiagonalHamiltonian& h, const FockState& s0, double tau) {
    if (tau == 0.0) return s0;
    return propagate(eigen_decompose(h), s0, tau);
}

double energy_gap(const TridiagonalHamiltonian& h) {
    const auto values = eigenvalues(h);
    if (values.size() < 2) return 0.0;
    return std::max(0.0, values[1] - values[0]);
}

}  // namespace sjj
