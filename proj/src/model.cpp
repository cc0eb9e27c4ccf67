#include "sjj/model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "sjj/errors.hpp"

namespace sjj {

std::string_view to_string(ModelKind kind) {
    return kind == ModelKind::SJJ ? "sjj" : "bjj";
}

ModelKind parse_model_kind(std::string_view text) {
    if (text == "sjj" || text == "SJJ") return ModelKind::SJJ;
    if (text == "bjj" || text == "BJJ") return ModelKind::BJJ;
    throw DomainError("unknown model kind '" + std::string(text) + "' (expected sjj or bjj)");
}

void validate(const TwoModeParams& params) {
    if (params.n_total < 1) throw DomainError("n_total must be >= 1");
    if (!std::isfinite(params.coupling) || params.coupling < 0.0)
        throw DomainError("coupling must be finite and >= 0");
}

bool is_nonphysical_soliton_limit(const TwoModeParams& params) {
    return params.kind == ModelKind::SJJ && params.coupling == 0.0;
}

TridiagonalHamiltonian::TridiagonalHamiltonian(std::vector<double> diag, std::vector<double> offdiag,
                                               TwoModeParams params)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)), params_(params) {
    if (params_.n_total < 1) throw DomainError("TridiagonalHamiltonian: n_total must be >= 1");
    const auto n = static_cast<std::size_t>(params_.n_total);
    if (diag_.size() != n + 1 || offdiag_.size() != n)
        throw DomainError("TridiagonalHamiltonian: array lengths do not match n_total");
}

bool TridiagonalHamiltonian::is_mirror_symmetric() const {
    const std::size_t n = offdiag_.size();
    for (std::size_t i = 0; i <= n; ++i)
        if (diag_[i] != diag_[n - i]) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (offdiag_[i] != offdiag_[n - 1 - i]) return false;
    return true;
}

namespace {

double squared_norm(const Amplitudes& amps) {
    double acc = 0.0;
    for (const auto& a : amps) acc += std::norm(a);
    return acc;
}

}  // namespace

FockState::FockState(Amplitudes amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw DomainError("FockState: empty amplitude vector");
    const double norm2 = squared_norm(amps_);
    if (!(std::abs(norm2 - 1.0) <= kNormTolerance))
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", norm2);
        throw DomainError(std::string("FockState: amplitudes not normalized (|A|^2 sum = ") + buf + ")");
    }
}

FockState FockState::normalized(Amplitudes amps) {
    const double norm = std::sqrt(squared_norm(amps));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("FockState: cannot normalize zero vector");
    for (auto& a : amps) a /= norm;
    return FockState(std::move(amps));
}

FockState FockState::from_real(std::span<const double> amps) {
    Amplitudes out(amps.begin(), amps.end());
    return FockState(std::move(out));
}

FockState FockState::number_state(int n_total, int n) {
    if (n_total < 0 || n < 0 || n > n_total) throw DomainError("number_state: index out of range");
    Amplitudes amps(static_cast<std::size_t>(n_total) + 1);
    amps[static_cast<std::size_t>(n)] = 1.0;
    return FockState(std::move(amps));
}

FockState FockState::noon(int n_total, double phase) {
    if (n_total < 1) throw DomainError("noon: n_total must be >= 1");
    Amplitudes amps(static_cast<std::size_t>(n_total) + 1);
    amps.front() = std::numbers::sqrt2 / 2.0;
    amps.back() = std::polar(std::numbers::sqrt2 / 2.0, phase);
    return FockState(std::move(amps));
}

std::vector<double> FockState::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
    return p;
}

TridiagonalHamiltonian build_hamiltonian(const TwoModeParams& params) {
    validate(params);
    const long n_tot = params.n_total;
    const double nd = static_cast<double>(n_tot);
    const double n2 = nd * nd;

    // (2n/N - 1)^2 from the integer (2n - N)^2 keeps the mirror pair bitwise equal.
    auto centered_sq = [&](long n) {
        const double d = static_cast<double>(2 * n - n_tot);
        return d * d / n2;
    };

    std::vector<double> diag(static_cast<std::size_t>(n_tot) + 1);
    for (long n = 0; n <= n_tot; ++n) diag[static_cast<std::size_t>(n)] = -0.5 * params.coupling * centered_sq(n);

    std::vector<double> off(static_cast<std::size_t>(n_tot));
    for (long n = 0; n < n_tot; ++n) {
        double value = 0.0;
        if (params.kind == ModelKind::BJJ) {
            value = -std::sqrt(static_cast<double>((n + 1) * (n_tot - n))) / nd;
        } else {
            const double left = (1.0 - 0.21 * centered_sq(n)) * static_cast<double>(n + 1) *
                                std::sqrt(static_cast<double>((n_tot - n) * (n_tot - n - 1)));
            const double right = (1.0 - 0.21 * centered_sq(n + 1)) * static_cast<double>(n_tot - n) *
                                 std::sqrt(static_cast<double>(n * (n + 1)));
            value = -(left + right) / n2;
        }
        off[static_cast<std::size_t>(n)] = value;
    }
    return TridiagonalHamiltonian(std::move(diag), std::move(off), params);
}

Amplitudes apply_hamiltonian(const TridiagonalHamiltonian& h, std::span<const std::complex<double>> amps) {
    if (amps.size() != h.dim()) throw DomainError("apply_hamiltonian: length mismatch");
    const auto d = h.diag();
    const auto e = h.offdiag();
    const std::size_t n = amps.size();
    Amplitudes out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> acc = d[i] * amps[i];
        if (i + 1 < n) acc += e[i] * amps[i + 1];
        if (i > 0) acc += e[i - 1] * amps[i - 1];
        out[i] = acc;
    }
    return out;
}

Amplitudes apply_hamiltonian(const TridiagonalHamiltonian& h, const FockState& s) {
    return apply_hamiltonian(h, std::span<const std::complex<double>>(s.amps()));
}

double mean_energy(const TridiagonalHamiltonian& h, const FockState& s) {
    const Amplitudes hs = apply_hamiltonian(h, s);
    double acc = 0.0;
    for (std::size_t i = 0; i < hs.size(); ++i) acc += (std::conj(s[i]) * hs[i]).real();
    return acc;
}

}  // namespace sjj
