#include "nilfold/dynamics.hpp"

#include <cmath>

namespace nilfold {
namespace dynamics {

namespace {

struct Field {
    std::array<PolyD, 4> grad;
    Vec4 operator()(const Vec4& x) const {
        // Omega grad H: qdot_i = dH/dp_i, pdot_i = -dH/dq_i
        return {grad[2].eval(x), grad[3].eval(x), -grad[0].eval(x), -grad[1].eval(x)};
    }
};

Field make_field(const PolyD& H) {
    Field f;
    for (int i = 0; i < 4; ++i) f.grad[i] = H.derivative(i);
    return f;
}

bool state_ok(const Vec4& x) {
    for (double v : x)
        if (!std::isfinite(v) || std::abs(v) > 10.0) return false;
    return true;
}

Vec4 axpy(const Vec4& x, const Vec4& d, double s) {
    return {x[0] + s * d[0], x[1] + s * d[1], x[2] + s * d[2], x[3] + s * d[3]};
}

// splits H into (V(q), T(p)); false when some term mixes q and p variables
bool separable_split(const PolyD& H, PolyD& V, PolyD& T) {
    for (const auto& [m, c] : H.terms()) {
        bool has_q = m.e[0] + m.e[1] > 0;
        bool has_p = m.e[2] + m.e[3] > 0;
        if (has_q && has_p) return false;
        if (has_p)
            T.add_term(m, c);
        else
            V.add_term(m, c);
    }
    return true;
}

}  // namespace

Trajectory integrate(const PolyD& H, const Vec4& x0, double dt, double T, Method method) {
    if (dt <= 0 || T < dt) throw std::invalid_argument("integrate: need dt > 0 and T >= dt");
    Trajectory out;
    Field field = make_field(H);

    PolyD Vq, Tp;
    bool leapfrog = method == Method::LeapfrogSplit;
    if (leapfrog && !separable_split(H, Vq, Tp)) {
        leapfrog = false;
        out.fell_back_to_rk4 = true;
    }
    out.method_used = leapfrog ? Method::LeapfrogSplit : Method::Rk4;

    std::array<PolyD, 2> dV{}, dT{};
    if (leapfrog) {
        dV = {Vq.derivative(0), Vq.derivative(1)};
        dT = {Tp.derivative(2), Tp.derivative(3)};
    }

    const auto steps = static_cast<std::size_t>(std::llround(T / dt));
    Vec4 x = x0;
    out.times.reserve(steps + 1);
    out.states.reserve(steps + 1);
    out.energies.reserve(steps + 1);
    auto record = [&](double t) {
        out.times.push_back(t);
        out.states.push_back(x);
        out.energies.push_back(H.eval(x));
    };
    record(0.0);
    for (std::size_t s = 1; s <= steps; ++s) {
        if (leapfrog) {
            // kick-drift-kick
            x[2] -= 0.5 * dt * dV[0].eval(x);
            x[3] -= 0.5 * dt * dV[1].eval(x);
            x[0] += dt * dT[0].eval(x);
            x[1] += dt * dT[1].eval(x);
            x[2] -= 0.5 * dt * dV[0].eval(x);
            x[3] -= 0.5 * dt * dV[1].eval(x);
        } else {
            Vec4 k1 = field(x);
            Vec4 k2 = field(axpy(x, k1, 0.5 * dt));
            Vec4 k3 = field(axpy(x, k2, 0.5 * dt));
            Vec4 k4 = field(axpy(x, k3, dt));
            for (int i = 0; i < 4; ++i)
                x[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
        }
        if (!state_ok(x)) {
            out.escaped = true;
            break;
        }
        record(dt * static_cast<double>(s));
    }
    return out;
}

double equilibrium_residual(const PolyD& H, const Vec4& x) {
    Field f = make_field(H);
    Vec4 v = f(x);
    double r = 0;
    for (double c : v) r = std::max(r, std::abs(c));
    return r;
}

PolyD example1_hamiltonian(double mu) {
    PolyD h = PolyD::monomial(mono(0, 0, 2, 0), 0.5);
    h.add_term(mono(3, 0, 0, 0), -1.0 / 3.0);
    h.add_term(mono(1, 0, 0, 0), mu);
    return h;
}

PolyD example2_hamiltonian(double mu) {
    PolyD h = PolyD::monomial(mono(1, 0, 0, 1), 1.0);
    h.add_term(mono(0, 1, 1, 0), -1.0);
    h.add_term(mono(2, 0, 0, 0), 0.5);
    h.add_term(mono(0, 2, 0, 0), 0.5);
    h.add_term(mono(0, 0, 2, 0), 0.5 * mu);
    h.add_term(mono(0, 0, 0, 2), 0.5 * mu);
    return h;
}

}  // namespace dynamics
}  // namespace nilfold
