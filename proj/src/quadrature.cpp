#include "zetadet/quadrature.hpp"

#include "zetadet/errors.hpp"

#include <cmath>

namespace zetadet {

namespace {

struct Workspace {
    const std::function<Real(const Real&)>& f;
    double tol;
    int max_depth;
};

Real simpson(const Real& fa, const Real& fm, const Real& fb, const Real& h) {
    return h * (fa + Real(4L) * fm + fb) / 6;
}

Real recurse(Workspace& ws, const Real& a, const Real& b, const Real& fa, const Real& fm, const Real& fb,
             const Real& whole, double tol, int depth, double& err_acc) {
    Real m = (a + b) / 2;
    Real lm = (a + m) / 2;
    Real rm = (m + b) / 2;
    Real flm = ws.f(lm);
    Real frm = ws.f(rm);
    Real h = b - a;
    Real left = simpson(fa, flm, fm, h / 2);
    Real right = simpson(fm, frm, fb, h / 2);
    Real delta = left + right - whole;
    const double est = std::fabs(delta.to_double()) / 15.0;
    if (est <= tol || depth >= ws.max_depth) {
        if (depth >= ws.max_depth && est > tol)
            throw convergence_error("integrate_adaptive: max depth reached", (left + right).str(25), est);
        err_acc += est + std::fabs((left + right).to_double()) * 1e-30;
        return left + right + delta / 15;
    }
    double e1 = 0, e2 = 0;
    Real vl = recurse(ws, a, m, fa, flm, fm, left, tol / 2, depth + 1, e1);
    Real vr = recurse(ws, m, b, fm, frm, fb, right, tol / 2, depth + 1, e2);
    err_acc += e1 + e2;
    return vl + vr;
}

} // namespace

NumValue integrate_adaptive(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                            double target_abs_err, int max_depth) {
    if (!(target_abs_err > 0)) throw domain_error("integrate_adaptive: tolerance must be positive");
    if (a == b) return {Real(0L), 0.0};
    Workspace ws{f, target_abs_err, max_depth};
    Real fa = f(a);
    Real fb = f(b);
    Real m = (a + b) / 2;
    Real fm = f(m);
    Real whole = simpson(fa, fm, fb, b - a);
    double err = 0;
    Real v = recurse(ws, a, b, fa, fm, fb, whole, target_abs_err / 4, 0, err);
    return {std::move(v), err};
}

} // namespace zetadet
