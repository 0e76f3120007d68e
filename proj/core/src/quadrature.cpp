#include "shockmetrics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "shockmetrics/errors.hpp"

namespace shockmetrics {

namespace {

constexpr double kGl7X[7] = {
    -0.94910791234275852453, -0.74153118559939443986, -0.40584515137739716691,
    0.0,
    0.40584515137739716691,  0.74153118559939443986,  0.94910791234275852453,
};
constexpr double kGl7W[7] = {
    0.12948496616886969327, 0.2797053914892766679, 0.38183005050511894495,
    0.41795918367346938776,
    0.38183005050511894495, 0.2797053914892766679, 0.12948496616886969327,
};

constexpr double kGl15X[15] = {
    -0.98799251802048542849, -0.93727339240070590431, -0.8482065834104272162,
    -0.72441773136017004742, -0.57097217260853884754, -0.3941513470775633699,
    -0.2011940939974345223,  0.0,                     0.2011940939974345223,
    0.3941513470775633699,   0.57097217260853884754,  0.72441773136017004742,
    0.8482065834104272162,   0.93727339240070590431,  0.98799251802048542849,
};
constexpr double kGl15W[15] = {
    0.030753241996117268355, 0.070366047488108124709, 0.10715922046717193501,
    0.13957067792615431445,  0.16626920581699393355,  0.18616100001556221103,
    0.19843148532711157646,  0.20257824192556127288,  0.19843148532711157646,
    0.18616100001556221103,  0.16626920581699393355,  0.13957067792615431445,
    0.10715922046717193501,  0.070366047488108124709, 0.030753241996117268355,
};

constexpr double kGl64X[64] = {
    -0.99930504173577213946, -0.99634011677195527935, -0.99101337147674432074,
    -0.98333625388462595693, -0.97332682778991096374, -0.96100879965205371892,
    -0.94641137485840281606, -0.92956917213193957582, -0.91052213707850280576,
    -0.88931544599511410585, -0.86599939815409281976, -0.84062929625258036275,
    -0.81326531512279755974, -0.78397235894334140761, -0.75281990726053189661,
    -0.71988185017161082685, -0.68523631305423324256, -0.64896547125465733986,
    -0.61115535517239325025, -0.57189564620263403428, -0.53127946401989454566,
    -0.48940314570705295748, -0.44636601725346408798, -0.4022701579639916037,
    -0.35722015833766811595, -0.31132287199021095616, -0.26468716220876741637,
    -0.21742364374000708415, -0.16964442042399281804, -0.12146281929612055447,
    -0.07299312178779903945, -0.024350292663424432509, 0.024350292663424432509,
    0.07299312178779903945,  0.12146281929612055447,  0.16964442042399281804,
    0.21742364374000708415,  0.26468716220876741637,  0.31132287199021095616,
    0.35722015833766811595,  0.4022701579639916037,   0.44636601725346408798,
    0.48940314570705295748,  0.53127946401989454566,  0.57189564620263403428,
    0.61115535517239325025,  0.64896547125465733986,  0.68523631305423324256,
    0.71988185017161082685,  0.75281990726053189661,  0.78397235894334140761,
    0.81326531512279755974,  0.84062929625258036275,  0.86599939815409281976,
    0.88931544599511410585,  0.91052213707850280576,  0.92956917213193957582,
    0.94641137485840281606,  0.96100879965205371892,  0.97332682778991096374,
    0.98333625388462595693,  0.99101337147674432074,  0.99634011677195527935,
    0.99930504173577213946,
};
constexpr double kGl64W[64] = {
    0.0017832807216964329473, 0.0041470332605624676353, 0.0065044579689783628561,
    0.008846759826363947723,  0.011168139460131128819,  0.013463047896718642598,
    0.015726030476024719322,  0.017951715775697343085,  0.020134823153530209372,
    0.022270173808383254159,  0.024352702568710873338,  0.026377469715054658672,
    0.028339672614259483228,  0.030234657072402478868,  0.032057928354851553585,
    0.033805161837141609392,  0.035472213256882383811,  0.03705512854024004604,
    0.038550153178615629129,  0.039953741132720341387,  0.04126256324262352861,
    0.042473515123653589007,  0.043583724529323453377,  0.04459055816375656306,
    0.04549162792741814448,   0.046284796581314417296,  0.046968182816210017325,
    0.047540165714830308662,  0.047999388596458307728,  0.04834476223480295717,
    0.048575467441503426935,  0.048690957009139720383,  0.048690957009139720383,
    0.048575467441503426935,  0.04834476223480295717,   0.047999388596458307728,
    0.047540165714830308662,  0.046968182816210017325,  0.046284796581314417296,
    0.04549162792741814448,   0.04459055816375656306,   0.043583724529323453377,
    0.042473515123653589007,  0.04126256324262352861,   0.039953741132720341387,
    0.038550153178615629129,  0.03705512854024004604,   0.035472213256882383811,
    0.033805161837141609392,  0.032057928354851553585,  0.030234657072402478868,
    0.028339672614259483228,  0.026377469715054658672,  0.024352702568710873338,
    0.022270173808383254159,  0.020134823153530209372,  0.017951715775697343085,
    0.015726030476024719322,  0.013463047896718642598,  0.011168139460131128819,
    0.008846759826363947723,  0.0065044579689783628561, 0.0041470332605624676353,
    0.0017832807216964329473,
};

struct PanelResult {
    double value;
    double error;
};

// One panel: 15-point value, error estimated against the 7-point rule.
PanelResult eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double v15 = 0.0;
    for (int i = 0; i < 15; ++i) v15 += kGl15W[i] * f(mid + half * kGl15X[i]);
    v15 *= half;
    double v7 = 0.0;
    for (int i = 0; i < 7; ++i) v7 += kGl7W[i] * f(mid + half * kGl7X[i]);
    v7 *= half;
    return {v15, std::fabs(v15 - v7)};
}

struct Panel {
    double a, b;
    double value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double abs_tol) {
    if (!(b > a)) return 0.0;
    constexpr int kMaxPanels = 4000;
    std::priority_queue<Panel> heap;
    PanelResult first = eval_panel(f, a, b);
    heap.push({a, b, first.value, first.error});
    double total_value = first.value;
    double total_error = first.error;
    int panels = 1;
    while (total_error > abs_tol && panels < kMaxPanels) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval narrower than double spacing, cannot split further
            heap.push(worst);
            break;
        }
        PanelResult left = eval_panel(f, worst.a, mid);
        PanelResult right = eval_panel(f, mid, worst.b);
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push({worst.a, mid, left.value, left.error});
        heap.push({mid, worst.b, right.value, right.error});
        ++panels;
    }
    if (total_error > abs_tol)
        throw non_convergence("integrate_finite: error estimate " + std::to_string(total_error) +
                                  " above tolerance " + std::to_string(abs_tol),
                              total_value, total_error);
    return total_value;
}

double integrate_survival(const std::function<double(double)>& f, double abs_tol) {
    constexpr double kCut = 1e-13;
    // Find a cut point where the integrand has decayed below kCut and keeps
    // decaying geometrically (so the discarded tail admits a bound).
    double t_cut = 1.0;
    double f_cut = f(t_cut);
    int doublings = 0;
    while ((f_cut >= kCut || f(2.0 * t_cut) > 0.5 * f_cut) && doublings < 120) {
        t_cut *= 2.0;
        f_cut = f(t_cut);
        ++doublings;
    }
    if (doublings >= 120)
        throw non_convergence("integrate_survival: integrand does not decay", 0.0,
                              std::numeric_limits<double>::infinity());
    // Geometric tail bound: f(t) <= f_cut * rho^{(t - t_cut)/t_cut} with
    // rho = f(2 t_cut)/f_cut <= 1/2, so the tail mass is at most
    // f_cut * t_cut / ln(1/rho) <= f_cut * t_cut / ln 2.
    const double tail_bound = f_cut * t_cut / std::log(2.0);

    const double u_cut = t_cut / (1.0 + t_cut);
    auto g = [&f](double u) {
        const double om = 1.0 - u;
        const double t = u / om;
        return f(t) / (om * om);
    };
    double value;
    try {
        value = integrate_finite(g, 0.0, u_cut, std::max(abs_tol - tail_bound, 0.1 * abs_tol));
    } catch (const non_convergence& e) {
        throw non_convergence(std::string("integrate_survival: ") + e.what(), e.partial_value,
                              e.error_estimate + tail_bound);
    }
    if (tail_bound > abs_tol)
        throw non_convergence("integrate_survival: tail bound " + std::to_string(tail_bound) +
                                  " above tolerance",
                              value, tail_bound);
    return value;
}

double gauss_legendre_64(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 64; ++i) acc += kGl64W[i] * f(mid + half * kGl64X[i]);
    return acc * half;
}

std::vector<std::pair<double, double>> gauss_legendre_64_nodes(double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<std::pair<double, double>> nw;
    nw.reserve(64);
    for (int i = 0; i < 64; ++i)
        nw.emplace_back(mid + half * kGl64X[i], half * kGl64W[i]);
    return nw;
}

}  // namespace shockmetrics
