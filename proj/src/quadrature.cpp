#include "hyperclass/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace hyperclass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

bool same_point(cplx x, cplx y) { return std::abs(x - y) <= 1e-14 * (1.0 + std::abs(x)); }

// Principal argument of x / y.
double rel_arg(cplx x, cplx y) { return std::arg(x * std::conj(y)); }

// log cosh y without overflow.
double log_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2 * a)) - std::numbers::ln2;
}

// (1 ± tanh y)/2 without cancellation.
double half_plus(double y) { return y >= 0 ? 1.0 / (1.0 + std::exp(-2 * y)) : std::exp(2 * y) / (1.0 + std::exp(2 * y)); }
double half_minus(double y) { return half_plus(-y); }

enum class RootAt { general, start, end, center };

struct Node {
    cplx t;
    cplx off_start;  // t − start (finite starts only)
    cplx off_end;    // end − t (finite ends only)
    double dphi = 0; // arcs: φ − φ0, signed
    cplx log_w;      // log(dt/du)
    double s = 0;    // rays: distance from the finite end
};

struct Track {
    RootAt at = RootAt::general;
    double theta = 0;                // segments/rays: value at the anchor
    cplx ref;                        // reference direction at the anchor
    std::vector<double> sub_theta;   // arcs
    std::vector<cplx> sub_ref;
    double theta_out = 0;            // continued argument at the end of the piece
};

struct Prepared {
    const Piece* p;
    cplx dir_start, dir_end;  // directions of travel
    double umax;
    double s_max = 1e300;
    int sub = 1;              // arcs: number of sub-arcs
    std::vector<std::vector<Track>> tracks;  // [factor][root]
};

Node node(const Prepared& pp, double u) {
    const Piece& p = *pp.p;
    Node n;
    const double y = kHalfPi * std::sinh(u);
    const double lc = std::log(kHalfPi * std::cosh(u));
    switch (p.kind) {
        case Piece::Kind::segment: {
            const cplx len = p.b - p.a;
            const double ep = half_plus(y), em = half_minus(y);
            n.off_start = len * ep;
            n.off_end = len * em;
            n.t = ep <= em ? p.a + n.off_start : p.b - n.off_end;
            n.log_w = std::log(len / 2.0) + lc - 2 * log_cosh(y);
            break;
        }
        case Piece::Kind::arc: {
            const double span = p.phi1 - p.phi0;
            const double ep = half_plus(y), em = half_minus(y);
            const double ds = span * ep, de = span * em;
            n.dphi = ds;
            const double phi = ep <= em ? p.phi0 + ds : p.phi1 - de;
            const cplx e = std::polar(1.0, phi);
            n.t = p.center + p.radius * e;
            n.off_start = p.radius * std::polar(1.0, p.phi0) * cplx(0, 2 * std::sin(ds / 2)) * std::polar(1.0, ds / 2);
            n.off_end = p.radius * std::polar(1.0, p.phi1) * cplx(0, 2 * std::sin(de / 2)) * std::polar(1.0, -de / 2);
            n.log_w = std::log(cplx(0, 1) * p.radius * e * (span / 2)) + lc - 2 * log_cosh(y);
            break;
        }
        case Piece::Kind::ray_out: {
            n.s = std::exp(y);
            n.off_start = p.dir * n.s;
            n.t = p.a + n.off_start;
            n.log_w = std::log(p.dir) + lc + y;
            break;
        }
        case Piece::Kind::ray_in: {
            n.s = std::exp(y);
            n.off_end = -p.dir * n.s;
            n.t = p.b - n.off_end;
            n.log_w = std::log(-p.dir) + lc + y;
            break;
        }
    }
    return n;
}

// t − r at a node, exact when r is an endpoint or the center.
cplx offset(const Prepared& pp, const Track& tr, cplx r, const Node& n) {
    const Piece& p = *pp.p;
    switch (tr.at) {
        case RootAt::start: return n.off_start;
        case RootAt::end: return -n.off_end;
        case RootAt::center: return n.t - p.center;
        case RootAt::general: break;
    }
    switch (p.kind) {
        case Piece::Kind::ray_out: return (p.a - r) + n.off_start;
        case Piece::Kind::ray_in: return (p.b - r) - n.off_end;
        default:
            return std::abs(n.off_start) <= std::abs(n.off_end) ? (p.a - r) + n.off_start : (p.b - r) - n.off_end;
    }
}

double theta_at(const Prepared& pp, const Track& tr, cplx d, const Node& n) {
    const Piece& p = *pp.p;
    if (p.kind != Piece::Kind::arc) return tr.theta + rel_arg(d, tr.ref);
    if (tr.at == RootAt::center) return tr.theta + n.dphi;
    const double step = std::abs(p.phi1 - p.phi0) / pp.sub;
    int k = static_cast<int>(std::abs(n.dphi) / step);
    k = std::clamp(k, 0, pp.sub - 1);
    return tr.sub_theta[k] + rel_arg(d, tr.sub_ref[k]);
}

bool on_segment(cplx a, cplx b, cplx r) {
    const cplx q = (r - a) / (b - a);
    return std::abs(q.imag()) <= 1e-14 && q.real() > 0 && q.real() < 1;
}

// theta_in: continued argument of (t − r) arriving at the piece start (for
// r at the start: of the direction back along the previous piece). For the
// first piece nothing arrives and the principal argument is used.
Track make_track(const Prepared& pp, cplx r, std::optional<double> theta_in, std::optional<double> turn) {
    const Piece& p = *pp.p;
    Track tr;
    const bool has_start = p.kind != Piece::Kind::ray_in;
    const bool has_end = p.kind != Piece::Kind::ray_out;
    if (p.kind == Piece::Kind::arc && same_point(r, p.center)) tr.at = RootAt::center;
    else if (has_start && same_point(r, p.start())) tr.at = RootAt::start;
    else if (has_end && same_point(r, p.end())) tr.at = RootAt::end;

    // Argument at the start (or at the end for a ray coming from infinity).
    double theta0;
    cplx ref0;
    if (p.kind == Piece::Kind::ray_in) {
        ref0 = tr.at == RootAt::end ? p.dir : p.b - r;
        theta0 = std::arg(ref0);
    } else if (tr.at == RootAt::start) {
        ref0 = pp.dir_start;
        if (theta_in) {
            // theta_in refers to the backward direction −dir_end of the previous piece.
            theta0 = *theta_in + (turn ? *turn : 0.0);
            if (!turn) throw PreconditionError("quadrature: internal turn handling");
        } else {
            theta0 = std::arg(ref0);
        }
    } else {
        ref0 = p.start() - r;
        theta0 = theta_in ? *theta_in : std::arg(ref0);
    }

    if (p.kind == Piece::Kind::segment && tr.at == RootAt::general && on_segment(p.a, p.b, r))
        throw PreconditionError("quadrature: integrand root on the interior of a segment");
    if ((p.kind == Piece::Kind::ray_out || p.kind == Piece::Kind::ray_in) && tr.at == RootAt::general) {
        const cplx base = p.kind == Piece::Kind::ray_out ? p.a : p.b;
        const cplx q = (r - base) / p.dir;
        if (std::abs(q.imag()) <= 1e-14 * (1 + std::abs(q)) && q.real() > 0)
            throw PreconditionError("quadrature: integrand root on a ray");
    }

    if (p.kind != Piece::Kind::arc) {
        tr.theta = theta0;
        tr.ref = ref0;
        if (p.kind == Piece::Kind::segment) {
            const cplx d_end = tr.at == RootAt::end ? -pp.dir_end : p.b - r;
            tr.theta_out = tr.at == RootAt::start ? theta0 : theta0 + rel_arg(d_end, ref0);
        } else {
            tr.theta_out = theta0;
        }
        return tr;
    }

    tr.theta = theta0;
    if (tr.at == RootAt::center) {
        tr.theta_out = theta0 + (p.phi1 - p.phi0);
        return tr;
    }
    const double span = p.phi1 - p.phi0;
    const double step = span / pp.sub;
    tr.sub_theta = {theta0};
    tr.sub_ref = {ref0};
    auto d_at = [&](double dphi) {
        const cplx off = p.radius * std::polar(1.0, p.phi0) * cplx(0, 2 * std::sin(dphi / 2)) * std::polar(1.0, dphi / 2);
        if (tr.at == RootAt::start) return off;
        return (p.a - r) + off;
    };
    for (int k = 1; k < pp.sub; ++k) {
        const cplx d = d_at(step * k);
        if (std::abs(d) <= 1e-14 * (1 + std::abs(r))) throw PreconditionError("quadrature: integrand root on an arc");
        tr.sub_theta.push_back(tr.sub_theta.back() + rel_arg(d, tr.sub_ref.back()));
        tr.sub_ref.push_back(d);
    }
    const cplx d_end = tr.at == RootAt::end ? -pp.dir_end : p.b - r;
    tr.theta_out = tr.sub_theta.back() + rel_arg(d_end, tr.sub_ref.back());
    return tr;
}

}  // namespace

Piece Piece::segment(cplx from, cplx to) {
    if (from == to) throw PreconditionError("quadrature: empty segment");
    Piece p{Kind::segment, from, to, (to - from) / std::abs(to - from), 0.0};
    return p;
}

Piece Piece::ray_in(cplx dir, cplx to) {
    Piece p{Kind::ray_in, to, to, dir / std::abs(dir), 0.0};
    return p;
}

Piece Piece::ray_out(cplx from, cplx dir) {
    Piece p{Kind::ray_out, from, from, dir / std::abs(dir), 0.0};
    return p;
}

Piece Piece::arc(cplx center, double radius, double phi0, double phi1) {
    if (radius <= 0 || phi0 == phi1) throw PreconditionError("quadrature: degenerate arc");
    Piece p{Kind::arc, center + std::polar(radius, phi0), center + std::polar(radius, phi1), 0.0, center};
    p.radius = radius;
    p.phi0 = phi0;
    p.phi1 = phi1;
    return p;
}

cplx Piece::start() const { return a; }
cplx Piece::end() const { return b; }

Contour& Contour::add(const Piece& p) {
    if (!pieces_.empty()) {
        const Piece& last = pieces_.back();
        if (last.kind == Piece::Kind::ray_out) throw PreconditionError("quadrature: nothing may follow a ray to infinity");
        if (p.kind == Piece::Kind::ray_in) throw PreconditionError("quadrature: a ray from infinity must come first");
        if (!same_point(last.end(), p.start())) throw PreconditionError("quadrature: pieces do not join");
    }
    pieces_.push_back(p);
    turns_.push_back(pending_);
    pending_.clear();
    return *this;
}

Contour& Contour::turn(cplx root, double delta) {
    pending_.emplace_back(root, delta);
    return *this;
}

Contour Contour::segment(cplx a, cplx b) { return Contour().add(Piece::segment(a, b)); }
Contour Contour::ray(cplx from, cplx dir) { return Contour().add(Piece::ray_out(from, dir)); }
Contour Contour::from_infinity(cplx dir, cplx to) { return Contour().add(Piece::ray_in(dir, to)); }

Contour Contour::hankel(cplx center, double r) {
    const cplx left = center - r;
    return Contour()
        .add(Piece::ray_in(-1.0, left))
        .add(Piece::arc(center, r, -kPi, kPi))
        .add(Piece::ray_out(left, -1.0));
}

QuadResult integrate(const Integrand& f, const Contour& c, const QuadOptions& opt) {
    const auto& pieces = c.pieces();
    if (pieces.empty()) throw PreconditionError("quadrature: empty contour");
    if (f.constant == 0.0) return {0.0, 0.0, 0, 0, std::vector<cplx>(c.pieces().size(), 0.0)};

    // Geometry and phase bookkeeping per piece.
    std::vector<Prepared> prep(pieces.size());
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& p = pieces[i];
        Prepared& pp = prep[i];
        pp.p = &p;
        switch (p.kind) {
            case Piece::Kind::segment: pp.dir_start = pp.dir_end = p.dir; break;
            case Piece::Kind::ray_out: pp.dir_start = pp.dir_end = p.dir; break;
            case Piece::Kind::ray_in: pp.dir_start = pp.dir_end = -p.dir; break;
            case Piece::Kind::arc: {
                const double sg = p.phi1 > p.phi0 ? 1.0 : -1.0;
                pp.dir_start = cplx(0, sg) * std::polar(1.0, p.phi0);
                pp.dir_end = cplx(0, sg) * std::polar(1.0, p.phi1);
                pp.sub = std::max(1, static_cast<int>(std::ceil(std::abs(p.phi1 - p.phi0) / (kPi / 4) - 1e-12)));
                break;
            }
        }
        // Offsets reach 1e−300 of the piece size at the singular ends; rays span s ∈ [1e−300, 1e300].
        const bool ray = p.kind == Piece::Kind::ray_in || p.kind == Piece::Kind::ray_out;
        pp.umax = std::asinh((ray ? 690.0 : 345.4) / kHalfPi);
        if (ray) {
            const cplx d = p.kind == Piece::Kind::ray_out ? p.dir : p.dir;
            const double q2 = (f.c2 * d * d).real();
            const double base = 4.0 * (1.0 + std::abs(p.a));
            if (f.c2 != 0.0 && q2 < 0) pp.s_max = base + std::sqrt(1600.0 / -q2);
            else if (f.c2 == 0.0 && (f.c1 * d).real() < 0) pp.s_max = base + 1600.0 / -(f.c1 * d).real();
        }
    }
    for (size_t i = 0; i < pieces.size(); ++i) {
        Prepared& pp = prep[i];
        pp.tracks.resize(f.factors.size());
        for (size_t k = 0; k < f.factors.size(); ++k) {
            for (size_t j = 0; j < f.factors[k].roots.size(); ++j) {
                const cplx r = f.factors[k].roots[j];
                std::optional<double> theta_in, turn;
                if (i > 0) {
                    const Track& prev = prep[i - 1].tracks[k][j];
                    theta_in = prev.theta_out;
                    if (same_point(r, pieces[i].start())) {
                        for (const auto& [root, delta] : c.turns()[i])
                            if (same_point(root, r)) turn = delta;
                        if (!turn) {
                            const double d = rel_arg(prep[i].dir_start, -prep[i - 1].dir_end);
                            if (std::abs(d) > kPi - 1e-9)
                                throw PreconditionError("quadrature: contour reverses through a root; give the turn");
                            turn = d;
                        }
                    }
                }
                pp.tracks[k].push_back(make_track(pp, r, theta_in, turn));
            }
        }
    }

    // Branches fixed at the reference point (u = 0 on the first piece).
    const Node ref = node(prep[0], 0.0);
    std::vector<cplx> log_ref(f.factors.size());
    std::vector<std::vector<cplx>> d_ref(f.factors.size());
    std::vector<std::vector<double>> th_ref(f.factors.size());
    for (size_t k = 0; k < f.factors.size(); ++k) {
        const Factor& fa = f.factors[k];
        cplx q = fa.scale;
        for (size_t j = 0; j < fa.roots.size(); ++j) {
            const cplx d = offset(prep[0], prep[0].tracks[k][j], fa.roots[j], ref);
            d_ref[k].push_back(d);
            th_ref[k].push_back(theta_at(prep[0], prep[0].tracks[k][j], d, ref));
            q *= d;
        }
        cplx L = std::log(q);
        if (fa.arg_near) L += cplx(0, 2 * kPi * std::round((*fa.arg_near - L.imag()) / (2 * kPi)));
        log_ref[k] = L + cplx(0, 2 * kPi * fa.sheet);
    }
    const cplx log_const = std::log(f.constant);

    int evaluations = 0;
    auto term = [&](const Prepared& pp, double u) -> cplx {
        const Node n = node(pp, u);
        if (pp.s_max < 1e300 && n.s > pp.s_max) return 0.0;
        ++evaluations;
        cplx L = log_const + n.log_w + f.c0 + f.c1 * n.t + f.c2 * n.t * n.t;
        if (f.cm1 != 0.0) L += f.cm1 / n.t;
        for (size_t k = 0; k < f.factors.size(); ++k) {
            const Factor& fa = f.factors[k];
            cplx lk = log_ref[k];
            for (size_t j = 0; j < fa.roots.size(); ++j) {
                const Track& tr = pp.tracks[k][j];
                const cplx d = offset(pp, tr, fa.roots[j], n);
                lk += cplx(std::log(std::abs(d) / std::abs(d_ref[k][j])), theta_at(pp, tr, d, n) - th_ref[k][j]);
            }
            L += fa.exponent * lk;
        }
        if (std::isnan(L.real()) || std::isnan(L.imag())) {
            if (L.real() == -INFINITY) return 0.0;
            throw ConvergenceError("quadrature: integrand is not finite", 0.0, INFINITY);
        }
        if (L.real() < -745) return 0.0;
        if (L.real() > 709) throw ConvergenceError("quadrature: integrand overflows", 0.0, INFINITY);
        return std::exp(L);
    };

    const size_t np = pieces.size();
    std::vector<cplx> sum(np, 0.0), cur(np, 0.0), prev(np, 0.0);
    std::vector<double> abs_sum(np, 0.0);
    std::vector<double> err(np, INFINITY);
    std::vector<bool> done(np, false);
    int level = 0;
    for (; level <= opt.max_level; ++level) {
        const double h = std::ldexp(1.0, -level);
        for (size_t i = 0; i < np; ++i) {
            if (done[i]) continue;
            const double umax = prep[i].umax;
            const long jmax = static_cast<long>(std::floor(umax / h));
            for (long j = -jmax; j <= jmax; ++j) {
                if (level > 0 && j % 2 == 0) continue;
                const cplx v = term(prep[i], j * h);
                sum[i] += v;
                abs_sum[i] += std::abs(v);
            }
            prev[i] = cur[i];
            cur[i] = sum[i] * h;
            if (level > 0) err[i] = std::abs(cur[i] - prev[i]);
        }
        double scale = 0;
        for (size_t i = 0; i < np; ++i) scale += abs_sum[i] * h;
        bool all = true;
        for (size_t i = 0; i < np; ++i) {
            if (!done[i] && level >= opt.min_level && err[i] <= opt.tol * scale) done[i] = true;
            all = all && done[i];
        }
        if (all) break;
    }
    QuadResult r{0.0, 0.0, evaluations, std::min(level, opt.max_level), {}};
    bool ok = true;
    for (size_t i = 0; i < np; ++i) {
        r.value += cur[i];
        r.error += err[i];
        r.pieces.push_back(cur[i]);
        ok = ok && done[i];
    }
    if (!ok) throw ConvergenceError("quadrature: tolerance not reached", r.value, r.error);
    return r;
}

}  // namespace hyperclass
