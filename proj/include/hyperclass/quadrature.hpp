#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperclass/errors.hpp"

namespace hyperclass {

/// (scale · Π_j (t − roots[j]))^exponent. The branch is fixed at the first
/// piece's reference point (principal Log plus 2πi·sheet, or the branch whose
/// argument is nearest `arg_near`) and continued along the contour.
struct Factor {
    Factor(cplx scale, std::vector<cplx> roots, cplx exponent, int sheet = 0, std::optional<double> arg_near = {})
        : scale(scale), roots(std::move(roots)), exponent(exponent), sheet(sheet), arg_near(arg_near) {}

    cplx scale = 1.0;
    std::vector<cplx> roots;
    cplx exponent = 1.0;
    int sheet = 0;
    std::optional<double> arg_near;
};

/// constant · Π factors · exp(c0 + c1 t + c2 t² + cm1/t).
struct Integrand {
    std::vector<Factor> factors;
    cplx c0 = 0.0, c1 = 0.0, c2 = 0.0, cm1 = 0.0;
    cplx constant = 1.0;
};

struct Piece {
    enum class Kind { segment, ray_in, ray_out, arc };
    Kind kind;
    cplx a, b;         // finite endpoints (ray_in: b only; ray_out: a only)
    cplx dir;          // rays: unit direction pointing away from the finite end
    cplx center;       // arcs
    double radius = 0, phi0 = 0, phi1 = 0;

    static Piece segment(cplx from, cplx to);
    // From infinity along −dir into `to`.
    static Piece ray_in(cplx dir, cplx to);
    // From `from` to infinity along dir.
    static Piece ray_out(cplx from, cplx dir);
    static Piece arc(cplx center, double radius, double phi0, double phi1);

    cplx start() const;
    cplx end() const;
};

/// Oriented chain of pieces. A ray_in may only come first and a ray_out last.
class Contour {
public:
    Contour& add(const Piece& p);
    // Phase turn of (t − root) at the junction before the next added piece:
    // −π passes the root clockwise (above, when moving right along the real axis).
    Contour& turn(cplx root, double delta);

    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<std::vector<std::pair<cplx, double>>>& turns() const { return turns_; }

    // Common shapes.
    static Contour segment(cplx a, cplx b);
    static Contour ray(cplx from, cplx dir);
    static Contour from_infinity(cplx dir, cplx to);
    // Loop from −∞ below the negative axis, around the circle |t − center| = r
    // counterclockwise, back to −∞ above the axis.
    static Contour hankel(cplx center, double r);

private:
    std::vector<Piece> pieces_;
    std::vector<std::vector<std::pair<cplx, double>>> turns_;
    std::vector<std::pair<cplx, double>> pending_;
};

struct QuadResult {
    cplx value;
    double error = 0;   // |I_k − I_{k−1}| summed over pieces
    int evaluations = 0;
    int level = 0;      // finest level used, step 2^{−level}
    std::vector<cplx> pieces;  // value over each piece
};

struct QuadOptions {
    double tol = 1e-11;  // relative to ∫|f| over the whole contour
    int min_level = 3;
    int max_level = 10;
};

// Double-exponential quadrature: tanh-sinh on segments and arcs, exp-sinh on
// rays. Throws ConvergenceError (with the best value) when tol is not met by
// max_level, and PreconditionError for a root on the interior of a piece or an
// ambiguous phase at a junction.
QuadResult integrate(const Integrand& f, const Contour& c, const QuadOptions& opt = {});

}  // namespace hyperclass
