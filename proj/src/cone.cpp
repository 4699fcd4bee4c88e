#include "grcone/cone.hpp"

#include "grcone/errors.hpp"

#include <string>
#include <utility>

namespace grcone {

namespace {

std::string describe(const NSClass& x) {
    return "(" + format_rational(x.eta) + ", " + format_rational(x.fiber) + ")";
}

} // namespace

NSClass operator+(const NSClass& a, const NSClass& b) {
    return NSClass{a.eta + b.eta, a.fiber + b.fiber};
}

NSClass operator*(const Rational& scale, const NSClass& x) {
    return NSClass{scale * x.eta, scale * x.fiber};
}

Ray::Ray(Int eta, Int fiber) : eta_(std::move(eta)), fiber_(std::move(fiber)) {
    using boost::multiprecision::gcd;
    if (eta_ == 0 && fiber_ == 0) {
        throw ValidationError("ray direction cannot be zero");
    }
    if (eta_ < 0 || (eta_ == 0 && fiber_ != 1)) {
        throw ValidationError("ray (" + eta_.str() + ", " + fiber_.str() +
                              ") violates the normalization: eta > 0, or (0, 1)");
    }
    if (eta_ > 0 && gcd(eta_, abs(fiber_)) != 1) {
        throw ValidationError("ray (" + eta_.str() + ", " + fiber_.str() +
                              ") is not primitive");
    }
}

Ray Ray::from_class(const NSClass& direction) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    if (direction.eta == 0 && direction.fiber == 0) {
        throw ValidationError("ray direction cannot be zero");
    }
    const Int common = lcm(denominator(direction.eta), denominator(direction.fiber));
    Int u = numerator(direction.eta) * (common / denominator(direction.eta));
    Int v = numerator(direction.fiber) * (common / denominator(direction.fiber));
    const Int g = gcd(abs(u), abs(v));
    u /= g;
    v /= g;
    if (u < 0 || (u == 0 && v < 0)) {
        throw ValidationError("ray direction " + describe(direction) +
                              " points outside the supported half-plane (eta >= 0)");
    }
    return Ray(std::move(u), std::move(v));
}

NSClass Ray::as_class() const { return NSClass{Rational(eta_), Rational(fiber_)}; }

Cone2D::Cone2D(Ray a, Ray b) : a_(std::move(a)), b_(std::move(b)) {
    const Int det = a_.eta() * b_.fiber() - b_.eta() * a_.fiber();
    if (det == 0) {
        throw ValidationError("cone rays must be linearly independent");
    }
}

bool operator==(const Cone2D& lhs, const Cone2D& rhs) {
    return (lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_) ||
           (lhs.a_ == rhs.b_ && lhs.b_ == rhs.a_);
}

Cone2D pseff_cone(const BundleDescriptor& b, int r) {
    const int n = b.total_rank();
    if (r < 1 || r > n - 1) {
        throw RangeError("r = " + std::to_string(r) + " is outside the Grassmann range 1.." +
                         std::to_string(n - 1));
    }
    const Rational lambda = b.lambda(r);
    return Cone2D(Ray(0, 1), Ray::from_class(NSClass{Rational(1), -lambda}));
}

namespace {

// Coordinates of x in the ray basis; exact, det != 0 by the cone invariant.
struct RayCoordinates {
    Rational along_a;
    Rational along_b;
};

RayCoordinates solve(const Cone2D& c, const NSClass& x) {
    const Ray& a = c.ray_a();
    const Ray& b = c.ray_b();
    const Rational det = Rational(a.eta() * b.fiber() - b.eta() * a.fiber());
    const Rational s = (x.eta * Rational(b.fiber()) - Rational(b.eta()) * x.fiber) / det;
    const Rational t = (Rational(a.eta()) * x.fiber - x.eta * Rational(a.fiber())) / det;
    return RayCoordinates{s, t};
}

} // namespace

bool contains(const Cone2D& c, const NSClass& x) {
    const RayCoordinates coords = solve(c, x);
    return coords.along_a >= 0 && coords.along_b >= 0;
}

bool on_boundary(const Cone2D& c, const NSClass& x) {
    const RayCoordinates coords = solve(c, x);
    return (coords.along_a > 0 && coords.along_b == 0) ||
           (coords.along_a == 0 && coords.along_b > 0);
}

NSClass pullback_class(const NSClass& x, const Int& total_degree) {
    if (total_degree < 1) {
        throw RangeError("total map degree must be positive, got " + total_degree.str());
    }
    return NSClass{x.eta, Rational(total_degree) * x.fiber};
}

} // namespace grcone
