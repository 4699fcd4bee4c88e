#pragma once

#include "grcone/bundle.hpp"
#include "grcone/numeric.hpp"

namespace grcone {

/// A divisor class on the Grassmann bundle in the rank-two Neron-Severi
/// basis: eta (the tautological class) and the fiber class.
struct NSClass {
    Rational eta;
    Rational fiber;

    friend bool operator==(const NSClass&, const NSClass&) = default;
};

NSClass operator+(const NSClass& a, const NSClass& b);
NSClass operator*(const Rational& scale, const NSClass& x);

/// An extremal-ray direction stored as a primitive integer vector with
/// eta > 0, or (0, 1). The constructor rejects anything else; from_class
/// normalizes (positive scaling only, directions are never flipped).
class Ray {
  public:
    Ray(Int eta, Int fiber);

    static Ray from_class(const NSClass& direction);

    const Int& eta() const { return eta_; }
    const Int& fiber() const { return fiber_; }
    NSClass as_class() const;

    friend bool operator==(const Ray&, const Ray&) = default;

  private:
    Int eta_;
    Int fiber_;
};

/// A two-dimensional cone spanned by two independent rays. Equality is as
/// an unordered pair of normalized rays.
class Cone2D {
  public:
    Cone2D(Ray a, Ray b);

    const Ray& ray_a() const { return a_; }
    const Ray& ray_b() const { return b_; }

    friend bool operator==(const Cone2D& lhs, const Cone2D& rhs);

  private:
    Ray a_;
    Ray b_;
};

/// The pseudo-effective cone of the rank-r quotient Grassmannian of b:
/// spanned by the fiber class (0, 1) and the boundary class eta - lambda * f
/// in primitive form.
Cone2D pseff_cone(const BundleDescriptor& b, int r);

/// Membership: x is a non-negative rational combination of the two rays,
/// decided by solving the 2x2 system exactly.
bool contains(const Cone2D& c, const NSClass& x);

/// True when x is a positive multiple of exactly one ray.
bool on_boundary(const Cone2D& c, const NSClass& x);

/// Pullback along the covering square: eta is preserved, the fiber class
/// scales by the total degree of the base map.
NSClass pullback_class(const NSClass& x, const Int& total_degree);

} // namespace grcone
