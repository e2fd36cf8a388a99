// Named matrix families with closed-form or recurrence companions for their
// determinants.
//
// Family tags follow the CLI vocabulary: U is the alternating 0/t family,
// Ur/Uc/Urc its variants with the first two rows and/or last two columns
// reshuffled (built directly in upper Hessenberg form), V the full-first-row
// fan, W the centered t-block family and Wprime its transposed-block twin
// for even dimensions.

#ifndef HESSMAX_FAMILIES_HPP
#define HESSMAX_FAMILIES_HPP

#include "hessmax/matrix.hpp"
#include "hessmax/scalar.hpp"

#include <optional>
#include <string>

namespace hessmax {

enum class Family { U, Ur, Uc, Urc, V, W, Wprime };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Smallest dimension the family is defined for; Wprime additionally
// requires an even dimension.
unsigned family_min_dim(Family f);
void check_family_dim(Family f, unsigned n);

HessMatrix build_family(Family f, unsigned n, const Rational& s, const Rational& t);

// |U_n| from the two-term recurrence |U_n| = t|U_{n-1}| + s^2|U_{n-2}|,
// seeded |U_1| = t, |U_2| = t^2; |U_0| = 0 by convention.  Always positive
// for s, t > 0 and equal to det(U_n) for every rational s, t.
Rational det_u(unsigned n, const Rational& s, const Rational& t);

// Signed determinants of the row/column-swapped variants.  Their magnitude
// satisfies |det| = s|U_{n-1}| + t s|U_{n-2}| for s, t > 0; the sign is
// whatever the construction yields and is reported, not asserted.
Rational det_ur(unsigned n, const Rational& s, const Rational& t);
Rational det_uc(unsigned n, const Rational& s, const Rational& t);

// det(U_n^rc) = s^2|U_{n-2}| + 2 t s^2 |U_{n-3}| + t^2 s^2 |U_{n-4}|, n >= 4.
Rational det_urc(unsigned n, const Rational& s, const Rational& t);

// det(V_n) = (-1)^n (n-1) t^2 s^(n-2), n >= 2.
Rational det_v(unsigned n, const Rational& s, const Rational& t);

// det(W_n) = (-1)^(n-1) (s^(n-1) t + floor(n/2) floor((n-1)/2) s^(n-3) t^3), n >= 3.
Rational det_w(unsigned n, const Rational& s, const Rational& t);

// Closed-form companion of build_family(f, n, s, t): the value det() of the
// built matrix must equal.  For Ur/Uc the companion is the signed value
// computed from the built matrix itself (see det_ur).
Rational family_det(Family f, unsigned n, const Rational& s, const Rational& t);

} // namespace hessmax

#endif
