#include "hessmax/families.hpp"

#include <cassert>
#include <vector>

namespace hessmax {

std::string family_name(Family f) {
    switch (f) {
        case Family::U: return "U";
        case Family::Ur: return "Ur";
        case Family::Uc: return "Uc";
        case Family::Urc: return "Urc";
        case Family::V: return "V";
        case Family::W: return "W";
        case Family::Wprime: return "Wprime";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::U, Family::Ur, Family::Uc, Family::Urc, Family::V, Family::W, Family::Wprime}) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

unsigned family_min_dim(Family f) {
    switch (f) {
        case Family::U: return 1;
        case Family::Ur:
        case Family::Uc:
        case Family::Urc: return 4;
        case Family::V: return 2;
        case Family::W: return 3;
        case Family::Wprime: return 4;
    }
    return 1;
}

void check_family_dim(Family f, unsigned n) {
    if (n < family_min_dim(f)) {
        throw std::invalid_argument("family " + family_name(f) + " requires n >= " +
                                    std::to_string(family_min_dim(f)));
    }
    if (f == Family::Wprime && n % 2 != 0) {
        throw std::invalid_argument("family Wprime requires even n");
    }
}

namespace {

// Dense value grid used only while assembling the swapped U variants.
struct Grid {
    unsigned n;
    std::vector<Rational> a; // row-major, full n x n

    explicit Grid(unsigned n) : n(n), a(static_cast<std::size_t>(n) * n, Rational(0)) {}
    Rational& at(unsigned i, unsigned j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const Rational& at(unsigned i, unsigned j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    void swap_rows(unsigned r1, unsigned r2) {
        for (unsigned j = 0; j < n; ++j) std::swap(at(r1, j), at(r2, j));
    }
    void swap_cols(unsigned c1, unsigned c2) {
        for (unsigned i = 0; i < n; ++i) std::swap(at(i, c1), at(i, c2));
    }

    // Converts to HessMatrix, validating the Hessenberg shape.
    HessMatrix to_hess(const Rational& s) const {
        HessMatrix m(n, s);
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                if (j >= i) {
                    m.set_upper(i, j, at(i, j));
                } else if (j + 1 == i) {
                    assert(at(i, j) == s);
                } else {
                    assert(at(i, j).is_zero());
                }
            }
        }
        return m;
    }
};

HessMatrix build_u(unsigned n, const Rational& s, const Rational& t) {
    HessMatrix m(n, s);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i; j < n; ++j) {
            if ((j - i) % 2 == 0) m.set_upper(i, j, t);
        }
    }
    return m;
}

// The pre-swap display shared by Ur and Urc: row 1 = (s, 0, t, 0, ...),
// row 2 = (t, t, 0, t, ...), the remaining rows as in U.
Grid ur_display(unsigned n, const Rational& s, const Rational& t) {
    Grid g(n);
    g.at(0, 0) = s;
    for (unsigned j = 2; j < n; j += 2) g.at(0, j) = t;
    g.at(1, 0) = t;
    g.at(1, 1) = t;
    for (unsigned j = 3; j < n; j += 2) g.at(1, j) = t;
    for (unsigned i = 2; i < n; ++i) {
        g.at(i, i - 1) = s;
        for (unsigned j = i; j < n; ++j) {
            if ((j - i) % 2 == 0) g.at(i, j) = t;
        }
    }
    return g;
}

HessMatrix build_ur(unsigned n, const Rational& s, const Rational& t) {
    Grid g = ur_display(n, s, t);
    g.swap_rows(0, 1);
    return g.to_hess(s);
}

HessMatrix build_uc(unsigned n, const Rational& s, const Rational& t) {
    // U with the bottom-right corner replaced by (t, s), then the last two
    // columns swapped back into Hessenberg form.
    Grid g(n);
    for (unsigned i = 0; i < n; ++i) {
        if (i > 0) g.at(i, i - 1) = s;
        for (unsigned j = i; j < n; ++j) {
            if ((j - i) % 2 == 0) g.at(i, j) = t;
        }
    }
    g.at(n - 1, n - 2) = t;
    g.at(n - 1, n - 1) = s;
    g.swap_cols(n - 2, n - 1);
    return g.to_hess(s);
}

HessMatrix build_urc(unsigned n, const Rational& s, const Rational& t) {
    Grid g = ur_display(n, s, t);
    g.at(n - 1, n - 2) = t;
    g.at(n - 1, n - 1) = s;
    g.swap_rows(0, 1);
    g.swap_cols(n - 2, n - 1);
    return g.to_hess(s);
}

HessMatrix build_v(unsigned n, const Rational& s, const Rational& t) {
    HessMatrix m(n, s);
    for (unsigned j = 0; j + 1 < n; ++j) m.set_upper(0, j, t);
    for (unsigned i = 1; i < n; ++i) m.set_upper(i, n - 1, t);
    return m;
}

// W_n and its even-dimension twin.  The block of t's sits in rows
// 2..k+1 and columns k+1..n-1 for W (k x k when n = 2k+1, k x (k+1) when
// n = 2k+2); Wprime shifts it to rows 2..k+2 and columns k+2..n-1.
HessMatrix build_w(unsigned n, const Rational& s, const Rational& t, bool prime) {
    const unsigned k = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
    const unsigned row1_ts = prime ? k + 1 : k;       // leading t's in row 1
    const unsigned block_lo = prime ? k + 2 : k + 1;  // first block column (1-based)
    const unsigned block_rows = prime ? k + 2 : k + 1; // last block row (1-based)
    HessMatrix m(n, s);
    for (unsigned j = 1; j <= row1_ts; ++j) m.set_upper(0, j - 1, t);
    m.set_upper(0, n - 1, t);
    for (unsigned i = 2; i <= n; ++i) {
        if (i <= block_rows) {
            for (unsigned j = block_lo; j <= n - 1; ++j) m.set_upper(i - 1, j - 1, t);
        } else {
            m.set_upper(i - 1, n - 1, t);
        }
    }
    return m;
}

} // namespace

HessMatrix build_family(Family f, unsigned n, const Rational& s, const Rational& t) {
    check_family_dim(f, n);
    switch (f) {
        case Family::U: return build_u(n, s, t);
        case Family::Ur: return build_ur(n, s, t);
        case Family::Uc: return build_uc(n, s, t);
        case Family::Urc: return build_urc(n, s, t);
        case Family::V: return build_v(n, s, t);
        case Family::W: return build_w(n, s, t, false);
        case Family::Wprime: return build_w(n, s, t, true);
    }
    throw std::logic_error("build_family: unreachable");
}

Rational det_u(unsigned n, const Rational& s, const Rational& t) {
    if (n == 0) return Rational(0);
    Rational prev2(0), prev1 = t; // |U_0|, |U_1|
    if (n == 1) return prev1;
    Rational cur = t * t;
    Rational s2 = s * s;
    for (unsigned k = 3; k <= n; ++k) {
        Rational next = t * cur + s2 * prev1;
        prev1 = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

Rational det_swapped_variant(Family f, unsigned n, const Rational& s, const Rational& t) {
    check_family_dim(f, n);
    Rational signed_det = determinant(build_family(f, n, s, t));
    if (s.sgn() > 0 && t.sgn() > 0) {
        Rational expected = s * det_u(n - 1, s, t) + t * s * det_u(n - 2, s, t);
        assert(signed_det.abs() == expected);
        (void)expected;
    }
    return signed_det;
}

} // namespace

Rational det_ur(unsigned n, const Rational& s, const Rational& t) { return det_swapped_variant(Family::Ur, n, s, t); }
Rational det_uc(unsigned n, const Rational& s, const Rational& t) { return det_swapped_variant(Family::Uc, n, s, t); }

Rational det_urc(unsigned n, const Rational& s, const Rational& t) {
    check_family_dim(Family::Urc, n);
    Rational s2 = s * s;
    return s2 * det_u(n - 2, s, t) + Rational(2) * t * s2 * det_u(n - 3, s, t) + t * t * s2 * det_u(n - 4, s, t);
}

Rational det_v(unsigned n, const Rational& s, const Rational& t) {
    check_family_dim(Family::V, n);
    Rational v = Rational(static_cast<long>(n - 1)) * t * t * s.pow(static_cast<long>(n) - 2);
    return n % 2 == 0 ? v : -v;
}

Rational det_w(unsigned n, const Rational& s, const Rational& t) {
    check_family_dim(Family::W, n);
    unsigned long f = static_cast<unsigned long>(n / 2) * ((n - 1) / 2);
    Rational v = s.pow(static_cast<long>(n) - 1) * t +
                 Rational(BigInt(f)) * s.pow(static_cast<long>(n) - 3) * t.pow(3);
    return n % 2 == 1 ? v : -v;
}

Rational family_det(Family f, unsigned n, const Rational& s, const Rational& t) {
    switch (f) {
        case Family::U: return det_u(n, s, t);
        case Family::Ur: return det_ur(n, s, t);
        case Family::Uc: return det_uc(n, s, t);
        case Family::Urc: return det_urc(n, s, t);
        case Family::V: return det_v(n, s, t);
        case Family::W: return det_w(n, s, t);
        case Family::Wprime: {
            check_family_dim(Family::Wprime, n);
            return det_w(n, s, t);
        }
    }
    throw std::logic_error("family_det: unreachable");
}

} // namespace hessmax
