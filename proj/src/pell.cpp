#include "freequat/pell.hpp"

#include <stdexcept>
#include <string>

namespace freequat {

FundUnit::FundUnit(Int x_, Int y_, SquareFreeD d_, int norm_)
    : x(std::move(x_)), y(std::move(y_)), d(d_), norm(norm_) {
    if (norm != 1 && norm != -1) {
        throw InputError("FundUnit norm must be +1 or -1");
    }
    if (x < 1 || y < 1) {
        throw InputError("FundUnit requires x, y >= 1");
    }
    Int lhs = x * x - Int(d.value) * y * y;
    if (lhs != norm) {
        throw InputError("FundUnit coefficients do not solve x^2 - " +
                         std::to_string(d.value) + " y^2 = " +
                         std::to_string(norm));
    }
}

FundUnit pell_fundamental(SquareFreeD d) {
    if (d.value < 2) {
        throw InputError("pell_fundamental requires d >= 2");
    }
    const Int D(d.value);
    Int a0;
    mpz_sqrt(a0.get_mpz_t(), D.get_mpz_t());

    // Continued-fraction state for sqrt(d): the k-th partial quotient is
    //   a_k = floor((a0 + m_k) / q_k),
    //   m_{k+1} = a_k q_k - m_k,  q_{k+1} = (d - m_{k+1}^2) / q_k.
    // Convergents h_k / k_k follow the usual three-term recurrence.
    Int m = 0, q = 1, a = a0;
    Int h_prev = 1, h = a0; // h_{-1}, h_0
    Int k_prev = 0, k = 1;  // k_{-1}, k_0
    for (;;) {
        Int t = h * h - D * k * k;
        if (t == 1) return FundUnit(h, k, d, 1);
        if (t == -1) return FundUnit(h, k, d, -1);
        m = a * q - m;
        q = (D - m * m) / q;
        a = (a0 + m) / q;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
}

std::pair<Int, Int> unit_power(const FundUnit& u, unsigned n) {
    const Int D(u.d.value);
    Int X = 1, Y = 0;
    for (unsigned i = 0; i < n; ++i) {
        // (X + Y s)(x + y s) = (Xx + d Y y) + (X y + Y x) s
        Int X2 = X * u.x + D * Y * u.y;
        Int Y2 = X * u.y + Y * u.x;
        X = std::move(X2);
        Y = std::move(Y2);
    }
    return {X, Y};
}

FundUnit pell_power(const FundUnit& u, unsigned n) {
    if (n == 0) {
        throw InputError("pell_power requires n >= 1");
    }
    auto [X, Y] = unit_power(u, n);
    int norm = (u.norm == -1 && n % 2 == 1) ? -1 : 1;
    return FundUnit(std::move(X), std::move(Y), u.d, norm);
}

PellHalf pell_fundamental_2d(SquareFreeD d) {
    std::uint64_t twod = 2 * static_cast<std::uint64_t>(d.value);
    if (!is_square_free(twod)) {
        throw NotSquareFree("2d = " + std::to_string(twod) +
                            " is not square-free (d = " +
                            std::to_string(d.value) + ")");
    }
    FundUnit f = pell_fundamental(SquareFreeD(static_cast<unsigned>(twod)));
    // The first power with norm +1 is f itself or its square; the loop
    // bound is pure defensiveness.
    for (unsigned k = 1; k <= 16; ++k) {
        auto [X, Y] = unit_power(f, k);
        if (X * X - Int(twod) * Y * Y == 1 && mpz_odd_p(X.get_mpz_t())) {
            return PellHalf{(X + 1) / 2, std::move(Y), k};
        }
    }
    throw std::logic_error("no norm +1 power of the fundamental unit found");
}

} // namespace freequat
