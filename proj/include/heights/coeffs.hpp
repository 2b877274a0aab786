#pragma once

#include <span>

#include "heights/rational.hpp"

namespace heights::coeffs {

/// Coefficient relating the stable Griffiths height of a pencil with
/// ordinary double points to its intersection height. Defined separately
/// for odd and even N; always lies in (1/12)Z.
Rational f_stab(int d, int N);

/// Contribution w_{N,delta} of a semihomogeneous singular point of
/// multiplicity delta; lies in (1/12)Z and vanishes at delta = 1.
Rational w(int N, int delta);

/// Normalized contribution 12 w_{N,delta} (delta-1)^{-N}; requires delta >= 2.
Rational g(int N, int delta);

/// (2N + 1 + 3(-1)^N) / 4, the value of g(N, 2).
Rational g_at_two(int N);

/// Machine check that -(N+1) w_{N,d} + (N+1)(d-1)^N (2N+1+3(-1)^N)/48
/// equals f_stab(d, N).
bool check_f_equals_fstab(int d, int N);

/// The left-hand side of the identity above, evaluated independently of
/// f_stab.
Rational f_from_w(int d, int N);

/// Equality case of the upper bound ht_GK,stab <= F_stab ht_int:
/// N = 1; N = 2 or N >= 4 with all multiplicities 2; N = 3 with all
/// multiplicities in {2, 3}.
bool classify_equality_case(int N, std::span<const int> multiplicities);

}  // namespace heights::coeffs
