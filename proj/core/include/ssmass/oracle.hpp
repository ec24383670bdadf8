#ifndef SSMASS_ORACLE_HPP
#define SSMASS_ORACLE_HPP

#include <chrono>
#include <string>

#include "ssmass/common.hpp"

// Brute-force counts used to pin the closed forms in fingrp and exactnum.
namespace ssmass::oracle {

struct EnumerationResult {
  Integer count;
  std::chrono::duration<double> elapsed{0};
  std::string method;
};

/// |Sp_2m(F_q)| by walking ordered symplectic bases e_1, f_1, ..., e_m, f_m
/// of F_q^2m. m = 1 allows q <= 9, m = 2 allows q <= 5.
EnumerationResult enum_sp(int m, long q);

/// Number of m-dimensional isotropic subspaces of F_q^2m (q <= 5, m <= 2),
/// scanning reduced row echelon forms.
EnumerationResult enum_isotropic(int m, long q);

/// Order of the stabilizer of span(e_1, ..., e_m) in Sp_2m(F_q); same bounds
/// as enum_sp.
EnumerationResult enum_parabolic(int m, long q);

/// Number of 2x2 matrices of determinant 1 over Z/modulus (m = 1 only,
/// 2 <= modulus <= 16).
EnumerationResult enum_sp_mod(int m, long modulus);

/// B_n from the Akiyama-Tanigawa triangle, with B_1 = -1/2. n <= 30.
Rational bernoulli_alt(int n);

}  // namespace ssmass::oracle

#endif  // SSMASS_ORACLE_HPP
