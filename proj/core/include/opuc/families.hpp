#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opuc/measure.hpp"

namespace opuc {

struct FamilyInfo {
  std::string name;
  std::string parameters;
  std::string description;
};

// Built-in test measures, in catalog order.
std::vector<FamilyInfo> family_catalog();

CircleMeasure lebesgue(int M = kDefaultGridSize);

// dmu = |phi_N^*(xi)|^{-2} dm for the orthonormal phi_N with Verblunsky
// coefficients a_0..a_{N-1} (zero afterwards). The coefficients are stored
// as exact.
CircleMeasure bernstein_szego(const std::vector<cplx>& a, int M = kDefaultGridSize);

// Constant coefficients a_n = a. Only a = 0 is in the Szego class; any other
// value throws InvalidArgument naming the divergent sum.
CircleMeasure geronimus(cplx a, int M = kDefaultGridSize);

// w = sum_{|k|<=d} c_k e^{ik theta} with c_{-k} = conj(c_k), normalized by
// c_0. Boundary zeros are located from the roots of z^d w(z).
CircleMeasure trigpoly(const std::vector<cplx>& c, int M = kDefaultGridSize);

// Uniform density carrying the mass left over by the atoms.
CircleMeasure atom_mixture(const std::vector<Atom>& atoms, int M = kDefaultGridSize);

// a_n = sigma u_n (n+1)^{-rate}, n < length, u_n uniform in the unit disk.
std::vector<cplx> random_decaying_coefficients(std::uint64_t seed, double rate, double sigma, int length);
CircleMeasure random_decaying(std::uint64_t seed, double rate, double sigma = 0.9, int length = 64,
                              int M = kDefaultGridSize);

// Finite sequence of given length with |a_n| <= maxAbs, uniform in the disk
// of that radius.
std::vector<cplx> random_verblunsky(std::uint64_t seed, int length, double maxAbs);

// Closed forms used throughout the tests: 1 + cos(theta) = |1 + xi|^2 / 2 and
// 3 / |2 - xi|^2.
CircleMeasure one_plus_cos(int M = kDefaultGridSize);
CircleMeasure three_over_two_minus_xi(int M = kDefaultGridSize);

}  // namespace opuc
