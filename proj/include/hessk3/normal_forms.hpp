#pragma once

// Integer normal forms and exact linear algebra: Hermite and Smith normal
// forms with transforms, fraction-free rank/determinant, saturated integer
// kernels, and integer linear solves.
//
// Conventions (fixed, and relied on by tests):
//  * hnf: row-style. h = u*m with u unimodular. Pivots are positive, are the
//    first nonzero entry of their row, move strictly right as the row index
//    grows, entries ABOVE a pivot are reduced into [0, pivot), zero rows sit
//    at the bottom. This makes h unique for a given row span.
//  * snf: s = u*m*v, diagonal, nonnegative, d_i | d_{i+1}. Pivot selection is
//    deterministic: smallest nonzero absolute value, ties broken by row-major
//    position, so repeated runs produce identical transforms.
//  * kernel(m): basis of { x in Z^n : m x = 0 }, returned as rows in HNF.
//    The result is automatically saturated (it is the full integer kernel).

#include "hessk3/matrix.hpp"

#include <optional>

namespace hessk3 {

struct HnfResult {
  IntMat h;  // the normal form, same shape as the input
  IntMat u;  // unimodular, h = u * m
  std::size_t rank = 0;
};

struct SnfResult {
  IntMat s;  // diagonal, nonnegative, divisibility chain
  IntMat u;  // unimodular row transform
  IntMat v;  // unimodular column transform, s = u * m * v
  std::vector<Int> diagonal() const;
  // Nonzero diagonal entries (the invariant factors, including 1s).
  std::vector<Int> invariant_factors() const;
};

HnfResult hnf(const IntMat& m);
SnfResult snf(const IntMat& m);

// Determinant of a square integer matrix, fraction-free (Bareiss).
Int det(const IntMat& m);
// Determinant of a square rational matrix (fraction-free on the cleared
// numerator matrix).
Rat det(const RatMat& m);

// Rank by fraction-free elimination (works for any shape).
std::size_t rank(const IntMat& m);
std::size_t rank(const RatMat& m);

// Saturated basis (rows, in HNF) of the integer kernel {x : m x = 0}.
IntMat kernel(const IntMat& m);

// One integer solution x of m x = rhs, if any (free coordinates set to 0).
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& rhs);

// Inverse of a square rational matrix; throws std::domain_error if singular.
RatMat inverse(const RatMat& m);

// Solve m x = rhs over Q (m square nonsingular).
std::vector<Rat> solve_rational(const RatMat& m, const std::vector<Rat>& rhs);

}  // namespace hessk3
