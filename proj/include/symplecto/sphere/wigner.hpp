#pragma once

namespace symplecto::sphere {

struct Wigner3jArg {
  int j1, j2, j3;
  int m1, m2, m3;
};

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) by Racah's single sum, evaluated
/// in exact rational arithmetic up to one final square root. Returns 0 when
/// a selection rule fails (including |m_i| > j_i). Results are memoised.
double wigner3j(const Wigner3jArg& a);
double wigner3j(int j1, int j2, int j3, int m1, int m2, int m3);

}  // namespace symplecto::sphere
