#include "fixture_data.hpp"

namespace g2hol::detail {

const std::vector<FixtureSource>& fixture_sources() {
  static const std::vector<FixtureSource> sources = {
      {"p1", R"FX(name p1
system P1
claim p1
point 0 0 0 0 0 0 0
fn f = exp(x7)
fn q2 = -sqrt2*x4
fn q3 = 1/2*sqrt2*x5 - sqrt2*x6 + x5*x6*exp(-x7) - x4*x6*exp(-x7) + 1/2*sqrt2*x6*x7*exp(-x7)
fn s3 = x3 - 1/2*sqrt2*x4
fn q4 = x5 - 2*x6 + x6*exp(-x7)
fn r5 = x7 - x4^2*exp(x7) - 1/2*sqrt2*x3 + 1/2*sqrt2*x1*x6 - 1/2*sqrt2*x4*exp(-x7) + 1/2*sqrt2*x4*x6*exp(-x7)
fn r6 = -2*x3 + x5*exp(-x7) - x4*exp(-x7) + sqrt2*x6*exp(-x7) - 1/2*sqrt2*x7*exp(-x7) + sqrt2*x2*x6*exp(-x7) + exp(-2*x7)
fn r7 = x1 + x2
expect R56 A11 = -1/2*sqrt2
expect R56 A12 = 0
expect R56 A21 = 0
expect R56 A22 = 0
expect R56 v = *
expect R56 u1 = 0
expect R56 u2 = -1/2
expect R56 y1 = *
expect R56 y2 = *
expect R57 A11 = 0
expect R57 A12 = 0
expect R57 A21 = -1
expect R57 A22 = 0
expect R57 v = *
expect R57 u1 = 1/2
expect R57 u2 = 0
expect R57 y1 = *
expect R57 y2 = *
expect nR5_56 A11 = 0
expect nR5_56 A12 = -1/2*sqrt2
expect nR5_56 A21 = 1 - 1/4*sqrt2
expect nR5_56 A22 = 0
expect nR5_56 v = *
expect nR5_56 u1 = *
expect nR5_56 u2 = *
expect nR5_56 y1 = *
expect nR5_56 y2 = *
)FX"},
      {"2b", R"FX(name 2b
system T2B
claim 2b
point 0 0 0 0 0 0 0
fn p = x6^2
fn q2 = x3 + x4
fn q3 = -2*x6*x7
fn r5 = 2*x4^2 + x3*x6^4 + x4*x6^4 - 2*x1*x6 - 2*x2*x6^3 + 2*x2*x6 + sqrt2*x3*x6^2
fn r6 = sqrt2*x3 + x3*x6^2 + x4*x6^2 - 2*x2*x6
fn r7 = -4*sqrt2*x4*x6
expect R56 A11 = 2
expect R56 A12 = 0
expect R56 A21 = 0
expect R56 A22 = 0
expect R56 v = 0
expect R56 u1 = 0
expect R56 u2 = 2
expect R56 y1 = 0
expect R56 y2 = 0
expect R67 A11 = 0
expect R67 A12 = 0
expect R67 A21 = 0
expect R67 A22 = 0
expect R67 v = -2
expect R67 u1 = 0
expect R67 u2 = 0
expect R67 y1 = 0
expect R67 y2 = 0
expect nR5_56 A11 = 0
expect nR5_56 A12 = -sqrt2
expect nR5_56 A21 = 0
expect nR5_56 A22 = 0
expect nR5_56 v = 0
expect nR5_56 u1 = sqrt2
expect nR5_56 u2 = 0
expect nR5_56 y1 = 0
expect nR5_56 y2 = 0
)FX"},
      {"2c00", R"FX(name 2c00
system T2C00
claim 2c(0,0)
point 0 0 0 0 0 0 0
fn p = 1/6*x6^4 + x6*x7
fn q = -1/2*sqrt2*x7^2 - 2/3*sqrt2*x7*x6^3
fn q2 = 2*x3*x6
fn q3 = 2*sqrt2*x4*x6
fn q4 = 2*sqrt2*x6*x7 + 1/3*sqrt2*x5*x6^5
fn r5 = x2*x7 - 3*x1*x6 - 1/6*x3*x6^5 + 2/3*x2*x6^3 - x3*x7*x6^2 - 1/9*sqrt2*x4*x6^7 - sqrt2*x4*x6*x7^2 - 5/6*sqrt2*x4*x7*x6^4
fn r6 = -x3*x7 - 4*x2*x6 - 2/3*x3*x6^3 + 2/3*x6*x7^3 + 1/3*x5*x6^5*x7^2 + 4/9*x5*x7*x6^8
fn r7 = -x3*x6 - sqrt2*x4*x7 - 2/3*sqrt2*x4*x6^3
expect R56 A11 = 2
expect R56 A12 = 0
expect R56 A21 = 0
expect R56 A22 = 1
expect R56 v = *
expect R56 u1 = *
expect R56 u2 = *
expect R56 y1 = *
expect R56 y2 = *
expect R57 A11 = 0
expect R57 A12 = 1
expect R57 A21 = 0
expect R57 A22 = 0
expect R57 v = *
expect R57 u1 = *
expect R57 u2 = *
expect R57 y1 = *
expect R57 y2 = *
expect R36 A11 = 0
expect R36 A12 = 0
expect R36 A21 = 0
expect R36 A22 = 0
expect R36 v = 0
expect R36 u1 = 0
expect R36 u2 = 0
expect R36 y1 = 0
expect R36 y2 = 1
)FX"},
      {"2c10", R"FX(name 2c10
system T2C10
claim 2c(1,0)
point 0 0 0 0 0 0 0
fn p = x6*x7
fn q2 = -x6^2*x7^2 + 2*x3*x6
fn q3 = x5 - 1/2*x7^2 + 2*sqrt2*x4*x6
fn q4 = 2*sqrt2*x6*x7
fn r5 = x2*x7 + 1/2*sqrt2*x4 - 3*x1*x6 - 2*x4^2*x6^2 - x3*x7*x6^2 - 21/4*sqrt2*x4*x6*x7^2 - 1/2*sqrt2*x4*x5*x6
fn r6 = -x3*x7 - 4*x2*x6 - 2*sqrt2*x4*x7*x6^2
fn r7 = -x3*x6 - 2*sqrt2*x4*x7
expect R56 A11 = 2
expect R56 A12 = 0
expect R56 A21 = 0
expect R56 A22 = 1
expect R56 v = *
expect R56 u1 = *
expect R56 u2 = *
expect R56 y1 = *
expect R56 y2 = *
expect R57 A11 = 0
expect R57 A12 = 1
expect R57 A21 = 0
expect R57 A22 = 0
expect R57 v = *
expect R57 u1 = *
expect R57 u2 = *
expect R57 y1 = *
expect R57 y2 = *
expect R25 A11 = 0
expect R25 A12 = 0
expect R25 A21 = 0
expect R25 A22 = 0
expect R25 v = 0
expect R25 u1 = 0
expect R25 u2 = 0
expect R25 y1 = 0
expect R25 y2 = -1
expect nR5_56 A11 = 0
expect nR5_56 A12 = 0
expect nR5_56 A21 = 0
expect nR5_56 A22 = 0
expect nR5_56 v = -1
expect nR5_56 u1 = 0
expect nR5_56 u2 = 0
expect nR5_56 y1 = *
expect nR5_56 y2 = *
)FX"},
      {"2c11", R"FX(name 2c11
system T2C11
claim 2c(1,1)
point 0 0 0 0 0 0 0
fn q2 = 4/3*x4*x7 + sqrt2*x4*x6 + 1/3*sqrt2*x3*x6
fn s = -1/3*x4*x6
fn q3 = x6*x7 + 1/3*sqrt2*x7^2 + 2/3*x4*x6
fn q4 = x6*x7
fn r5 = -x4^2 - x2*x6 - 5/9*x4^2*x6^2 + 5/3*x3*x4 - 2/3*sqrt2*x2*x7 - 1/2*sqrt2*x1*x6 - 1/3*x3*x7*x6^2 + 5/3*x4*x7*x6^2 + 11/9*sqrt2*x4*x6*x7^2
fn r6 = 2*x3*x6 + 5/3*sqrt2*x4^2 - 2/3*sqrt2*x2*x6 + 4/3*sqrt2*x3*x7 - 2/3*sqrt2*x4*x7*x6^2
fn r7 = 8/3*x4*x7 + 2*sqrt2*x4*x6 - 1/3*sqrt2*x3*x6
expect R56 A11 = 1/3*sqrt2
expect R56 A12 = -1
expect R56 A21 = 0
expect R56 A22 = 1/6*sqrt2
expect R56 v = 0
expect R56 u1 = 0
expect R56 u2 = -1
expect R56 y1 = 0
expect R56 y2 = 0
expect R57 A11 = 0
expect R57 A12 = -2/3*sqrt2
expect R57 A21 = 0
expect R57 A22 = 0
expect R57 v = 0
expect R57 u1 = 0
expect R57 u2 = -2/3*sqrt2
expect R57 y1 = 0
expect R57 y2 = 0
expect R45 A11 = 0
expect R45 A12 = 0
expect R45 A21 = 0
expect R45 A22 = 0
expect R45 v = -sqrt2
expect R45 u1 = 5/3
expect R45 u2 = 0
expect R45 y1 = 0
expect R45 y2 = 0
)FX"},
      {"3b", R"FX(name 3b
system T3B
claim 3b
point 0 0 0 0 0 0 0
fn p = x5*x6^2
fn q2 = x7 + x6*x7
fn q3 = -2*x5*x6*x7
fn r5 = x3 + x3*x6 + 2*x5*x4^2 - 2*x1*x5*x6 - 2*x2*x5^2*x6^3 + 2*x2*x5*x6 - sqrt2*x4*x6*x7 + 3/2*sqrt2*x4*x5*x6^2 + 3/2*sqrt2*x4*x5*x6^3
fn r6 = 2*sqrt2*x4 - 2*x2*x5*x6 + 2*sqrt2*x4*x6
fn r7 = -4*sqrt2*x4*x5*x6
expect R56 A11 = 0
expect R56 A12 = 0
expect R56 A21 = 0
expect R56 A22 = 0
expect R56 v = 0
expect R56 u1 = -1
expect R56 u2 = 0
expect R56 y1 = 3
expect R56 y2 = 0
expect nR4_56 A11 = 0
expect nR4_56 A12 = 0
expect nR4_56 A21 = 0
expect nR4_56 A22 = 0
expect nR4_56 v = 0
expect nR4_56 u1 = 0
expect nR4_56 u2 = 0
expect nR4_56 y1 = 0
expect nR4_56 y2 = sqrt2
expect nR6_57 A11 = 0
expect nR6_57 A12 = 0
expect nR6_57 A21 = 0
expect nR6_57 A22 = 0
expect nR6_57 v = -1
expect nR6_57 u1 = 0
expect nR6_57 u2 = 0
expect nR6_57 y1 = 0
expect nR6_57 y2 = 0
expect nR5_56 A11 = 2
expect nR5_56 A12 = 0
expect nR5_56 A21 = 0
expect nR5_56 A22 = 0
expect nR5_56 v = 0
expect nR5_56 u1 = 0
expect nR5_56 u2 = 2
expect nR5_56 y1 = 0
expect nR5_56 y2 = 0
)FX"},
      {"4b0", R"FX(name 4b0
system T4B0
claim 4b(0)
point 0 0 0 0 0 0 0
fn p = x6^2 + x5*x6
fn q = -x5*x7 - 2*x6*x7
fn r5 = 2*x4^2 + x2*x5 + 2*x2*x6 - sqrt2*x4*x6 - 3*sqrt2*x4*x6^3 - 1/2*sqrt2*x4*x7 - 9/2*sqrt2*x4*x5*x6^2 - 3/2*sqrt2*x4*x6*x5^2
fn r6 = x5^2 - x3*x5 - 2*x3*x6
fn r7 = x6^2 - 4*sqrt2*x4*x6 - 2*sqrt2*x4*x5
expect R56 A11 = 0
expect R56 A12 = 2
expect R56 A21 = 0
expect R56 A22 = 0
expect R56 v = *
expect R56 u1 = 0
expect R56 u2 = 2
expect R56 y1 = *
expect R56 y2 = *
expect R57 A11 = 0
expect R57 A12 = 0
expect R57 A21 = 0
expect R57 A22 = 0
expect R57 v = -1/2
expect R57 u1 = 0
expect R57 u2 = 0
expect R57 y1 = 0
expect R57 y2 = 0
expect R36 A11 = 0
expect R36 A12 = 0
expect R36 A21 = 0
expect R36 A22 = 0
expect R36 v = 0
expect R36 u1 = 0
expect R36 u2 = 0
expect R36 y1 = 2
expect R36 y2 = 0
)FX"},
      {"4b1", R"FX(name 4b1
system T4B1
claim 4b(1)
point 0 0 0 0 0 0 0
fn q2 = 2*x6*x7 + sqrt2*x4*x5 + sqrt2*x4*x6 + 2*sqrt2*x4*x7
fn q3 = x7^2 + x5*x7 + x6*x7
fn r5 = -x4^2 - x2*x5 - x2*x6 - 2*x2*x7 + 2*x3*x6 + 1/2*sqrt2*x4*x7 + 2*sqrt2*x3*x4
fn r6 = 4*x4^2 + 2*x3*x5 + 2*x3*x6 + 4*x3*x7 + 4*sqrt2*x4*x6
fn r7 = 2*sqrt2*x4*x5 + 2*sqrt2*x4*x6 + 4*sqrt2*x4*x7
expect R56 A11 = 0
expect R56 A12 = -1
expect R56 A21 = 0
expect R56 A22 = 0
expect R56 v = *
expect R56 u1 = -1
expect R56 u2 = -1
expect R56 y1 = *
expect R56 y2 = *
expect R35 A11 = 0
expect R35 A12 = 0
expect R35 A21 = 0
expect R35 A22 = 0
expect R35 v = 2
expect R35 u1 = 0
expect R35 u2 = 0
expect R35 y1 = *
expect R35 y2 = *
expect R67 A11 = 0
expect R67 A12 = 0
expect R67 A21 = 0
expect R67 A22 = 0
expect R67 v = *
expect R67 u1 = -2
expect R67 u2 = 0
expect R67 y1 = *
expect R67 y2 = *
expect R25 A11 = 0
expect R25 A12 = 0
expect R25 A21 = 0
expect R25 A22 = 0
expect R25 v = 0
expect R25 u1 = 0
expect R25 u2 = 0
expect R25 y1 = 1
expect R25 y2 = 2
)FX"},
      {"sl2", R"FX(# q2 and q3 may depend on x2..x7; the formulas here use fewer variables.
name sl2
system P1
claim sl2_m
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = -1 + 1/4*sqrt2*x4
fn q3 = x6^2 - sqrt2*exp(x5)
fn s3 = x2 + x4
fn q4 = 1
fn r5 = x6*x7 - 1/4*sqrt2*x2*x4*exp(x5)
fn r6 = 1/2*x3
fn r7 = 1/2*x4^2 - sqrt2*x2
)FX"},
      {"b2", R"FX(name b2
system P1
claim b2_m
point 0 0 0 0 0 0 0
fn f = exp(x6)
fn q2 = x2 + exp(x3)
fn s2 = -x4 + x4*x7
fn q3 = x4*x7
fn q4 = x7
fn r5 = -x4^2*exp(x6) - 2/3*x4^3*exp(x6) + x3*x4*exp(x6) + x3*x7^2*exp(x6) + x4^2*x7^2*exp(x6) - x2*x4*exp(x6) - x3*x7*exp(x6) + 2*x7*x4^2*exp(x6) - 1/2*sqrt2*x1*exp(x6) - x3*x4*x7*exp(x6)
fn r6 = x1 + sqrt2*x4^2 - sqrt2*x2*x7 - sqrt2*x7*x4^2 - 2*sqrt2*x4*x7 + 2*sqrt2*x4*x7^2
fn r7 = sqrt2*x4^2 - sqrt2*x3 + sqrt2*x3*x7
)FX"},
      {"d", R"FX(name d
system P1
claim d_m
point 0 0 0 0 0 0 0
fn f = exp(x6)
fn q2 = x2
fn s2 = -x4 + x4*x7
fn q3 = x4*x7
fn q4 = x7
fn r5 = -x4^2*exp(x6) - 2/3*x4^3*exp(x6) + x3*x4*exp(x6) + x3*x7^2*exp(x6) + x4^2*x7^2*exp(x6) - x2*x4*exp(x6) - x3*x7*exp(x6) + 2*x7*x4^2*exp(x6) - 1/2*sqrt2*x1*exp(x6) - x3*x4*x7*exp(x6)
fn r6 = x1 + sqrt2*x4^2 - sqrt2*x2*x7 - sqrt2*x7*x4^2 - 2*sqrt2*x4*x7 + 2*sqrt2*x4*x7^2
fn r7 = sqrt2*x4^2 - sqrt2*x3 + sqrt2*x3*x7
)FX"},
      {"S", R"FX(name S
system P1
claim S_m
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = -1/2*x4*x6
fn s2 = -1/2*x4*x6
fn q3 = 1/2*x4*x6
fn s3 = x6*x7
fn q4 = x6*x7
fn r5 = x2*x7*exp(x5) + 1/2*x3*x4*exp(x5) - 3/4*x4^2*x6^2*exp(x5) + 1/2*x4*x7*x6^2*exp(x5) - 2*x4*x6*x7^2*exp(x5) - 1/2*sqrt2*x1*x6*exp(x5) - 1/2*x3*x7*x6^2*exp(x5)
fn r6 = 1/2*sqrt2*x4^2 - 1/2*sqrt2*x2*x6 - 1/2*sqrt2*x3*x6 - sqrt2*x4*x7*x6^2
fn r7 = -2*sqrt2*x4*x7 - 1/2*sqrt2*x3*x6
)FX"},
      {"b2hat", R"FX(name b2hat
system P1
claim b2hat_m
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = x3*x5
fn s2 = -1/2*x4*x6
fn q3 = 1/2*x4*x6
fn s3 = x6*x7
fn q4 = x5*x6 + x6*x7
fn r5 = x2*x7*exp(x5) + 1/2*x3*x4*exp(x5) - 3/4*x4^2*x6^2*exp(x5) - 1/2*sqrt2*x3*x6 - x5*x6*x4^2*exp(x5) - 1/2*sqrt2*x1*x6*exp(x5) - 1/2*x3*x5*x6^2*exp(x5) - 1/2*x3*x7*x6^2*exp(x5) - x3*x5*x6*x7*exp(x5)
fn r6 = 1/2*sqrt2*x4^2 - x4*x6*exp(-x5) - 1/2*sqrt2*x2*x6 + 2/3*sqrt2*x6*x7^3 + sqrt2*x5*x6*x7^2 - sqrt2*x4*x5*x6^2 - sqrt2*x4*x7*x6^2 - 2*sqrt2*x4*x5*x6*x7
fn r7 = -2*sqrt2*x4*x7 - 1/2*sqrt2*x3*x6
)FX"},
      {"co2", R"FX(name co2
system P1
claim co2_m
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = x4*x7
fn s2 = -1/2*x4*x6
fn q3 = 1/2*x4*x6
fn s3 = x4*x7 + x6*x7
fn q4 = x5*x6 + x6*x7
fn r5 = x2*x7*exp(x5) - 2*x4^2*x7^2*exp(x5) - 3/4*x4^2*x6^2*exp(x5) - 1/2*sqrt2*x3*x6 + 3/2*x3*x4*exp(x5) - x2*x6*x7^2*exp(x5) - x5*x7*x4^2*exp(x5) - 1/2*sqrt2*x1*x6*exp(x5) - 1/2*x3*x5*x6^2*exp(x5) - 1/2*x3*x7*x6^2*exp(x5) - x2*x5*x6*x7*exp(x5)
fn r6 = 3/2*sqrt2*x4^2 + sqrt2*x3*x7 + sqrt2*x6*x7^3 - x4*x6*exp(-x5) - 1/2*sqrt2*x2*x6 - 1/2*sqrt2*x6^2*x7^4 + sqrt2*x5*x6*x7^2 - sqrt2*x4*x5*x6^2 - sqrt2*x4*x7*x6^2 - sqrt2*x5^2*x6^2*x7^2 - 4/3*sqrt2*x5*x6^2*x7^3
fn r7 = -sqrt2*x2*x7 - 2*sqrt2*x4*x7 - 1/2*sqrt2*x3*x6 + 2*sqrt2*x4*x6*x7^2 + 2*sqrt2*x4*x5*x6*x7
)FX"},
      {"Ca1", R"FX(name Ca1
system P1
claim Ca_m(1)
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = x4*x6
fn s2 = -x4*x6
fn q3 = x4*x6
fn s3 = x4*x6 + x6*x7
fn q4 = 2*x5*x6 + 2*x6*x7
fn r5 = x2*x4*exp(x5) + x2*x7*exp(x5) + x3*x4*exp(x5) - sqrt2*x3*x6 - 4*x4^2*x6^2*exp(x5) - sqrt2*x1*x6*exp(x5) - 6*x5*x6*x4^2*exp(x5) - 6*x6*x7*x4^2*exp(x5) - 2*x2*x5*x6^2*exp(x5) - 2*x2*x7*x6^2*exp(x5) - 2*x3*x5*x6^2*exp(x5) - 2*x3*x7*x6^2*exp(x5)
fn r6 = sqrt2*x4^2 + sqrt2*x3*x6 + 1/2*sqrt2*x6^2*x7^2 - sqrt2*x2*x6 - 2*x4*x6*exp(-x5) - 8/3*sqrt2*x6^3*x7^3 + 4/3*sqrt2*x6*x7^3 - 8*sqrt2*x5*x6^3*x7^2 - 8*sqrt2*x7*x5^2*x6^3 - 4*sqrt2*x4*x5*x6^2 - 4*sqrt2*x4*x7*x6^2 + 2*sqrt2*x5*x6*x7^2
fn r7 = -sqrt2*x4^2 - sqrt2*x2*x6 - sqrt2*x3*x6 - 2*sqrt2*x4*x7 + 4*sqrt2*x4*x5*x6^2 + 4*sqrt2*x4*x7*x6^2
)FX"},
      {"diag_m1", R"FX(name diag_m1
system P1
claim diag1mu_m(-1)
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn s2 = x4*x6
fn q3 = x4*x6
fn s3 = x6*x7
fn r5 = x2*x7*exp(x5) + x4^2*x6^2*exp(x5) - x3*x4*exp(x5)
fn r6 = -sqrt2*x4^2 - sqrt2*x2*x6
fn r7 = sqrt2*x3*x6 - 2*sqrt2*x4*x7
)FX"},
      {"diag_0", R"FX(name diag_0
system P1
claim diag1mu_m(0)
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q3 = x4*x6
fn s3 = x6*x7
fn q4 = x5*x6 + x6*x7
fn r5 = x2*x7*exp(x5) - 1/2*sqrt2*x3*x6 - 1/2*sqrt2*x1*x6*exp(x5)
fn r6 = -sqrt2*x2*x6 - x4*x6*exp(-x5) + 2/3*sqrt2*x6*x7^3 + sqrt2*x5*x6*x7^2
fn r7 = -2*sqrt2*x4*x7
)FX"},
      {"diag_1_2", R"FX(name diag_1_2
system P1
claim diag1mu_m(1/2)
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn s2 = -1/3*x4*x6
fn q3 = 2/3*x4*x6
fn s3 = x6*x7
fn q4 = x5*x6 + x6*x7
fn r5 = x2*x7*exp(x5) - 5/9*x4^2*x6^2*exp(x5) - 1/2*sqrt2*x3*x6 + 1/3*x3*x4*exp(x5) - 1/2*sqrt2*x1*x6*exp(x5) - 1/3*x3*x5*x6^2*exp(x5) - 1/3*x3*x7*x6^2*exp(x5)
fn r6 = 1/3*sqrt2*x4^2 - x4*x6*exp(-x5) - 2/3*sqrt2*x2*x6 + 2/3*sqrt2*x6*x7^3 + sqrt2*x5*x6*x7^2 - 2/3*sqrt2*x4*x5*x6^2 - 2/3*sqrt2*x4*x7*x6^2
fn r7 = -2*sqrt2*x4*x7 - 1/3*sqrt2*x3*x6
)FX"},
      {"s_0", R"FX(name s_0
system P1
claim s_lambda_m(0)
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = x3*x5
fn s2 = -x4*x6
fn s3 = x6*x7
fn q4 = x5*x6 + x6*x7
fn r5 = x2*x7*exp(x5) - 1/2*sqrt2*x3*x6 + x3*x4*exp(x5) - x4^2*x6^2*exp(x5) - x5*x6*x4^2*exp(x5) - 1/2*sqrt2*x1*x6*exp(x5) - x3*x5*x6^2*exp(x5) - x3*x7*x6^2*exp(x5) - x3*x5*x6*x7*exp(x5)
fn r6 = sqrt2*x4^2 - x4*x6*exp(-x5) + 2/3*sqrt2*x6*x7^3 + sqrt2*x5*x6*x7^2 - 2*sqrt2*x4*x5*x6^2 - 2*sqrt2*x4*x7*x6^2 - 2*sqrt2*x4*x5*x6*x7
fn r7 = -2*sqrt2*x4*x7 - sqrt2*x3*x6
)FX"},
      {"s_2", R"FX(name s_2
system P1
claim s_lambda_m(2)
point 0 0 0 0 0 0 0
fn f = exp(x5)
fn q2 = x3*x5
fn s2 = -1/3*x4*x6
fn q3 = 2/3*x4*x6
fn s3 = x6*x7
fn q4 = x5*x6 + x6*x7
fn r5 = x2*x7*exp(x5) - 1/2*sqrt2*x3*x6 + 1/3*x3*x4*exp(x5) - 5/9*x4^2*x6^2*exp(x5) - x5*x6*x4^2*exp(x5) - 1/2*sqrt2*x1*x6*exp(x5) - 1/3*x3*x5*x6^2*exp(x5) - 1/3*x3*x7*x6^2*exp(x5) - x3*x5*x6*x7*exp(x5)
fn r6 = 1/3*sqrt2*x4^2 - x4*x6*exp(-x5) + 2/3*sqrt2*x6*x7^3 - 2/3*sqrt2*x2*x6 + sqrt2*x5*x6*x7^2 - 2/3*sqrt2*x4*x5*x6^2 - 2/3*sqrt2*x4*x7*x6^2 - 2*sqrt2*x4*x5*x6*x7
fn r7 = -2*sqrt2*x4*x7 - 1/3*sqrt2*x3*x6
)FX"},
  };
  return sources;
}

}  // namespace g2hol::detail
