// Generated by tests/oracles/make_oracles.py (mpmath, 40 digits). Do not edit.
#pragma once

#include <complex>

namespace oracle {

using C = std::complex<double>;
struct Pair { C arg; C value; };

inline const Pair log_gamma[] = {
    {{0.5, 1.0}, {-0.65279064420437291527, -0.95500772434256910956}},
    {{3.7000000000000001776, -2.2000000000000001776}, {0.72644675162442647431, -2.7180642924411456664}},
    {{0.10000000000000000555, 0.010000000000000000208}, {2.2476658232303512977, -0.10390589166538166232}},
    {{-2.5, 0.2999999999999999889}, {-0.43208889261320192052, -9.0933454212897415073}},
    {{10.0, 50.0}, {-40.400262350482971022, 159.62737280472833495}},
    {{0.25, 200.0}, {-314.56490597209839732, 859.27082631126093342}},
    {{0.0010000000000000000208, 0.0}, {6.9071788853838536617, 0.0}},
    {{30.0, 0.0}, {71.25703896716800901, 0.0}},
    {{-7.2999999999999998224, -0.5}, {-8.8667804146081666581, 23.517213828496360696}},
};

inline const Pair digamma[] = {
    {{0.5, 1.0}, {-0.051761650994412542793, 1.5649405178158792826}},
    {{3.7000000000000001776, -2.2000000000000001776}, {1.3576969420395713574, -0.5997294051758555323}},
    {{-2.5, 0.2999999999999999889}, {1.1080030134754655709, 2.2145460646932182734}},
    {{20.0, 5.0}, {3.0023421880137422588, 0.25095325000863421018}},
};

inline const Pair trigamma[] = {
    {{0.5, 1.0}, {0.036724551941014544561, -1.1170686578296001268}},
    {{3.7000000000000001776, -2.2000000000000001776}, {0.21250257176381816423, 0.14451070330072975242}},
    {{-2.5, 0.2999999999999999889}, {4.1908450429860548163, -0.032158010451995170927}},
    {{20.0, 5.0}, {0.048110994995252865129, -0.012331085968810349501}},
};

inline const Pair zeta[] = {
    {{2.0, 0.0}, {1.6449340668482264365, 0.0}},
    {{0.5, 14.134725141734692855}, {1.1667488738932820515e-16, -7.3288818837284404118e-16}},
    {{0.5, 100.0}, {2.6926198856813240905, -0.020386029602598161771}},
    {{0.69999999999999995559, 30.0}, {0.1456667369372427244, -0.54703563072360154274}},
    {{1.5, -7.0}, {1.0252831987529303578, -0.23053376151897178354}},
    {{0.5, 1000.0}, {0.35633436719439605507, 0.93199783123299366512}},
    {{1.0, 2.0}, {0.5981655697623817367, -0.3518547452178452905}},
    {{3.0, 0.5}, {1.1739287246387467673, -0.091730267113479445801}},
};

inline const Pair sigma_minus_half_3i_n360[] = {
    {{-0.5, 3.0}, {0.64653452920849945427, -0.09818611529220871016}},
};

struct F21Case { C a, b, c, z, value; };
inline const F21Case f21[] = {
    {{0.5, 0.0}, {0.25, 0.0}, {1.5, 0.0}, {-0.5, 0.0}, {0.96454602951540004275, 0.0}},
    {{1.0, 2.0}, {0.2999999999999999889, 0.0}, {2.0, -1.0}, {0.4000000000000000222, 0.2999999999999999889}, {0.89375456802194473598, 0.081444951551029847367}},
    {{0.5, 10.0}, {0.75, 0.0}, {1.5, 0.0}, {-0.9000000000000000222, 0.0}, {0.12744275867127282554, 0.011165650434524447294}},
    {{2.0, 0.0}, {3.0, 0.0}, {4.0, 0.0}, {0.94999999999999995559, 0.0}, {48.841646139292622035, 0.0}},
};

// F(a, b; 2b; z) on the negative axis
inline const F21Case f21_2b[] = {
    {{0.5, 3.0}, {0.5, 3.0}, {1.0, 6.0}, {-4.0, 0.0}, {-0.64215355202605238212, -0.17539484066703650095}},
    {{0.25, 1.0}, {1.5, -2.0}, {3.0, -4.0}, {-0.2999999999999999889, 0.0}, {0.9541306999793267902, -0.13339356177577086767}},
    {{1.1999999999999999556, 0.0}, {0.69999999999999995559, 0.0}, {1.3999999999999999112, 0.0}, {-5.0, 0.0}, {0.32827244506599870879, 0.0}},
};

struct MomentCase { int j; C A; C value; };
// int u^j exp(A u - u^2) du over the real line
inline const MomentCase gauss_moment[] = {
    {0, {0.0, 0.0}, {1.7724538509055160273, 0.0}},
    {1, {2.0, 0.0}, {4.8180290946987220571, 0.0}},
    {3, {1.0, -2.0}, {-1.1633791469834074308, -0.12513383166158570809}},
    {6, {-3.0, 0.5}, {283.27611757782550396, -1200.7561172821006114}},
    {5, {0.0, 4.0}, {2.8608291974566463484e-49, -0.016231812340065862026}},
};

struct HHatCase { double K, G; C s; C value; };
// int r h(r) Gamma(s+ir)/Gamma(1-s+ir) dr, h(r) = (r^2+1/4)(e^{-((r-K)/G)^2} + e^{-((r+K)/G)^2})
inline const HHatCase h_hat[] = {
    {20, 5, {0.2999999999999999889, 2.0}, {-9441405.6827948359881, -2990191.0996399214154}},
    {20, 5, {0.75, 0.0}, {1.7773442219319878603e-42, 510330.3648888900844}},
    {30, 4, {0.10000000000000000555, -3.0}, {-131993390.21527882701, -32284818.307590225334}},
};

struct AfeCase { double kappa; int parity; double y; double value; };
inline const AfeCase afe_weight[] = {
    {10.0, 1, 0.5, 1.1515181241614368815},
    {10.0, 1, 2.0, 0.051830350342446779889},
    {10.0, -1, 0.7, 0.91652223212368678471},
    {25.0, -1, 3.0, 1.1416074899580896441},
    {25.0, 1, 0.05, 1.0071002882717803911},
};

struct ChiCase { double kappa; int parity; C s; C value; };
inline const ChiCase chi[] = {
    {13.779751351891, 1, {0.2999999999999999889, 1.0}, {0.0029235497818988523745, -1.3675159692628348704}},
    {9.533695261354, -1, {0.80000000000000004441, -0.4000000000000000222}, {-0.73631875085551200994, -0.25497415006215585437}},
    {20.0, 1, {0.10000000000000000555, 5.0}, {1.1315248387235488668, 2.1850706836411585086}},
};

}  // namespace oracle
