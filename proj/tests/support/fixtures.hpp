#pragma once

// Frozen expected values. Every number here was computed once with an
// independent 50-digit-precision implementation of the same formulas and
// pinned; the tests compare the double-precision library against these
// rather than against itself.

#include <array>

namespace tristab::testing::fx {

// ----------------------------------------------------------- classical roots
// Boundary locations recomputed from scratch (not the printed constants):
// mu_c0 from the discriminant zero, mu_c1/mu_c2 from the exact resonance
// conditions 27(1-gamma^2)/16 = 4/25 and 9/100, mu_c3 from the double zero
// of the classical determinant numerator.
inline constexpr double kMuC0Oracle = 0.038520896504551;
inline constexpr double kMuC1Oracle = 0.024293897142052;
inline constexpr double kMuC2Oracle = 0.013516016022453;
inline constexpr double kU0 = 0.072863276861468;        // u^2 double zero
inline constexpr double kGamma0 = 0.978172664645599;
inline constexpr double kMu0 = 0.010913667677201;
inline constexpr double kOmega1AtU0 = 0.959622914235418;
inline constexpr double kOmega2AtU0 = 0.281289641605097;

// -------------------------------------------- quadratic-form probe (stable)
// Parameters mu = 0.02, q1 = 0.995, a2 = 0.005, cd = 10: all three
// perturbations active, configuration inside the linear-stability region.
inline constexpr double kProbeMu = 0.02;
inline constexpr double kProbeQ1 = 0.995;
inline constexpr double kProbeA2 = 0.005;
inline constexpr double kProbeCd = 10.0;
inline constexpr double kProbeE = 0.12672341994955658;
inline constexpr double kProbeF = -0.63298242803772631;
inline constexpr double kProbeGPrinted = -0.01147463767926496;
inline constexpr double kProbeGCorrected = -1.2585512191288566;
inline constexpr double kProbeS = 1.0049611290986709;
inline constexpr double kProbeP = 0.17605483991394882;
inline constexpr double kProbeC2 = 1.0024819838236612;
inline constexpr double kProbeC0 = 0.13036218793127263;
inline constexpr double kProbeOmega1 = 0.88257788480020094;
inline constexpr double kProbeOmega2 = 0.47541287988471026;
// First-order gamma^2 inversions evaluated at the probe (exact classical
// value would be (1 - 2 mu)^2 = 0.9216).
inline constexpr double kProbeGammaSqFromW1 = 0.90412461804030908;
inline constexpr double kProbeGammaSqFromW2 = 0.90345556677634353;
inline constexpr double kProbeGammaSqFromU = 0.90168668505490102;

// ----------------------------------------------------------------- equilibria
// (mu, q1, a2, cd) -> (x, y) of the displaced point, L4 branch.
inline constexpr double kEqClassicalX = 0.3;                 // mu=0.2, q1=1, a2=0
inline constexpr double kEqClassicalY = 0.8660254037844386;
inline constexpr double kEqOblateX = 0.395;                  // mu=0.1, q1=1, a2=0.01
inline constexpr double kEqOblateY = 0.86313382508160341;
inline constexpr double kEqRadiatedX = 0.38319126427494754;  // mu=0.1, q1=0.95, a2=0
inline constexpr double kEqRadiatedY = 0.85610088882512436;
// mu=0.1, q1=0.95, a2=0.02, default cd:
inline constexpr double kEqFullX = 0.37352743893862389;
inline constexpr double kEqFullY = 0.85024704242772031;
inline constexpr double kEqSeriesX = 0.37366666652460445;
inline constexpr double kEqSeriesY = 0.85043694653088431;
inline constexpr double kEqSeriesA = 0.47366666652460443;

// -------------------------------------- coefficient tables at omega1 = 9/10,
// omega2 = 3/10 (rational frequencies, so the exact-field evaluation covers
// every kernel including the sqrt(3) columns).
inline constexpr double kT1ProbeA[7] = {
    0.90348126098155950939,  1.2092996155624927737, 60988.850958474266720,
    -0.78643345943754070034, -9.9992443629309215269, -1.0324663690229138304,
    -0.33653439105809323002};
inline constexpr double kT1ProbeA13Symmetric = 7.8593281864461986724;
inline constexpr double kT1ProbeB[7] = {
    -2.5150667005924902766, 40.009902221762390846, -150.90316778109022623,
    23.919692826681644058,  -28.480344126871233095, 22.473108942689298545,
    511416.01323093189245};
inline constexpr double kT1ProbeC[7] = {
    -4.8702178730825100759, 0.094500283170791796610, -4.6747712301111825502,
    -1.8354612261159532607, 11.403445170042895238,   0.18890333326850736152,
    20855.883641313122857};
inline constexpr double kT2Probe[6] = {
    1337.4459483112810547, 66.968228485171904734, 402.27960339704565770,
    526.52956641440833318, 55.450048059054242963, -294.88271675946465068};

// Spot values for single kernels.
inline constexpr double kA11AtFourFifths = 1.0196502057613169;  // s1 = 4/5

// -------------------------------------------------- determinant pipeline
// Expansion coefficients at the unperturbed double-zero frequencies.
inline constexpr double kDn0[6] = {
    972.54500412117629531, 41.990568875867103499, 271.44246114534159573,
    439.43627336275153941, 35.1585511696779163,   -180.08335351601848949};
inline constexpr double kU1 = 3.84008097086483;
inline constexpr double kU2 = 6.60266548635779;
inline constexpr double kU3 = 0.315740866399694;
inline constexpr double kU5 = 8.0191310015852;
inline constexpr double kU6 = 3.81205069591772;
// Shifts the pipeline actually produces (the printed closed form carries
// (-0.120489, -0.373118, 2.904291) instead; see the errata document).
inline constexpr double kAlpha[3] = {3.657761566028, 2.88524043854101,
                                     -3.12500500851634};

// ------------------------------------------------------ determinant probe
// mu = 0.01, q1 = 0.998, a2 = 0.001, cd = 1e3.
inline constexpr double kKamProbeOmega1 = 0.95643896842330922;
inline constexpr double kKamProbeOmega2 = 0.29279392989488712;
inline constexpr double kKamProbeU = 0.28003952426927253;
inline constexpr double kKamProbeD[6] = {
    1067.557824974894, 50.801601146172935, 304.0305696542468,
    487.1430366946541, 38.60968016767184,  -193.0804296584001};
inline constexpr double kKamProbeTotal = 2.79561475294511;

// --------------------------------------------------------- normal form ABC
// Classical mu = 0.01.
inline constexpr double kAbcClassicalOmega1 = 0.96332210908509952;
inline constexpr double kAbcClassicalOmega2 = 0.26834774854251253;
inline constexpr double kAbcClassicalA = 0.17179039693356218;
inline constexpr double kAbcClassicalB = -1.1934403157194737;
inline constexpr double kAbcClassicalC = -3.5848948761584061;
// Stable perturbed probe (same parameters as the quadratic-form probe).
inline constexpr double kAbcProbeA = 397.97147632574683;
inline constexpr double kAbcProbeAAlternate = 1.3089410912088395;
inline constexpr double kAbcProbeB = 40.586139323646741;
inline constexpr double kAbcProbeC = -598.72078308595928;
// Near the 2:1 resonance (classical mu = 0.024294) the drag columns blow
// up; six-significant-digit magnitudes, compared at 1e-5 relative.
inline constexpr double kAbcResonantA = 1.01966;
inline constexpr double kAbcResonantB = 597033.0;
inline constexpr double kAbcResonantC = 1.19989e6;
// Diagnostic -(A w2^2 + 2 B w1 w2 + C w1^2) against the closed-form
// determinant, classically (reported, not asserted equal).
inline constexpr double kDiagnosticAtMu005 = 2.083316;   // closed: 0.847917
inline constexpr double kClosedAtMu005 = 0.847917;
inline constexpr double kDiagnosticAtMu01 = 3.931395;    // closed: 0.199468
inline constexpr double kClosedAtMu01 = 0.199468;

// ------------------------------------------------------------- dynamics
// mu = 0.2, q1 = 0.96, a2 = 0.05, cd = 10, state (0.3, 0.5, 0.02, -0.01).
inline constexpr double kAccelProbeAx = -0.45592550729352022;
inline constexpr double kAccelProbeAy = -0.91864384857153636;
inline constexpr double kAccelProbeJacobi = 3.1312017280017739;
// Classical L4 rest state at mu = 0.5 has Jacobi constant 11/4.
inline constexpr double kJacobiClassicalL4HalfMu = 2.75;

// ------------------------------------------------------------ moser report
// Frequencies (1.0, 0.3): minimal |k1 w1 + k2 w2| = 0.1 at (1, -3)/(-1, 3).
inline constexpr double kMoserDivisors10_03[5] = {0.09, 11.73, -0.1728,
                                                  -0.204, 1.104};

} // namespace tristab::testing::fx
