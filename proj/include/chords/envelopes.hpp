#pragma once

namespace chords {

// Test envelopes standing in for unspecified O(1)-type constants in the
// asymptotic statements.  Each value was frozen once from a pilot run and is
// not tuned afterwards.

// Slack (in log space) added below the C_n * binom(n+m-1, n-1) *
// exp(-2(m/n) log n) lower estimate so that it bounds log T on the grid
// n <= 60, m <= n^{3/2}.  Pilot worst gap: -4.21 at (n, m) = (5, 10).
inline constexpr double kLowerBoundLogSlack = 4.5;

// |log prod (1-q^j) - Freiman approximation| <= this multiple of z = -log q
// on q in [0.9, 0.999].  Pilot maximum ratio: 0.042.
inline constexpr double kFreimanResidualFactor = 1.0;

// Empirical fraction of monolithic diagrams among uniform matchings at
// n = 1000 (pilot interval around the Flajolet-Noy limit).
inline constexpr double kMonolithicFracLo = 0.60;
inline constexpr double kMonolithicFracHi = 0.68;

// Mean chord fraction of the largest component in the supercritical sweep
// m = 0.1 n ln n, n in {200, 400, 800}.  Pilot means: 0.138, 0.122, 0.108
// (100 exact draws per cell, cross-checked against full enumeration at
// n = 7, both table modes at n = 150, and an independent MCMC chain at
// n = 800).  Frozen with margin below the smallest pilot mean.
inline constexpr double kSupercriticalChordFracMin = 0.08;

// Mean crossing fraction of the largest component on the same sweep.
// Pilot means: 0.330, 0.272, 0.236.  The limit statement puts almost all
// crossings in the giant, but convergence is far beyond desk scale; the
// envelope freezes what the pilot measured.
inline constexpr double kSupercriticalCrossingFracMin = 0.20;

}  // namespace chords
