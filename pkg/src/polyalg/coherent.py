"""Coherent states, canonical conjugates, and the resolution of identity.

Barut-Girardello states are lowering-operator eigenvectors built from the
amplitude recurrence; Perelomov-type states are exp(gamma N+) on the lowest
state.  The F and G maps turn any ladder algebra into a Heisenberg or
su(2)/su(1,1) pair on a fixed irrep, with the free constant pinned on the
vacuum row.  The finite-representation identity check integrates |gamma)
(gamma| against the confluent-hypergeometric measure with analytic angular
reduction and Gauss-Legendre radial panels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from .core import LabelError, LadderRep, VerificationReport
from .polynomial import Polynomial, antidifference
from .quadratic import QuadraticClass


class ConvergenceError(ArithmeticError):
    """Series failed to converge (or provably diverges)."""


class PoleError(ZeroDivisionError):
    """The F/G rescaling function hits a zero of C - g on a basis state."""


@dataclass(frozen=True)
class HypergeomParams:
    upper: Tuple[float, ...]
    lower: Tuple[float, ...]
    argument: Union[float, complex]


def _terminates(upper: Sequence) -> Optional[int]:
    """Smallest series length if an upper parameter is a nonpositive integer."""
    cut = None
    for a in upper:
        fa = Fraction(a) if not isinstance(a, float) else None
        if fa is not None and fa.denominator == 1 and fa <= 0:
            n = int(-fa) + 1
            cut = n if cut is None else min(cut, n)
        elif isinstance(a, float) and a <= 0 and float(a).is_integer():
            n = int(-a) + 1
            cut = n if cut is None else min(cut, n)
    return cut


def hypergeom(params: HypergeomParams, max_terms: int = 10_000, tol: float = 1e-16):
    """Generalized hypergeometric sum pFq(upper; lower; x).

    Terminating series (a nonpositive-integer upper parameter) are summed
    exactly in rational arithmetic when all inputs are rational; otherwise
    the partial sum stops on a ratio test.  Nonterminating series with
    p > q + 1 diverge for x != 0 and raise.
    """
    upper, lower, x = list(params.upper), list(params.lower), params.argument
    cut = _terminates(upper)
    p, q = len(upper), len(lower)
    if cut is None and p > q + 1 and x != 0:
        raise ConvergenceError(
            f"{p}F{q} does not converge for nonzero argument; "
            "only truncated evaluation is meaningful"
        )
    if cut is None and p == q + 1 and abs(x) >= 1:
        raise ConvergenceError(f"{p}F{q} requires |x| < 1, got {abs(x)}")

    exact = cut is not None and all(
        isinstance(v, (int, Fraction)) for v in upper + lower + [x]
    )
    if exact:
        term = Fraction(1)
        total = Fraction(1)
        for n in range(cut - 1):
            num = Fraction(1)
            for a in upper:
                num *= Fraction(a) + n
            den = Fraction(n + 1)
            for b in lower:
                den *= Fraction(b) + n
            if den == 0:
                raise ZeroDivisionError("lower parameter hit a nonpositive integer")
            term = term * num / den * Fraction(x)
            total += term
        return total

    term = 1.0 + 0.0j if isinstance(x, complex) else 1.0
    total = term
    limit = cut if cut is not None else max_terms
    for n in range(limit - 1 if cut is not None else max_terms):
        num = 1.0
        for a in upper:
            num *= float(a) + n
        den = float(n + 1)
        for b in lower:
            den *= float(b) + n
        if den == 0:
            raise ZeroDivisionError("lower parameter hit a nonpositive integer")
        term = term * num / den * x
        total += term
        if cut is None and abs(term) < tol * max(1.0, abs(total)):
            return total
    if cut is None:
        raise ConvergenceError("series did not converge within max_terms")
    return total


@dataclass
class CoherentState:
    kind: str  # "BG" or "Perelomov"
    rep_labels: dict
    parameter: complex
    coefficients: np.ndarray  # unnormalized, c[0] = 1 for BG
    norm_constant: float
    truncation: int
    tail_bound: float

    def vector(self) -> np.ndarray:
        return self.norm_constant * self.coefficients


def bg_state(rep: LadderRep, alpha: complex, tol: float = 1e-12) -> CoherentState:
    """Eigenvector of N- with eigenvalue alpha on an unbounded-above ladder.

    c_{n+1} = alpha c_n / lower_amps[n] from c_0 = 1.  Only defined for
    truncations of infinite-dimensional representations; the truncation
    point is chosen where the next-term ratio falls below tol.
    """
    if not rep.truncated:
        raise LabelError(
            "Barut-Girardello states require an unbounded-above representation"
        )
    alpha = complex(alpha)
    coeffs = [1.0 + 0.0j]
    trunc = rep.dim
    tail = 0.0
    for n in range(rep.dim - 1):
        amp = rep.lower_amps[n]
        if amp == 0.0:
            raise ConvergenceError(
                f"lowering amplitude stalls at step {n}; cannot continue the recurrence"
            )
        nxt = alpha * coeffs[-1] / amp
        coeffs.append(nxt)
        if n > 2 and abs(nxt) < tol * max(abs(c) for c in coeffs):
            trunc = n + 2
            tail = abs(nxt)
            break
    else:
        if alpha != 0:
            ratio = abs(coeffs[-1]) / max(abs(c) for c in coeffs)
            if ratio > tol:
                raise ConvergenceError(
                    f"representation cutoff {rep.dim} too small: terminal ratio {ratio:.2e}"
                )
    vec = np.zeros(rep.dim, dtype=complex)
    vec[: len(coeffs)] = coeffs
    norm = float(np.linalg.norm(vec))
    return CoherentState(
        kind="BG",
        rep_labels=dict(rep.labels),
        parameter=alpha,
        coefficients=vec,
        norm_constant=1.0 / norm,
        truncation=trunc,
        tail_bound=tail,
    )


def bg_eigen_residual(rep: LadderRep, state: CoherentState) -> float:
    """|| N- |a> - a |a> || / || |a> ||, excluding the boundary artifact row."""
    _, _, nminus = rep.matrices()
    v = state.coefficients
    resid = nminus @ v - state.parameter * v
    # the last row of a truncated rep misses its outside-the-cutoff source
    if rep.truncated and state.truncation >= rep.dim:
        resid[rep.dim - 1] = 0.0
    return float(np.linalg.norm(resid) / np.linalg.norm(v))


def perelomov_state(rep: LadderRep, gamma: complex) -> CoherentState:
    """exp(gamma N+) |0>: c_n = gamma^n prod_i<n raise_amps[i] / n!.

    Exact (finite sum) on finite representations.  On truncated infinite
    representations the terms must decay inside the cutoff: for deformation
    order >= 2 the series has zero radius and any nonzero gamma raises.
    """
    gamma = complex(gamma)
    coeffs = [1.0 + 0.0j]
    for n in range(rep.dim - 1):
        coeffs.append(coeffs[-1] * gamma * rep.raise_amps[n] / (n + 1))
    vec = np.array(coeffs, dtype=complex)
    tail = 0.0
    if rep.truncated and gamma != 0:
        mags = np.abs(vec)
        peak = int(np.argmax(mags))
        if peak >= rep.dim - 2 or mags[-1] > 1e-13 * mags[peak]:
            raise ConvergenceError(
                f"exp(gamma N+) diverges inside the cutoff for |gamma| = {abs(gamma)}"
            )
        tail = float(mags[-1] / mags[peak])
    norm = float(np.linalg.norm(vec))
    return CoherentState(
        kind="Perelomov",
        rep_labels=dict(rep.labels),
        parameter=gamma,
        coefficients=vec,
        norm_constant=1.0 / norm,
        truncation=rep.dim,
        tail_bound=tail,
    )


# -- canonical conjugate and deformation maps --------------------------------

@dataclass
class MapResult:
    matrix: np.ndarray
    constant: float  # alpha for the conjugate, epsilon for the deformation
    report: VerificationReport


def _casimir_and_g(rep: LadderRep, f: Polynomial):
    g = antidifference(f)
    # C = N+N- + g(N0-1); on the lowest state the first term vanishes
    c_value = g(rep.n0_diag[0] - 1.0)
    return c_value, g


def canonical_conjugate(rep: LadderRep, f: Polynomial, tol: float = 1e-10) -> MapResult:
    """P~+ = P+ F(C, P0) with F = (P0 + alpha)/(C - g(P0)); [P-, P~+] = 1.

    alpha is pinned on the vacuum row ((P0 + alpha)|0> = |0>).  C - g(P0)
    equals the squared raising amplitude, so it vanishes on the top state
    of a finite representation: pole error there.
    """
    if not rep.truncated:
        # C - g(P0) = amp+^2 vanishes on the highest state of a finite irrep
        raise PoleError(
            "F(C, P0) diverges on the highest state of a finite representation"
        )
    c_value, g = _casimir_and_g(rep, f)
    alpha = 1.0 - rep.n0_diag[0]
    mat = np.zeros((rep.dim, rep.dim))
    for n in range(rep.dim - 1):
        denom = c_value - g(rep.n0_diag[n])
        if abs(denom) < 1e-13:
            raise PoleError(f"C - g(P0) vanishes on basis state {n}")
        mat[n + 1, n] = rep.raise_amps[n] * (rep.n0_diag[n] + alpha) / denom

    _, _, nminus = rep.matrices()
    comm = nminus @ mat - mat @ nminus
    rows = range(rep.dim - 2)  # stencil of the commutator touches n+1
    resid = max(
        (abs(comm[i, i] - 1.0) for i in rows),
        default=0.0,
    )
    off = np.abs(comm - np.diag(np.diag(comm))).max() if rep.dim > 1 else 0.0
    report = VerificationReport()
    report.add("[P-, P~+] - 1 (interior diag)", resid, tol)
    report.add("[P-, P~+] off-diagonal", off, tol)
    return MapResult(matrix=mat, constant=alpha, report=report)


def deformation_map(
    rep: LadderRep,
    f: Polynomial,
    lam: int,
    epsilon: Optional[float] = None,
    tol: float = 1e-10,
) -> MapResult:
    """P-bar = P- G(C, P0) with [P+, P-bar] = 2 lam P0 on interior rows.

    G = (lam (P0 - P0^2) + eps)/(C - g(P0 - 1)); lam = +1 targets su(2),
    lam = -1 targets su(1,1).  eps defaults to the vacuum-row solve
    eps = lam p0 (p0 - 1); any eps satisfies the relation on rows n >= 1.
    """
    if lam not in (1, -1):
        raise ValueError("lam must be +1 or -1")
    c_value, g = _casimir_and_g(rep, f)
    p0 = rep.n0_diag[0]
    if epsilon is None:
        epsilon = lam * p0 * (p0 - 1.0)

    def G(x: float) -> float:
        denom = c_value - g(x - 1.0)
        if abs(denom) < 1e-13:
            raise PoleError(f"C - g(P0-1) vanishes at P0 = {x}")
        return (lam * (x - x * x) + epsilon) / denom

    mat = np.zeros((rep.dim, rep.dim))
    for n in range(1, rep.dim):
        mat[n - 1, n] = rep.lower_amps[n - 1] * G(rep.n0_diag[n])

    _, nplus, _ = rep.matrices()
    comm = nplus @ mat - mat @ nplus
    # the top row cannot satisfy an uncentered 2*lam*P0 (commutators are
    # traceless); for truncated reps it is a cutoff artifact anyway
    interior = range(rep.dim - 1)
    resid = max(
        (abs(comm[i, i] - 2.0 * lam * rep.n0_diag[i]) for i in interior),
        default=0.0,
    )
    off = np.abs(comm - np.diag(np.diag(comm))).max() if rep.dim > 1 else 0.0
    report = VerificationReport()
    report.add(f"[P+, P-bar] - 2({lam:+d})P0 (interior diag)", resid, tol)
    report.add("[P+, P-bar] off-diagonal", off, tol)
    return MapResult(matrix=mat, constant=float(epsilon), report=report)


# -- resolution of identity for finite Q-(1,1) irreps ------------------------

def _phi_series(a: float, b: float, x: float) -> float:
    """Confluent hypergeometric 1F1(a; b; x), direct series (x >= 0 or terminating)."""
    term = 1.0
    total = 1.0
    n = 0
    while True:
        num = a + n
        if num == 0.0:  # terminating series: stop before touching (b+n)
            return total
        term *= num / ((b + n) * (n + 1)) * x
        total += term
        n += 1
        if abs(term) < 1e-18 * max(1.0, abs(total)) or n > 10_000:
            return total


def _phi_negx(a: float, b: float, x: float) -> float:
    """1F1(a; b; -x) for x >= 0, stably.

    Kummer transform e^{-x} 1F1(b-a; b; x) for moderate x; for large x the
    asymptotic expansion Gamma(b)/Gamma(b-a) x^{-a} 2F0(a, a-b+1;; 1/x),
    truncated at its smallest term.
    """
    ba = b - a
    if x < 40.0 or (ba <= 0 and float(ba).is_integer()):
        # second case: 1/Gamma(b-a) = 0, the algebraic tail vanishes and
        # the whole function is exponentially small
        return math.exp(-x) * _phi_series(ba, b, x)
    pref = math.gamma(b) / math.gamma(ba) * x ** (-a)
    total = 1.0
    term = 1.0
    best = math.inf
    n = 0
    while n < 60:
        nxt = term * (a + n) * (a - b + 1 + n) / ((n + 1) * x)
        if abs(nxt) >= abs(term) and n > 0:
            break  # asymptotic series turned; stop at smallest term
        term = nxt
        total += term
        n += 1
        if abs(term) < 1e-18 * abs(total):
            break
    return pref * total


def identity_check_finite(
    rep: LadderRep, quadrature_points: int = 400, tol: float = 1e-6
) -> VerificationReport:
    """Numerical resolution of identity for a finite Q-(1,1) irrep.

    Measure (radial part, x = r^2):
        w(x) = (1/2 pi) * (2l-k+1)/(2l+k) * Phi(k-2l; 1-2l-k; x)
                                           * Phi(2l-k+2; 2l+k+1; -x)
    The angular integral kills off-diagonal terms, so the check reduces to
    the diagonal moments  a_n^2 * Int x^n w(x)/S(x) dx = 1  with S the
    squared-norm polynomial of the state family.  The first Phi terminates
    (k-2l is a nonpositive integer); the denominator (2l+k) is the one that
    makes the moments close (the printed (2l+k+1) does not).
    """
    if rep.truncated:
        raise LabelError("identity check applies to finite representations")
    if rep.labels.get("class") != QuadraticClass.QMINUS11.value:
        raise LabelError("identity check implemented for Q-(1,1) irreps")
    k = Fraction(rep.labels["k"])
    l = Fraction(rep.labels["l"])
    if (k - 2 * l).denominator != 1 or k - 2 * l > 0:
        raise ConvergenceError(
            "measure factor Phi(k-2l; ...) does not terminate for this label"
        )
    dim = rep.dim

    # coefficient family of |gamma>: a_n = b_{dim-1-n} with b_m the
    # Perelomov coefficients prod(raise)/m!
    b = [1.0]
    for m in range(dim - 1):
        b.append(b[-1] * rep.raise_amps[m] / (m + 1))
    a = np.array(b[::-1])
    s_poly = np.array([v * v for v in a])  # S(x) = sum a_n^2 x^n

    kf, lf = float(k), float(l)
    rho = (2 * lf - kf + 1.0) / (2 * lf + kf)

    def weight_over_s(x: float) -> float:
        phi1 = _phi_series(kf - 2 * lf, 1.0 - 2 * lf - kf, x)
        phi2 = _phi_negx(2 * lf - kf + 2.0, 2 * lf + kf + 1.0, x)
        s = 0.0
        for cn in reversed(s_poly):
            s = s * x + cn
        return rho * phi1 * phi2 / s

    # composite Gauss-Legendre on doubling panels until the tail is spent
    nodes, wts = np.polynomial.legendre.leggauss(max(8, quadrature_points // 40))
    moments = np.zeros(dim)
    lo = 0.0
    hi = 1.0
    for _ in range(200):
        x = 0.5 * (hi - lo) * nodes + 0.5 * (hi + lo)
        w = 0.5 * (hi - lo) * wts
        f0 = np.array([weight_over_s(xi) for xi in x])
        panel = np.array([np.sum(w * f0 * x**n) for n in range(dim)])
        moments += panel
        if hi > 4.0 * dim and abs(panel[-1]) < 1e-12 * max(abs(moments[-1]), 1e-30):
            break
        lo, hi = hi, hi * 2.0
    deviations = a * a * moments - 1.0
    report = VerificationReport()
    report.add("max |projector diagonal - 1|", float(np.max(np.abs(deviations))), tol)
    return report
