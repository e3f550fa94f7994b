"""Separability analysis along the channel: invariant polynomials in
k = exp(-Gamma t), the quartic separability equation, entanglement time with
an independent bisection cross-check, and closed-form special cases.

The local symplectic invariants of the evolved state are exact polynomials
in k.  Writing n_i = N_i + 1/2, m1 = Re M1 (bath 1 squeezing is taken real,
the phi1 = 0 reference choice), p2 = Re M2, and D_i = Det(sigma_i_inf):

    Det sigma(t) = sum_j Sigma_j k^j      (degree 4)
    Det alpha(t) = sum_j alpha_j k^j      (degree 2)
    Det beta(t)  = sum_j beta_j k^j       (degree 2)
    Det gamma(t) = gamma_2 k^2

The PPT boundary nt_minus = 1/2 is equivalent to

    4 Det sigma(t) + 1/4 - Det alpha(t) - Det beta(t) + 2 Det gamma(t) = 0

which is quartic in k; its solution closest to (and not exceeding) one gives
the entanglement time t_ent = -(1/Gamma) ln k_ent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import ChannelSpec, asymptotic_covariance
from .errors import (
    DomainError,
    MethodDisagreementError,
    NotEntangledAtStartError,
    UnphysicalChannelError,
)
from .states import StandardForm, log_negativity

# Gamma*t horizon beyond which the state is numerically asymptotic
T_HORIZON = 60.0
K_MIN = math.exp(-T_HORIZON)
# quartic-vs-bisection agreement tolerance, absolute in k
K_AGREE = 1e-7

NEVER = math.inf


@dataclass(frozen=True)
class InvariantPolynomials:
    """Coefficients (ascending powers of k) of the four evolved invariants."""

    sigma_coeffs: tuple[float, float, float, float, float]
    alpha_coeffs: tuple[float, float, float]
    beta_coeffs: tuple[float, float, float]
    gamma2: float

    def det_sigma_at(self, k: float) -> float:
        return _horner(self.sigma_coeffs, k)

    def det_alpha_at(self, k: float) -> float:
        return _horner(self.alpha_coeffs, k)

    def det_beta_at(self, k: float) -> float:
        return _horner(self.beta_coeffs, k)

    def det_gamma_at(self, k: float) -> float:
        return self.gamma2 * k * k


@dataclass(frozen=True)
class SeparabilityQuartic:
    """u k^4 + v k^3 + w k^2 + y k + z = 0 marks the PPT boundary."""

    u: float
    v: float
    w: float
    y: float
    z: float

    def evaluate(self, k: float) -> float:
        return (((self.u * k + self.v) * k + self.w) * k + self.y) * k + self.z

    def coefficients(self) -> tuple[float, float, float, float, float]:
        return (self.u, self.v, self.w, self.y, self.z)


@dataclass(frozen=True)
class EntanglementTimeResult:
    t_ent: float                 # math.inf means "never separable"
    k_ent: float                 # 0.0 when never
    method: str                  # "quartic", "bisection" or "closed_form"
    residual: float              # |nt_minus(t_ent) - 1/2|
    tangent: bool = False        # nt_minus touches 1/2 without crossing

    @property
    def never(self) -> bool:
        return math.isinf(self.t_ent)


def _horner(coeffs_ascending, k: float) -> float:
    out = 0.0
    for c in reversed(coeffs_ascending):
        out = out * k + c
    return out


def invariant_polynomials(sf: StandardForm, channel: ChannelSpec) -> InvariantPolynomials:
    """Exact coefficient sets for a standard-form state in uncorrelated baths."""
    b1, b2 = channel.bath1, channel.bath2
    if abs(b1.M.imag) > 1e-12:
        raise UnphysicalChannelError(
            "bath 1 squeezing must be real (phi1 = 0 reference choice); "
            f"got Im M1 = {b1.M.imag:.3e}")
    a, b, c1, c2 = sf.a, sf.b, sf.c1, sf.c2
    n1 = b1.N + 0.5
    n2 = b2.N + 0.5
    m1 = b1.M.real
    p2 = b2.M.real
    d1 = n1 * n1 - m1 * m1           # Det of bath-1 block = 1/(4 mu1^2)
    d2 = n2 * n2 - abs(b2.M) ** 2    # Det of bath-2 block = 1/(4 mu2^2)
    cp = c1 * c1 + c2 * c2
    cm = c1 * c1 - c2 * c2

    s4 = (a * a * b * b + a * a * d2 + b * b * d1
          - 2.0 * a * a * b * n2 - 2.0 * a * b * b * n1 + 4.0 * a * b * n1 * n2
          - 2.0 * a * n1 * d2 - 2.0 * b * n2 * d1
          + cp * (a * n2 + b * n1 - n1 * n2 - m1 * p2 - a * b)
          - cm * (a * p2 + b * m1 - m1 * n2 - n1 * p2)
          + c1 * c1 * c2 * c2 + d1 * d2)
    s3 = (-2.0 * a * a * d2 - 2.0 * b * b * d1
          + 2.0 * a * a * b * n2 + 2.0 * a * b * b * n1 - 8.0 * a * b * n1 * n2
          + 6.0 * a * n1 * d2 + 6.0 * b * n2 * d1
          + cm * (a * p2 + b * m1 - 2.0 * m1 * n2 - 2.0 * n1 * p2)
          - cp * (a * n2 + b * n1 - 2.0 * n1 * n2 - 2.0 * m1 * p2)
          - 4.0 * d1 * d2)
    s2 = (a * a * d2 + b * b * d1 + 4.0 * a * b * n1 * n2
          - 6.0 * a * n1 * d2 - 6.0 * b * n2 * d1
          - cp * (n1 * n2 + m1 * p2) + cm * (m1 * n2 + n1 * p2)
          + 6.0 * d1 * d2)
    s1 = 2.0 * a * n1 * d2 + 2.0 * b * n2 * d1 - 4.0 * d1 * d2
    s0 = d1 * d2

    al2 = a * a - 2.0 * a * n1 + d1
    al1 = 2.0 * a * n1 - 2.0 * d1
    al0 = d1
    be2 = b * b - 2.0 * b * n2 + d2
    be1 = 2.0 * b * n2 - 2.0 * d2
    be0 = d2

    return InvariantPolynomials(
        sigma_coeffs=(s0, s1, s2, s3, s4),
        alpha_coeffs=(al0, al1, al2),
        beta_coeffs=(be0, be1, be2),
        gamma2=c1 * c2,
    )


def separability_quartic(p: InvariantPolynomials) -> SeparabilityQuartic:
    """PPT-boundary quartic 4 Det sigma + 1/4 - Det alpha - Det beta + 2 Det gamma."""
    s0, s1, s2, s3, s4 = p.sigma_coeffs
    a0, a1, a2 = p.alpha_coeffs
    b0, b1, b2 = p.beta_coeffs
    return SeparabilityQuartic(
        u=4.0 * s4,
        v=4.0 * s3,
        w=4.0 * s2 - a2 - b2 + 2.0 * p.gamma2,
        y=4.0 * s1 - a1 - b1,
        z=4.0 * s0 - a0 - b0 + 0.25,
    )


# ---------------------------------------------------------------------------
# real-root extraction for the separability quartic (analytic + Newton polish)
# ---------------------------------------------------------------------------

def _real_cubic_root(b: float, c: float, d: float) -> float:
    """One real root of x^3 + b x^2 + c x + d."""
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc >= 0.0:
        s = math.sqrt(disc)
        u = math.copysign(abs(-q / 2.0 + s) ** (1.0 / 3.0), -q / 2.0 + s)
        v = math.copysign(abs(-q / 2.0 - s) ** (1.0 / 3.0), -q / 2.0 - s)
        x = u + v
    else:
        rho = math.sqrt(-(p / 3.0) ** 3)
        theta = math.acos(max(-1.0, min(1.0, -q / (2.0 * rho))))
        x = 2.0 * (-p / 3.0) ** 0.5 * math.cos(theta / 3.0)
    return x - b / 3.0


def _quadratic_roots(a: float, b: float, c: float) -> list[float]:
    if a == 0.0:
        return [] if b == 0.0 else [-c / b]
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        return []
    s = math.sqrt(disc)
    q = -(b + math.copysign(s, b)) / 2.0
    roots = [q / a]
    if q != 0.0:
        roots.append(c / q)
    else:
        roots.append(-b / a - roots[0])
    return roots


def _polish(coeffs, x: float, iters: int = 8) -> float:
    """Newton refinement on the full polynomial (descending coefficients)."""
    n = len(coeffs) - 1
    for _ in range(iters):
        val = 0.0
        der = 0.0
        for c in coeffs:
            der = der * x + val
            val = val * x + c
        if der == 0.0:
            break
        step = val / der
        x -= step
        if abs(step) < 1e-16 * max(abs(x), 1.0):
            break
    return x


def real_quartic_roots(u: float, v: float, w: float, y: float, z: float) -> list[float]:
    """All real roots of u k^4 + v k^3 + w k^2 + y k + z, Newton-polished.

    Gracefully degrades to lower degrees when leading coefficients vanish
    relative to the overall coefficient scale.
    """
    coeffs = [u, v, w, y, z]
    scale = max(abs(c) for c in coeffs)
    if scale == 0.0:
        return []
    tiny = 1e-14 * scale
    while len(coeffs) > 1 and abs(coeffs[0]) <= tiny:
        coeffs = coeffs[1:]
    deg = len(coeffs) - 1
    lead = coeffs[0]
    mono = [c / lead for c in coeffs]

    if deg == 0:
        roots = []
    elif deg == 1:
        roots = [-mono[1]]
    elif deg == 2:
        roots = _quadratic_roots(1.0, mono[1], mono[2])
    elif deg == 3:
        r0 = _real_cubic_root(mono[1], mono[2], mono[3])
        b1 = mono[1] + r0
        c1 = mono[2] + r0 * b1
        roots = [r0] + _quadratic_roots(1.0, b1, c1)
    else:
        # Ferrari: depress, solve the resolvent cubic, split into quadratics
        _, b, c, d, e = mono
        p = c - 3.0 * b * b / 8.0
        q = b ** 3 / 8.0 - b * c / 2.0 + d
        r = -3.0 * b ** 4 / 256.0 + b * b * c / 16.0 - b * d / 4.0 + e
        if abs(q) <= 1e-14 * max(1.0, abs(p), abs(r)):
            # biquadratic
            roots = []
            for s in _quadratic_roots(1.0, p, r):
                if s >= 0.0:
                    roots.extend([math.sqrt(s), -math.sqrt(s)])
        else:
            m = _real_cubic_root(p, p * p / 4.0 - r, -q * q / 8.0)
            m = max(m, 0.0)
            if m <= 0.0:
                roots = []
            else:
                s = math.sqrt(2.0 * m)
                roots = (_quadratic_roots(1.0, s, p / 2.0 + m - q / (2.0 * s))
                         + _quadratic_roots(1.0, -s, p / 2.0 + m + q / (2.0 * s)))
        roots = [x - b / 4.0 for x in roots]

    out = []
    for x in roots:
        x = _polish(coeffs, x)
        if not any(abs(x - other) <= 1e-12 * max(1.0, abs(x)) for other in out):
            out.append(x)
    return sorted(out)


# ---------------------------------------------------------------------------
# entanglement time
# ---------------------------------------------------------------------------

def _nt_minus_fn(sf: StandardForm, channel: ChannelSpec):
    """Fast nt_minus(k) evaluator on raw entries (no per-call validation)."""
    s0 = sf.to_matrix().entries
    sinf = asymptotic_covariance(channel).entries

    def nt_minus(k: float) -> float:
        s = sinf * (1.0 - k) + s0 * k
        det_a = s[0, 0] * s[1, 1] - s[0, 1] * s[1, 0]
        det_b = s[2, 2] * s[3, 3] - s[2, 3] * s[3, 2]
        det_g = s[0, 2] * s[1, 3] - s[0, 3] * s[1, 2]
        det_s = np.linalg.det(s)
        delta_t = det_a + det_b - 2.0 * det_g
        rad = max(delta_t * delta_t - 4.0 * det_s, 0.0)
        return math.sqrt(max((delta_t - math.sqrt(rad)) / 2.0, 0.0))

    return nt_minus


def _nt_minus_at_k(sf: StandardForm, channel: ChannelSpec, k: float) -> float:
    return _nt_minus_fn(sf, channel)(k)


# nt_minus evaluations near a degenerate PPT spectrum carry sqrt-cancellation
# noise of order 1e-8; a sign change must clear this to count as a crossing
G_NOISE = 1e-7


def _bisect_crossing(sf: StandardForm, channel: ChannelSpec,
                     scan_points: int = 3000) -> float | None:
    """First k (descending from 1) where nt_minus crosses 1/2; None if no crossing."""
    nt = _nt_minus_fn(sf, channel)
    g = lambda k: nt(k) - 0.5
    taus = [T_HORIZON * i / scan_points for i in range(scan_points + 1)]
    prev_k = 1.0
    if g(1.0) >= 0.0:
        return 1.0
    for tau in taus[1:]:
        k = math.exp(-tau)
        if g(k) >= G_NOISE:
            lo, hi = k, prev_k          # g(lo) > 0, g(hi) < 0
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                if g(mid) >= 0.0:
                    lo = mid
                else:
                    hi = mid
                if hi - lo < 1e-13:
                    break
            return 0.5 * (lo + hi)
        prev_k = k
    return None


def entanglement_time(sf: StandardForm, channel: ChannelSpec) -> EntanglementTimeResult:
    """Time at which an initially entangled state becomes separable.

    The quartic root closest to one is cross-checked against an independent
    bisection on nt_minus(t) - 1/2; disagreement beyond tolerance raises.
    """
    neg0 = log_negativity(sf.to_matrix())
    if neg0.separable:
        raise NotEntangledAtStartError(
            f"state is separable at t = 0 (nt_minus = {neg0.nt_minus:.6g}, E_N = 0)")

    quartic = separability_quartic(invariant_polynomials(sf, channel))
    candidates = [k for k in real_quartic_roots(*quartic.coefficients())
                  if K_MIN < k <= 1.0 + 1e-12]
    k_quartic = None
    for k in sorted(candidates, reverse=True):
        k = min(k, 1.0)
        if abs(_nt_minus_at_k(sf, channel, k) - 0.5) <= 1e-6:
            k_quartic = k
            break

    k_bisect = _bisect_crossing(sf, channel)

    gamma = channel.gamma
    if k_bisect is not None and k_quartic is not None:
        if abs(k_quartic - k_bisect) > K_AGREE:
            raise MethodDisagreementError(
                f"quartic root k = {k_quartic:.12g} vs bisection k = {k_bisect:.12g}")
        res = abs(_nt_minus_at_k(sf, channel, k_quartic) - 0.5)
        return EntanglementTimeResult(-math.log(k_quartic) / gamma, k_quartic,
                                      "quartic", res)
    if k_bisect is not None:
        res = abs(_nt_minus_at_k(sf, channel, k_bisect) - 0.5)
        return EntanglementTimeResult(-math.log(k_bisect) / gamma, k_bisect,
                                      "bisection", res)
    if k_quartic is not None:
        # nt_minus touches 1/2 without a sign change
        res = abs(_nt_minus_at_k(sf, channel, k_quartic) - 0.5)
        return EntanglementTimeResult(-math.log(k_quartic) / gamma, k_quartic,
                                      "quartic", res, tangent=True)
    return EntanglementTimeResult(NEVER, 0.0, "bisection", math.nan)


def symmetric_tent_bounds(a: float, c1: float, c2: float, N_B: float,
                          gamma: float = 1.0) -> tuple[float, float]:
    """Entanglement-time bounds for symmetric states in equal thermal baths.

    Requires |c1| <= |c2|; the lower bound is clamped to 0 when already loose.
    """
    if abs(c1) > abs(c2) + 1e-12:
        raise DomainError("bounds require |c1| <= |c2|")
    if N_B < 0.0:
        raise DomainError(f"N_B must be >= 0, got {N_B:.6g}")
    if N_B == 0.0:
        return NEVER, NEVER
    arg_lo = 1.0 + (abs(c1) - a + 0.5) / N_B
    arg_hi = 1.0 + (abs(c2) - a + 0.5) / N_B
    lower = math.log(arg_lo) / gamma if arg_lo > 1.0 else 0.0
    upper = math.log(arg_hi) / gamma if arg_hi > 1.0 else 0.0
    return lower, upper


def squeezed_thermal_tent(mu_state: float, r: float, N_B: float,
                          gamma: float = 1.0) -> float:
    """Closed-form entanglement time of a squeezed thermal state in equal
    thermal baths; math.inf for vacuum baths (N_B = 0).

    For this family the partially transposed eigenvalue is linear in
    k = exp(-gamma t):  nt_minus(t) = exp(-2r)/(2 sqrt(mu)) * k
    + (N_B + 1/2)(1 - k), so the crossing nt_minus = 1/2 happens at
    1/k = 1 + (sqrt(mu) - exp(-2r)) / (2 sqrt(mu) N_B).  This is the
    degenerate (|c1| = |c2|) limit of the symmetric-state bounds and
    agrees with entanglement_time() on the same configuration.
    """
    if not 0.0 < mu_state <= 1.0:
        raise DomainError(f"purity must lie in (0, 1], got {mu_state:.6g}")
    if r <= 0.0:
        raise DomainError(f"squeezing must be > 0, got {r:.6g}")
    if N_B < 0.0:
        raise DomainError(f"N_B must be >= 0, got {N_B:.6g}")
    root_mu = math.sqrt(mu_state)
    if root_mu <= math.exp(-2.0 * r):
        raise NotEntangledAtStartError(
            f"state with purity {mu_state:.6g} and squeezing {r:.6g} "
            "is separable at t = 0")
    if N_B == 0.0:
        return NEVER
    return math.log(1.0 + (root_mu - math.exp(-2.0 * r))
                    / (2.0 * root_mu * N_B)) / gamma
