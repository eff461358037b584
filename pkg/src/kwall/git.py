"""Hilbert-Mumford weights for plane curves, stability of the weighted binary-form
systems attached to curves on the degeneration surface, and the CM degree of
hypersurface families.

Sign convention throughout: mu < 0 for a one-parameter subgroup certifies
instability; a curve survives a direction as soon as one of its monomials has
nonpositive weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import rat


class GitError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneCurveSupport:
    """Monomial support of a plane curve of the given degree."""

    degree: int
    monomials: frozenset[tuple[int, int, int]]
    torus_fixed: bool = False

    def __post_init__(self):
        mons = frozenset((int(a), int(b), int(c)) for a, b, c in self.monomials)
        if not mons:
            raise GitError("curve support must be nonempty")
        for m in mons:
            if any(e < 0 for e in m):
                raise GitError("exponents must be nonnegative")
            if sum(m) != self.degree:
                raise GitError(f"monomial {m} does not have degree {self.degree}")
        object.__setattr__(self, "monomials", mons)


@dataclass(frozen=True)
class OnePS:
    """Diagonal one-parameter subgroup in chosen coordinates; weights sum to zero."""

    weights: tuple[int, ...]

    def __post_init__(self):
        ws = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", ws)
        if all(w == 0 for w in ws):
            raise GitError("one-parameter subgroup must be nontrivial")
        if sum(ws) != 0:
            raise GitError("torus weights must sum to zero")


def hm_weight_plane(curve: PlaneCurveSupport, lam: OnePS) -> Fraction:
    """mu = -min over monomials of <exponents, lambda>.

    mu < 0 means every monomial has strictly positive weight, so the limit
    along lambda is zero and the curve is destabilized; any monomial of
    nonpositive weight blocks the direction.
    """
    if len(lam.weights) != 3:
        raise GitError("plane-curve 1-PS needs three weights")
    return -min(
        sum(Fraction(e) * w for e, w in zip(mon, lam.weights))
        for mon in sorted(curve.monomials)
    )


# ---------------------------------------------------------------------------
# weighted systems of binary forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryFormSystem:
    """Monomial supports of the form blocks of a curve on the degeneration surface.

    Even parity (degree-d curves, d even): blocks j = 2..d/2 of binary forms of
    degree 4j, scaling weight j.  Odd parity: the restricted degree-6 block
    (coordinates x^6, y^6 only) of weight 1 plus blocks j = 2..(d-1)/2 of
    degree 4j + 2 and weight j.  A monomial of degree n is recorded as the pair
    (i, n - i).  ``extra_candidates`` declares common roots that the support
    alone cannot see, as maps block -> vanishing order at the root.
    """

    parity: str  # "even" | "odd"
    degree: int
    forms: dict[int, frozenset[tuple[int, int]]]
    extra_candidates: tuple[dict[int, int], ...] = ()

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise GitError("parity must be 'even' or 'odd'")
        d = self.degree
        if self.parity == "even" and d % 2 != 0:
            raise GitError("even-parity system needs even degree")
        if self.parity == "odd" and d % 2 != 1:
            raise GitError("odd-parity system needs odd degree")
        forms = {int(j): frozenset((int(i), int(k)) for i, k in supp) for j, supp in self.forms.items()}
        if not any(forms.values()):
            raise GitError("all-zero system is the excluded cone point")
        for j, supp in forms.items():
            deg, _ = self._block_degree(j)
            for i, k in supp:
                if i < 0 or k < 0 or i + k != deg:
                    raise GitError(f"monomial {(i, k)} invalid in block {j} of degree {deg}")
                if self.parity == "odd" and j == 1 and (i, k) not in ((6, 0), (0, 6)):
                    raise GitError("the odd degree-6 block only carries x^6 and y^6")
        object.__setattr__(self, "forms", forms)

    def _block_degree(self, j: int) -> tuple[int, int]:
        if self.parity == "even":
            if not 2 <= j <= self.degree // 2:
                raise GitError(f"even block index {j} out of range")
            return 4 * j, 2
        if j == 1:
            return 6, 1
        if not 2 <= j <= (self.degree - 1) // 2:
            raise GitError(f"odd block index {j} out of range")
        return 4 * j + 2, 1

    def block_degree(self, j: int) -> int:
        return self._block_degree(j)[0]

    def nonzero_blocks(self) -> list[int]:
        return sorted(j for j, supp in self.forms.items() if supp)


@dataclass(frozen=True)
class StabilityCertificate:
    """Destabilizing data: candidate root, 1-PS exponent pair (a on the root
    torus, r on the scaling torus), and the per-monomial weights it produces."""

    candidate: str
    a: int
    r: int
    weights: tuple[Fraction, ...]


@dataclass(frozen=True)
class StabilityVerdict:
    verdict: str  # "stable" | "strictly-semistable" | "unstable"
    certificate: Optional[StabilityCertificate] = None
    polystable: Optional[bool] = None  # decided only for torus-fixed limits
    detail: str = ""


def _candidate_orders(system: BinaryFormSystem) -> list[tuple[str, dict[int, list[tuple[int, int]]]]]:
    """Per candidate root: for each nonzero block the list of (order at root, block degree)
    over its nonzero monomials."""
    out = []
    for name, ordsel in (("x=0", lambda i, k: i), ("y=0", lambda i, k: k)):
        per_block: dict[int, list[tuple[int, int]]] = {}
        for j in system.nonzero_blocks():
            deg = system.block_degree(j)
            per_block[j] = [(ordsel(i, k), deg) for i, k in sorted(system.forms[j])]
        out.append((name, per_block))
    for idx, extra in enumerate(system.extra_candidates):
        per_block = {}
        for j in system.nonzero_blocks():
            deg = system.block_degree(j)
            if j not in extra:
                raise GitError("declared root must record an order for every nonzero block")
            per_block[j] = [(int(extra[j]), deg)]
        out.append((f"declared-root-{idx}", per_block))
    return out


def _normalized_weights(per_block: dict[int, list[tuple[int, int]]]) -> list[tuple[Fraction, int]]:
    """Weight vectors (2 ord - degree, block scaling weight) over nonzero monomials."""
    vecs = []
    for j, entries in per_block.items():
        for order, deg in entries:
            vecs.append((Fraction(2 * order - deg), j))
    return vecs


def binary_system_stability(system: BinaryFormSystem) -> StabilityVerdict:
    """Classify the system against every destabilizing direction.

    At each candidate root the pair (2 ord - degree, scaling weight) is
    collected per nonzero monomial; a direction destabilizes exactly when a
    linear functional that pairs negatively with the polarization character is
    nonnegative on all pairs, which happens iff every normalized weight is
    strictly positive.  Certificates carry integer 1-PS data whose replayed
    combined weights are all strictly positive.
    """
    candidates = _candidate_orders(system)
    max_j = max(system.nonzero_blocks())

    for name, per_block in candidates:
        vecs = _normalized_weights(per_block)
        if all(w > 0 for w, _ in vecs):
            a = max_j + 1
            cert = StabilityCertificate(
                candidate=name,
                a=a,
                r=-1,
                weights=tuple(a * w - j for w, j in vecs),
            )
            return StabilityVerdict("unstable", cert, detail=f"destabilized at {name}")

    for name, per_block in candidates:
        vecs = _normalized_weights(per_block)
        if all(w >= 0 for w, _ in vecs):
            torus_fixed = all(w == 0 for w, _ in vecs)
            cert = StabilityCertificate(candidate=name, a=1, r=0, weights=tuple(w for w, _ in vecs))
            if torus_fixed:
                return StabilityVerdict(
                    "strictly-semistable", cert, polystable=True,
                    detail=f"fixed by the boundary torus at {name}; orbit closed",
                )
            return StabilityVerdict(
                "strictly-semistable", cert, polystable=None,
                detail=f"degenerates along the zero-weight direction at {name}; polystability undetermined",
            )

    sym = "SL(2)" if system.parity == "even" else "sigma'-torus (x<->y swap not quotiented)"
    return StabilityVerdict("stable", None, polystable=True, detail=f"no destabilizing direction for {sym}")


def replay_certificate(system: BinaryFormSystem, cert: StabilityCertificate) -> list[Fraction]:
    """Recompute the combined weights a(2 ord - deg) + r j of an unstable certificate
    directly from the raw monomial data."""
    for name, per_block in _candidate_orders(system):
        if name == cert.candidate:
            return [cert.a * (2 * order - deg) + cert.r * j
                    for j, entries in per_block.items() for order, deg in entries]
    raise GitError(f"certificate candidate {cert.candidate!r} not found in system")


# ---------------------------------------------------------------------------
# CM degree for hypersurface families
# ---------------------------------------------------------------------------

def cm_degree(n: int, d: int, c: Fraction) -> Fraction:
    """Degree (n+1) c (n+1 - cd)^n of the CM line bundle on the space of
    degree-d hypersurfaces in P^n at coefficient c."""
    if n < 1 or d < 1:
        raise GitError("dimension and degree must be positive")
    c = rat(c)
    return (n + 1) * c * (n + 1 - c * d) ** n


def cm_degree_poly(n: int, d: int) -> list[Fraction]:
    """Coefficients of cm_degree(n, d, c) as a polynomial in c, lowest first."""
    coeffs = [Fraction(0)] * (n + 2)
    # (n+1) c sum_k binom(n,k) (n+1)^(n-k) (-d)^k c^k
    for k in range(n + 1):
        coeffs[k + 1] = (n + 1) * math.comb(n, k) * Fraction(n + 1) ** (n - k) * Fraction(-d) ** k
    return coeffs


def cm_positivity_window(n: int, d: int):
    """{c : cm_degree(n, d, c) > 0} = (0, (n+1)/d)."""
    from .walls import Interval

    if d < 2:
        raise GitError("degree must be at least 2")
    return Interval(Fraction(0), Fraction(n + 1, d))
