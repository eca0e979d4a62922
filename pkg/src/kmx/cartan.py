"""Generalized Cartan matrices and explicit realizations.

Validation, symmetrization, component classification by the exact LP
trichotomy, special subsets, exposing coweights, and the canonical
realization on dual lattices of rank 2n - l.

Index convention: 0-based everywhere inside the library; the CLI shifts to
1-based for user-facing text.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import gcd
from typing import Iterable, Optional, Sequence

from . import exact
from .errors import InternalError, NotGCM, NotSpecial, NotSymmetrizable, SizeGuard
from .exact import IntMat, IntVec, LPProblem, RatVec

SPECIAL_SET_RANK_GUARD = 16


class ComponentType(Enum):
    FIN = "FIN"
    AFF = "AFF"
    IND = "IND"


@dataclass(frozen=True)
class GCM:
    """A validated symmetrizable generalized Cartan matrix.

    `eps` is the positive rational symmetrizer: with D = diag(eps) the matrix
    B = D^{-1} A is symmetric, i.e. A = D B.  eps is normalized per
    component to positive integers with gcd 1.
    """

    a: IntMat
    eps: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def b(self) -> tuple[RatVec, ...]:
        return tuple(
            tuple(Fraction(self.a[i][j], 1) / self.eps[i] for j in range(self.n))
            for i in range(self.n)
        )

    def submatrix(self, subset: Sequence[int]) -> IntMat:
        idx = sorted(subset)
        return tuple(tuple(self.a[i][j] for j in idx) for i in idx)


def _components(a: IntMat, subset: Sequence[int]) -> list[tuple[int, ...]]:
    """Connected components of the zero-pattern graph restricted to subset."""
    left = sorted(subset)
    comps = []
    seen: set[int] = set()
    for start in left:
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in left:
                if j not in seen and a[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def validate_and_symmetrize(rows: Sequence[Sequence[int]]) -> GCM:
    """Validate a GCM and compute its canonical positive symmetrizer."""
    a = exact.int_mat(rows)
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise NotGCM("matrix must be square and nonempty")
    for i in range(n):
        if a[i][i] != 2:
            raise NotGCM(f"diagonal entry a[{i}][{i}] = {a[i][i]} != 2")
        for j in range(n):
            if i != j and a[i][j] > 0:
                raise NotGCM(f"positive off-diagonal entry a[{i}][{j}]")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise NotGCM(f"zero-pattern asymmetry at ({i},{j})")
    # Solve eps_i * a_ji = eps_j * a_ij along edges, per component.
    eps: list[Optional[Fraction]] = [None] * n
    for comp in _components(a, range(n)):
        root = comp[0]
        eps[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in comp:
                if a[i][j] != 0 and i != j and eps[j] is None:
                    eps[j] = eps[i] * Fraction(a[j][i], a[i][j])
                    stack.append(j)
        # Verify on every pair (cycles may be inconsistent).
        for i in comp:
            for j in comp:
                if eps[i] * a[j][i] != eps[j] * a[i][j]:
                    raise NotSymmetrizable(f"no positive symmetrizer: cycle through ({i},{j})")
        # Normalize the component to integers with gcd 1.
        den = 1
        for i in comp:
            den = den * eps[i].denominator // gcd(den, eps[i].denominator)
        nums = [int(eps[i] * den) for i in comp]
        g = 0
        for x in nums:
            g = gcd(g, x)
        for i, x in zip(comp, nums):
            eps[i] = Fraction(x, g)
    es = tuple(e for e in eps)  # type: ignore[misc]
    if any(e is None or e <= 0 for e in es):
        raise NotSymmetrizable("no positive symmetrizer exists")
    return GCM(a=a, eps=es)  # type: ignore[arg-type]


@lru_cache(maxsize=None)
def _component_type_cached(gcm: GCM, comp: tuple[int, ...]) -> ComponentType:
    sub = exact.rat_mat(gcm.submatrix(comp))
    neg = tuple(tuple(-x for x in row) for row in sub)
    fin = exact.lp_feasible(LPProblem(matrix=neg, relations=("lt",) * len(sub)))
    aff = exact.lp_feasible(LPProblem(matrix=sub, relations=("eq",) * len(sub)))
    ind = exact.lp_feasible(LPProblem(matrix=sub, relations=("lt",) * len(sub)))
    hits = [t for t, u in (("FIN", fin), ("AFF", aff), ("IND", ind)) if u is not None]
    if len(hits) != 1:
        raise InternalError(f"classification trichotomy violated on {comp}: {hits}")
    return ComponentType(hits[0])


def component_type(gcm: GCM, comp: Sequence[int]) -> ComponentType:
    """LP trichotomy for one indecomposable principal submatrix."""
    return _component_type_cached(gcm, tuple(sorted(comp)))


@dataclass(frozen=True)
class Classification:
    components: tuple[tuple[tuple[int, ...], ComponentType], ...]
    theta0: tuple[int, ...]
    theta_inf: tuple[int, ...]


@lru_cache(maxsize=None)
def _classify_cached(gcm: GCM, idx: tuple[int, ...]) -> Classification:
    comps = []
    t0: list[int] = []
    tinf: list[int] = []
    for comp in _components(gcm.a, idx):
        ct = component_type(gcm, comp)
        comps.append((comp, ct))
        (t0 if ct is ComponentType.FIN else tinf).extend(comp)
    return Classification(
        components=tuple(comps), theta0=tuple(sorted(t0)), theta_inf=tuple(sorted(tinf))
    )


def classify(gcm: GCM, subset: Optional[Sequence[int]] = None) -> Classification:
    """Classify the components of A restricted to a subset of indices."""
    idx = tuple(sorted(range(gcm.n) if subset is None else subset))
    return _classify_cached(gcm, idx)


def is_special(gcm: GCM, theta: Iterable[int]) -> bool:
    t = tuple(sorted(set(theta)))
    if not t:
        return True
    return classify(gcm, t).theta0 == ()


def special_sets(gcm: GCM) -> tuple[tuple[int, ...], ...]:
    """All special subsets, ordered by (size, lex).  Includes the empty set."""
    if gcm.n > SPECIAL_SET_RANK_GUARD:
        raise SizeGuard(f"special-set enumeration guarded at n <= {SPECIAL_SET_RANK_GUARD}")
    out = [()]
    for k in range(1, gcm.n + 1):
        for t in combinations(range(gcm.n), k):
            if is_special(gcm, t):
                out.append(t)
    return tuple(out)


class RootDatum:
    """A GCM together with an explicit optimal realization.

    The realization is the canonical one: H = Z^m with m = 2n - l and
    h_i = e_i for every i; P is the dual lattice with the dual basis as
    fundamental weights.  The simple root alpha_i has coordinates
    (a_{1i}, ..., a_{ni}, c_i) in the fundamental-weight basis, where the
    integer completion c assigns one extra unit coordinate to each column
    of A that is linearly dependent on its predecessors.  With this choice
    the coroot lattice is the coordinate sublattice Z^n, visibly saturated,
    and every pairing identity holds by construction (and is re-verified).
    """

    def __init__(self, gcm: GCM):
        self.gcm = gcm
        a = gcm.a
        n = gcm.n
        self.n = n
        self.l = exact.rank(a)
        self.m = 2 * n - self.l
        m = self.m
        # Completion of A^T to rank n with unit extra coordinates.
        alpha: list[list[int]] = []
        basis_rows: list[list[Fraction]] = []
        extra = 0
        for i in range(n):
            row = [a[j][i] for j in range(n)] + [0] * (m - n)
            cand = basis_rows + [[Fraction(x) for x in row]]
            if exact.rank(cand) == len(cand):
                basis_rows.append([Fraction(x) for x in row])
            else:
                row[n + extra] = 1
                extra += 1
                basis_rows.append([Fraction(x) for x in row])
            alpha.append(row)
        if extra != m - n or exact.rank(alpha) != n:
            raise InternalError("realization completion failed")
        self.alpha: tuple[IntVec, ...] = tuple(tuple(r) for r in alpha)
        # Invariant form on the coweight side, Gram matrix in the e-basis.
        gram = [[Fraction(0)] * m for _ in range(m)]
        for i in range(n):
            for j in range(m):
                gram[i][j] = Fraction(self.alpha[i][j]) * gcm.eps[i]
        for j in range(m):
            for i in range(n, m):
                gram[i][j] = gram[j][i] if j < n else Fraction(0)
        self.gram: tuple[RatVec, ...] = tuple(tuple(r) for r in gram)
        if exact.det(self.gram) == 0:
            raise InternalError("invariant form is degenerate")
        self._verify()
        self._perp: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._ctheta: dict[tuple[int, ...], IntVec] = {}
        self._special: Optional[tuple[tuple[int, ...], ...]] = None
        self._simple_p: Optional[tuple[IntMat, ...]] = None
        self._simple_q: Optional[tuple[IntMat, ...]] = None
        self._root_mults: dict[int, dict[IntVec, int]] = {}

    def _verify(self):
        n, m = self.n, self.m
        a = self.gcm.a
        # alpha_i(h_j) = a_{ji}; Lambda_i(h_j) = delta_ij is the dual pairing.
        for i in range(n):
            for j in range(n):
                if self.alpha[i][j] != a[j][i]:
                    raise InternalError("pairing alpha_i(h_j) != a_ji")
        # Coroot lattice saturated in H: SNF divisors of the h-matrix are 1.
        hmat = tuple(tuple(1 if k == i else 0 for k in range(m)) for i in range(n))
        _, d, _ = exact.smith_normal_form(hmat)
        if any(d[i][i] != 1 for i in range(n)):
            raise InternalError("coroot lattice not saturated")
        # (alpha_i | alpha_i) = 2 / eps_i > 0 under A = diag(eps) B.
        for i in range(n):
            if self.form_weights(self.alpha[i], self.alpha[i]) != 2 / self.gcm.eps[i]:
                raise InternalError("|alpha_i|^2 != 2/eps_i")

    # -- pairings and forms -------------------------------------------------

    def pair(self, weight: Sequence, coweight: Sequence) -> Fraction:
        """<weight, coweight> in (Lambda-basis, e-basis) coordinates."""
        return sum(Fraction(x) * Fraction(y) for x, y in zip(weight, coweight))

    def form_coweights(self, h1: Sequence, h2: Sequence) -> Fraction:
        return exact.vec_dot(exact.mat_vec(self.gram, tuple(map(Fraction, h1))),
                             tuple(map(Fraction, h2)))

    def form_weights(self, l1: Sequence, l2: Sequence) -> Fraction:
        """(l1 | l2) on the weight side, via nu^{-1} = gram^{-1}."""
        sol = exact.rat_solve(self.gram, tuple(map(Fraction, l2)))
        assert sol is not None
        return self.pair(l1, sol[0])

    def fundamental_weight(self, i: int) -> IntVec:
        return tuple(1 if j == i else 0 for j in range(self.m))

    def coroot(self, i: int) -> IntVec:
        return tuple(1 if j == i else 0 for j in range(self.m))

    def rho(self) -> IntVec:
        """The fixed strictly dominant weight: sum of all 2n-l fundamentals."""
        return (1,) * self.m

    def weight_height(self, top: Sequence, low: Sequence) -> Optional[int]:
        """Height of top - low as a nonnegative root-lattice element."""
        diff = exact.vec_sub(tuple(map(Fraction, top)), tuple(map(Fraction, low)))
        sol = exact.rat_solve(exact.transpose(self.alpha), diff)
        if sol is None:
            return None
        coords, kernel = sol
        if kernel:  # alpha has full row rank, so expansion is unique
            raise InternalError("simple roots not independent")
        if any(c.denominator != 1 or c < 0 for c in coords):
            return None
        return int(sum(coords))

    # -- special machinery ---------------------------------------------------

    def special_sets(self) -> tuple[tuple[int, ...], ...]:
        if self._special is None:
            self._special = special_sets(self.gcm)
        return self._special

    def theta_perp(self, theta: Sequence[int]) -> tuple[int, ...]:
        key = tuple(sorted(theta))
        if key not in self._perp:
            self._perp[key] = tuple(
                i for i in range(self.n)
                if i not in key and all(self.gcm.a[i][j] == 0 for j in key)
            )
        return self._perp[key]

    def exposing_coweight(self, theta: Sequence[int]) -> IntVec:
        """Canonical integer coweight c_Theta with support Theta.

        Positive on its support, with alpha_j(c) <= 0 for every j; the zero
        set of c on the Tits cone is exactly the face of type Theta.  Per
        component: the primitive positive null vector (affine) or the
        lexicographically smallest positive certificate found under a
        doubling bound (indefinite).  Any valid certificate defines the same
        face; canonicality is only for reproducibility.
        """
        key = tuple(sorted(set(theta)))
        if key in self._ctheta:
            return self._ctheta[key]
        if not is_special(self.gcm, key):
            raise NotSpecial(key)
        coef = {i: 0 for i in range(self.n)}
        for comp, ct in classify(self.gcm, key).components:
            at = tuple(tuple(self.gcm.a[i][j] for i in comp) for j in comp)  # A_C^T
            if ct is ComponentType.AFF:
                sol = exact.rat_solve(at, (0,) * len(comp))
                assert sol is not None
                _, kernel = sol
                if len(kernel) != 1:
                    raise InternalError("affine component with kernel dimension != 1")
                vec = exact.primitive(kernel[0])
                if any(x <= 0 for x in vec):
                    raise InternalError("affine null vector not positive")
                for i, x in zip(comp, vec):
                    coef[i] = int(x)
            else:
                found = None
                bound = 1
                while found is None and bound <= 1 << 20:
                    for cand in product(range(1, bound + 1), repeat=len(comp)):
                        if all(sum(r * x for r, x in zip(row, cand)) <= 0 for row in at):
                            found = cand
                            break
                    bound *= 2
                if found is None:
                    raise InternalError("no exposing certificate under doubling bound")
                for i, x in zip(comp, found):
                    coef[i] = x
        c = tuple(coef.get(j, 0) for j in range(self.n)) + (0,) * (self.m - self.n)
        for j in range(self.n):
            val = self.pair(self.alpha[j], c)
            if val > 0 or (j in key) != (c[j] > 0):
                raise InternalError("exposing coweight fails its defining inequalities")
        self._ctheta[key] = c
        return c


def build_realization(rows_or_gcm) -> RootDatum:
    """Validate (if needed) and construct the canonical optimal realization."""
    gcm = rows_or_gcm if isinstance(rows_or_gcm, GCM) else validate_and_symmetrize(rows_or_gcm)
    return RootDatum(gcm)


# Shared test data used across the package and the verification suite.
A2_ROWS = ((2, -1), (-1, 2))
AFFINE_A1_ROWS = ((2, -2), (-2, 2))
HYPERBOLIC_ROWS = ((2, -2, 0), (-2, 2, -1), (0, -1, 2))
