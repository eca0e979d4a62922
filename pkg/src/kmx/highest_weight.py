"""Depth-truncated integrable highest-weight modules and operator words.

Everything is exact.  A slice stores, per weight down to a fixed height, a
basis of lowering monomials selected by fraction-free rank computation on
contravariant Gram matrices, together with the raising and lowering operator
matrices in those bases.  Operator application is either exact (all terms
stay inside the slice) or a hard DepthExceeded error; results are never
silently truncated.

Weight multiplicities come from two independent routes: the Freudenthal
recursion (fed by root multiplicities computed with the standard Peterson
recurrence) and the Gram-rank route used to build the bases.  The test suite
crosses them against each other; neither consults the other here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import exact, faces as FC, monoids as MO, weyl as W
from .cartan import RootDatum
from .errors import (DepthExceeded, DepthTooLarge, InternalError, NotDominant,
                     NotFactored, SizeGuard, ZeroTorusValue)
from .exact import IntVec
from .faces import Face
from .monoids import NhatElt, WmonElt

DEFAULT_MAX_DEPTH = 8
DEFAULT_MAX_RANK = 3

Wt = IntVec  # weight in fundamental-weight coordinates
Beta = IntVec  # element of the positive root cone in simple-root coordinates


# -- root multiplicities (Peterson recurrence) -----------------------------------


def _root_gram(datum: RootDatum) -> tuple[tuple[Fraction, ...], ...]:
    """(alpha_i | alpha_j) = a_ij / eps_i, the symmetrized matrix B."""
    return datum.gcm.b


def root_multiplicities(datum: RootDatum, max_height: int) -> dict[Beta, int]:
    """Multiplicities of positive roots up to the given height.

    Peterson's recurrence over the root cone: with c_b = sum_k mult(b/k)/k,
    (b | b - 2 rho) c_b = sum over proper decompositions b' + b'' = b of
    (b' | b'') c_b' c_b''.  Real roots come out with multiplicity one, which
    the test suite spot-checks against the Weyl orbit of the simple roots.
    """
    cache = datum._root_mults
    if max_height in cache:
        return cache[max_height]
    n = datum.n
    gram = _root_gram(datum)

    def form(b1: Beta, b2: Beta) -> Fraction:
        return sum(gram[i][j] * b1[i] * b2[j] for i in range(n) for j in range(n)
                   if b1[i] and b2[j])

    def rho_form(b: Beta) -> Fraction:
        return sum(Fraction(b[i], 1) / datum.gcm.eps[i] for i in range(n))

    def gen(h):
        out = []
        def rec(pos, left, acc):
            if pos == n - 1:
                out.append(tuple(acc + [left]))
                return
            for k in range(left + 1):
                rec(pos + 1, left - k, acc + [k])
        rec(0, h, [])
        return out

    c: dict[Beta, Fraction] = {}
    mult: dict[Beta, int] = {}
    for h in range(1, max_height + 1):
        for b in gen(h):
            if h == 1:
                c[b] = Fraction(1)
                mult[b] = 1
                continue
            coeff = form(b, b) - 2 * rho_form(b)
            total = Fraction(0)
            for b1 in _proper_summands(b):
                b2 = tuple(x - y for x, y in zip(b, b1))
                cb1 = c.get(b1, Fraction(0))
                cb2 = c.get(b2, Fraction(0))
                if cb1 and cb2:
                    total += form(b1, b2) * cb1 * cb2
            if coeff == 0:
                if total != 0:
                    raise InternalError("Peterson coefficient vanished unexpectedly")
                c[b] = Fraction(0)
                mult[b] = 0
                continue
            cb = total / coeff
            m = cb
            for k in range(2, h + 1):
                if all(x % k == 0 for x in b):
                    sub = tuple(x // k for x in b)
                    m -= Fraction(mult.get(sub, 0), k)
            if m.denominator != 1 or m < 0:
                raise InternalError(f"root multiplicity {m} at {b} is not a natural number")
            c[b] = cb
            mult[b] = int(m)
    result = {b: m for b, m in mult.items() if m > 0}
    cache[max_height] = result
    return result


def _proper_summands(b: Beta):
    n = len(b)
    def rec(pos, acc, nonzero):
        if pos == n:
            if nonzero and any(x < y for x, y in zip(acc, b)):
                yield tuple(acc)
            return
        for k in range(b[pos] + 1):
            yield from rec(pos + 1, acc + [k], nonzero or k > 0)
    yield from rec(0, [], False)


def real_roots_with_witness(datum: RootDatum, max_height: int
                            ) -> dict[Beta, tuple[W.WeylElt, int]]:
    """Real roots alpha = u(alpha_i) of |height| <= max_height, with (u, i)."""
    out: dict[Beta, tuple[W.WeylElt, int]] = {}
    frontier: list[tuple[Beta, W.WeylElt, int]] = []
    for i in range(datum.n):
        b = tuple(1 if j == i else 0 for j in range(datum.n))
        out[b] = (W.identity_elt(datum), i)
        frontier.append((b, W.identity_elt(datum), i))
    while frontier:
        new = []
        for b, u, i in frontier:
            for j in range(datum.n):
                s = W.simple(datum, j)
                nb = tuple(int(x) for x in s.act_root(b))
                if sum(abs(x) for x in nb) <= max_height and nb not in out:
                    out[nb] = (s * u, i)
                    new.append((nb, s * u, i))
        frontier = new
    return out


# -- Freudenthal weight multiplicities --------------------------------------------


def _check_dominant(datum: RootDatum, hw: Sequence[int]) -> Wt:
    lam = tuple(int(x) for x in hw)
    if len(lam) != datum.m:
        raise NotDominant(f"highest weight needs {datum.m} coordinates")
    if any(lam[i] < 0 for i in range(datum.n)):
        raise NotDominant(f"{lam} is not dominant")
    return lam


def weights_and_mults(datum: RootDatum, hw: Sequence[int], depth: int,
                      *, max_depth: Optional[int] = None) -> dict[Wt, int]:
    """Exact weight multiplicities of L(hw) down to the given depth.

    Freudenthal recursion over the depth cone; the denominator
    |hw + rho|^2 - |lam + rho|^2 vanishes only off the weight system, where
    the numerator is checked to vanish as well.
    """
    lam_top = _check_dominant(datum, hw)
    _depth_guard(datum, depth, max_depth)
    n = datum.n
    gram = _root_gram(datum)
    rmult = root_multiplicities(datum, depth)

    def form_rr(b1, b2):
        return sum(gram[i][j] * b1[i] * b2[j] for i in range(n) for j in range(n)
                   if b1[i] and b2[j])

    def form_wr(wt, b):  # (weight | root-cone element)
        return sum(Fraction(wt[i], 1) / datum.gcm.eps[i] * b[i] for i in range(n))

    def betas(h):
        out = []
        def rec(pos, left, acc):
            if pos == n - 1:
                out.append(tuple(acc + [left]))
                return
            for k in range(left + 1):
                rec(pos + 1, left - k, acc + [k])
        rec(0, h, [])
        return out

    rho_pair = lambda b: sum(Fraction(b[i], 1) / datum.gcm.eps[i] for i in range(n))
    mult: dict[Beta, Fraction] = {(0,) * n: Fraction(1)}
    for h in range(1, depth + 1):
        for b in betas(h):
            denom = 2 * (form_wr(lam_top, b) + rho_pair(b)) - form_rr(b, b)
            total = Fraction(0)
            for alpha, ma in rmult.items():
                k = 1
                while all(b[i] >= k * alpha[i] for i in range(n)):
                    upper = tuple(b[i] - k * alpha[i] for i in range(n))
                    mu = mult.get(upper, Fraction(0))
                    if mu:
                        # (lam + k alpha | alpha) with lam = hw - b
                        val = form_wr(lam_top, alpha) - form_rr(b, alpha) \
                            + k * form_rr(alpha, alpha)
                        total += ma * mu * val
                    k += 1
            total *= 2
            if denom == 0:
                if total != 0:
                    raise InternalError("Freudenthal numerator nonzero at a null denominator")
                mult[b] = Fraction(0)
            else:
                m = total / denom
                if m.denominator != 1 or m < 0:
                    raise InternalError(f"fractional weight multiplicity {m} at {b}")
                mult[b] = m
    out: dict[Wt, int] = {}
    for b, m in mult.items():
        if m > 0:
            wt = tuple(lam_top[j] - sum(b[i] * datum.alpha[i][j] for i in range(n))
                       for j in range(datum.m))
            out[wt] = int(m)
    return out


def _depth_guard(datum: RootDatum, depth: int, max_depth: Optional[int]):
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if max_depth is not None:
        if depth > max_depth:
            raise DepthTooLarge(f"depth {depth} over the requested cap {max_depth}")
        return  # an explicit cap also lifts the default rank guard
    if depth > DEFAULT_MAX_DEPTH:
        raise DepthTooLarge(f"depth {depth} over the default cap {DEFAULT_MAX_DEPTH}")
    if datum.n > DEFAULT_MAX_RANK:
        raise SizeGuard(f"slice construction guarded to rank <= {DEFAULT_MAX_RANK}; "
                        "pass max_depth to lift")


# -- module slices ----------------------------------------------------------------


@dataclass
class WeightSpace:
    weight: Wt
    height: int
    words: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    # f_mat[i]: matrix of f_i from this space to the space at weight - alpha_i
    f_mat: dict[int, tuple[tuple[Fraction, ...], ...]] = field(default_factory=dict)
    # e_mat[i]: matrix of e_i from this space to the space at weight + alpha_i
    e_mat: dict[int, tuple[tuple[Fraction, ...], ...]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.words)


class ModuleSlice:
    """L(hw) truncated to weights of height <= depth below the top."""

    def __init__(self, datum: RootDatum, hw: Sequence[int], depth: int,
                 *, max_depth: Optional[int] = None):
        self.datum = datum
        self.hw = _check_dominant(datum, hw)
        self.depth = depth
        _depth_guard(datum, depth, max_depth)
        self.spaces: dict[Wt, WeightSpace] = {}
        # weights just past the window that are genuinely nonzero; lowering
        # into one of these is a DepthExceeded, everything else is exact
        self._nonzero_beyond: set[Wt] = set()
        self._build()
        self.order: tuple[Wt, ...] = tuple(sorted(
            self.spaces, key=lambda wt: (self.spaces[wt].height, wt)))

    # construction ---------------------------------------------------------------

    def _build(self):
        datum = self.datum
        n, m = datum.n, datum.m
        top = WeightSpace(weight=self.hw, height=0, words=((),),
                          gram=((Fraction(1),),))
        self.spaces[self.hw] = top
        level: list[Wt] = [self.hw]
        for h in range(1, self.depth + 2):
            probe_only = h == self.depth + 1
            targets: dict[Wt, None] = {}
            for mu in level:
                for i in range(n):
                    lam = tuple(mu[j] - datum.alpha[i][j] for j in range(m))
                    targets.setdefault(lam, None)
            new_level = []
            for lam in sorted(targets):
                ws = self._build_space(lam, h, register=not probe_only)
                if ws is None:
                    continue
                if probe_only:
                    self._nonzero_beyond.add(lam)
                else:
                    self.spaces[lam] = ws
                    new_level.append(lam)
            level = new_level
            if not level:
                break

    def _build_space(self, lam: Wt, h: int, register: bool = True
                     ) -> Optional[WeightSpace]:
        datum = self.datum
        n, m = datum.n, datum.m
        cands: list[tuple[int, int]] = []  # (i, index in basis of lam + alpha_i)
        for i in range(n):
            up = tuple(lam[j] + datum.alpha[i][j] for j in range(m))
            src = self.spaces.get(up)
            if src is not None:
                cands.extend((i, k) for k in range(src.dim))
        if not cands:
            return None
        # e_j-image of each candidate, in the basis at lam + alpha_j.
        e_imgs: list[dict[int, tuple[Fraction, ...]]] = []
        for (i, k) in cands:
            up = tuple(lam[j] + datum.alpha[i][j] for j in range(m))
            src = self.spaces[up]
            imgs: dict[int, tuple[Fraction, ...]] = {}
            for jj in range(n):
                tgt_wt = tuple(lam[j] + datum.alpha[jj][j] for j in range(m))
                tgt = self.spaces.get(tgt_wt)
                if tgt is None:
                    continue
                vec = [Fraction(0)] * tgt.dim
                # e_jj f_i b_k = f_i (e_jj b_k) + [jj == i] * up(h_i) * b_k
                up_e = src.e_mat.get(jj)
                if up_e is not None:
                    mid_wt = tuple(up[j] + datum.alpha[jj][j] for j in range(m))
                    mid = self.spaces.get(mid_wt)
                    if mid is not None:
                        fmat = mid.f_mat.get(i)
                        if fmat is not None:
                            col = [up_e[r][k] for r in range(len(up_e))]
                            for r in range(tgt.dim):
                                vec[r] += sum(fmat[r][c] * col[c] for c in range(mid.dim))
                if jj == i:  # [e_i, f_i] = h_i acts by up(h_i) on b_k
                    vec[k] += Fraction(up[i])
                imgs[jj] = tuple(vec)
            e_imgs.append(imgs)
        # Gram matrix of the candidates via contravariance.
        nc = len(cands)
        gram_full = [[Fraction(0)] * nc for _ in range(nc)]
        for b in range(nc):
            for a in range(nc):
                i, k = cands[a]
                up = tuple(lam[j] + datum.alpha[i][j] for j in range(m))
                src = self.spaces[up]
                img = e_imgs[b].get(i)
                if img is None:
                    continue
                gram_full[a][b] = sum(src.gram[k][c] * img[c] for c in range(src.dim))
        # Greedy pivot selection in degree-lex candidate order.
        selected: list[int] = []
        reduced: list[list[Fraction]] = []
        for c in range(nc):
            col = [gram_full[r][c] for r in range(nc)]
            for rc in reduced:
                piv = next((r for r, x in enumerate(rc) if x != 0), None)
                if piv is not None and col[piv] != 0:
                    f = col[piv] / rc[piv]
                    col = [x - f * y for x, y in zip(col, rc)]
            if any(col):
                selected.append(c)
                reduced.append(col)
        if not selected:
            return None
        if not register:  # probe pass: only the nonvanishing matters
            return WeightSpace(weight=lam, height=h, words=((),) * len(selected),
                               gram=())
        words = []
        for c in selected:
            i, k = cands[c]
            up = tuple(lam[j] + datum.alpha[i][j] for j in range(m))
            words.append((i,) + self.spaces[up].words[k])
        gram = tuple(tuple(gram_full[a][b] for b in selected) for a in selected)
        ws = WeightSpace(weight=lam, height=h, words=tuple(words), gram=gram)
        # Coordinates of every candidate in the selected basis.
        coords: list[tuple[Fraction, ...]] = []
        for c in range(nc):
            rhs = tuple(gram_full[s][c] for s in selected)
            sol = exact.rat_solve(gram, rhs)
            if sol is None:
                raise InternalError("Gram matrix singular on the selected basis")
            coords.append(sol[0])
        # f-matrices into this space, and e-matrices out of it.
        for i in range(self.datum.n):
            up = tuple(lam[j] + datum.alpha[i][j] for j in range(m))
            src = self.spaces.get(up)
            if src is None:
                continue
            cols = []
            for k in range(src.dim):
                c = cands.index((i, k))
                cols.append(coords[c])
            src.f_mat[i] = tuple(tuple(cols[k][r] for k in range(src.dim))
                                 for r in range(ws.dim))
        for j in range(self.datum.n):
            tgt_wt = tuple(lam[jj] + datum.alpha[j][jj] for jj in range(m))
            tgt = self.spaces.get(tgt_wt)
            if tgt is None:
                continue
            rows = []
            for r in range(tgt.dim):
                rows.append(tuple(e_imgs[s][j][r] for s in selected))
            ws.e_mat[j] = tuple(rows)
        return ws

    # queries ---------------------------------------------------------------------

    def dims(self) -> dict[Wt, int]:
        return {wt: sp.dim for wt, sp in self.spaces.items()}

    def height_of(self, wt: Wt) -> int:
        return self.spaces[wt].height

    def basis_index(self) -> tuple[tuple[Wt, int], ...]:
        return tuple((wt, k) for wt in self.order for k in range(self.spaces[wt].dim))

    def highest_vector(self) -> "Vector":
        return Vector(self, {self.hw: (Fraction(1),)})


def build_basis(datum: RootDatum, hw: Sequence[int], depth: int,
                *, max_depth: Optional[int] = None) -> ModuleSlice:
    key = (tuple(int(x) for x in hw), depth)
    cache = getattr(datum, "_slice_cache", None)
    if cache is None:
        cache = {}
        setattr(datum, "_slice_cache", cache)
    if key not in cache:
        cache[key] = ModuleSlice(datum, hw, depth, max_depth=max_depth)
    return cache[key]


# -- vectors and operators ---------------------------------------------------------


@dataclass
class Vector:
    slice: ModuleSlice
    parts: dict[Wt, tuple[Fraction, ...]]

    def prune(self) -> "Vector":
        self.parts = {wt: v for wt, v in self.parts.items() if any(v)}
        return self

    def is_zero(self) -> bool:
        return not self.parts

    def add(self, other: "Vector") -> "Vector":
        out = dict(self.parts)
        for wt, v in other.parts.items():
            if wt in out:
                out[wt] = tuple(a + b for a, b in zip(out[wt], v))
            else:
                out[wt] = v
        return Vector(self.slice, out).prune()

    def scale(self, c: Fraction) -> "Vector":
        if c == 0:
            return Vector(self.slice, {})
        return Vector(self.slice, {wt: tuple(c * x for x in v)
                                   for wt, v in self.parts.items()})


def _apply_e(v: Vector, i: int) -> Vector:
    sl = v.slice
    out: dict[Wt, list[Fraction]] = {}
    for wt, coeffs in v.parts.items():
        sp = sl.spaces[wt]
        emat = sp.e_mat.get(i)
        if emat is None:
            continue
        tgt_wt = tuple(wt[j] + sl.datum.alpha[i][j] for j in range(sl.datum.m))
        tgt = sl.spaces[tgt_wt]
        acc = out.setdefault(tgt_wt, [Fraction(0)] * tgt.dim)
        for r in range(tgt.dim):
            acc[r] += sum(emat[r][c] * coeffs[c] for c in range(sp.dim))
    return Vector(sl, {wt: tuple(v2) for wt, v2 in out.items()}).prune()


def _apply_f(v: Vector, i: int) -> Vector:
    sl = v.slice
    out: dict[Wt, list[Fraction]] = {}
    for wt, coeffs in v.parts.items():
        sp = sl.spaces[wt]
        fmat = sp.f_mat.get(i)
        if fmat is None:
            tgt_wt = tuple(wt[j] - sl.datum.alpha[i][j] for j in range(sl.datum.m))
            if tgt_wt in sl._nonzero_beyond:
                raise DepthExceeded(needed=sp.height + 1, depth=sl.depth)
            continue  # certified zero: the target weight space vanishes
        tgt_wt = tuple(wt[j] - sl.datum.alpha[i][j] for j in range(sl.datum.m))
        tgt = sl.spaces[tgt_wt]
        acc = out.setdefault(tgt_wt, [Fraction(0)] * tgt.dim)
        for r in range(tgt.dim):
            acc[r] += sum(fmat[r][c] * coeffs[c] for c in range(sp.dim))
    return Vector(sl, {wt: tuple(v2) for wt, v2 in out.items()}).prune()


def _exp_series(v: Vector, step, t: Fraction) -> Vector:
    """exp(t X) v as a finite sum; X must be locally nilpotent on v."""
    total = v
    term = v
    k = 1
    while True:
        term = step(term)
        if term.is_zero():
            return total
        coeff = t ** k / _factorial(k)
        total = total.add(term.scale(coeff))
        k += 1
        if k > 2 * v.slice.depth + 4:
            raise InternalError("exponential failed to terminate inside the slice")


def _factorial(k: int) -> Fraction:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return Fraction(out)


# letters: ("X+", i, t) ("X-", i, t) ("T", coweight, s) ("N", i) ("E", Face)
Letter = tuple


@dataclass(frozen=True)
class GhatWord:
    letters: tuple[Letter, ...]

    def __mul__(self, other: "GhatWord") -> "GhatWord":
        return GhatWord(self.letters + other.letters)


def xplus(i: int, t) -> Letter:
    return ("X+", i, Fraction(t))


def xminus(i: int, t) -> Letter:
    return ("X-", i, Fraction(t))


def torus_letter(h: Sequence[int], s) -> Letter:
    s = Fraction(s)
    if s == 0:
        raise ZeroTorusValue("torus parameter must be nonzero")
    return ("T", tuple(int(x) for x in h), s)


def nsimple(i: int) -> Letter:
    return ("N", i)


def idem(face: Face) -> Letter:
    return ("E", face)


def apply_letter(letter: Letter, v: Vector) -> Vector:
    sl = v.slice
    tag = letter[0]
    if tag == "X+":
        return _exp_series(v, lambda u: _apply_e(u, letter[1]), letter[2])
    if tag == "X-":
        return _exp_series(v, lambda u: _apply_f(u, letter[1]), letter[2])
    if tag == "T":
        h, s = letter[1], letter[2]
        return Vector(sl, {
            wt: tuple(s ** int(exact.vec_dot(wt, h)) * x for x in coeffs)
            for wt, coeffs in v.parts.items()}).prune()
    if tag == "N":
        i = letter[1]
        out = apply_letter(xplus(i, 1), v)
        out = apply_letter(xminus(i, -1), out)
        return apply_letter(xplus(i, 1), out)
    if tag == "E":
        face: Face = letter[1]
        c = face.exposing()
        return Vector(sl, {wt: coeffs for wt, coeffs in v.parts.items()
                           if exact.vec_dot(wt, c) == 0}).prune()
    raise ValueError(f"unknown letter {letter!r}")


def apply_word(word: GhatWord, v: Vector) -> Vector:
    for letter in reversed(word.letters):
        v = apply_letter(letter, v)
    return v


def evaluate_word(slice_: ModuleSlice, word: GhatWord,
                  max_height: Optional[int] = None):
    """Matrix of the word over the slice basis.

    With `max_height`, columns are restricted to basis vectors of height at
    most that bound (rows always run over the whole slice); the restricted
    matrix is still exact, applications beyond the window still raise.
    """
    index = slice_.basis_index()
    pos = {key: p for p, key in enumerate(index)}
    col_index = index if max_height is None else tuple(
        (wt, k) for wt, k in index if slice_.spaces[wt].height <= max_height)
    cols = []
    for wt, k in col_index:
        dim = slice_.spaces[wt].dim
        unit = Vector(slice_, {wt: tuple(Fraction(1) if j == k else Fraction(0)
                                         for j in range(dim))})
        img = apply_word(word, unit)
        col = [Fraction(0)] * len(index)
        for wt2, coeffs in img.parts.items():
            for j, x in enumerate(coeffs):
                col[pos[(wt2, j)]] = x
        cols.append(col)
    return (index, col_index), tuple(tuple(cols[c][r] for c in range(len(col_index)))
                                     for r in range(len(index)))


def inner(slice_: ModuleSlice, v: Vector, u: Vector) -> Fraction:
    total = Fraction(0)
    for wt, a in v.parts.items():
        b = u.parts.get(wt)
        if b is None:
            continue
        g = slice_.spaces[wt].gram
        total += sum(a[r] * g[r][c] * b[c]
                     for r in range(len(a)) for c in range(len(b)))
    return total


def matrix_coefficient(slice_: ModuleSlice, v: Vector, u: Vector,
                       word: GhatWord) -> Fraction:
    """<v | w(u)> under the slice's contravariant form."""
    return inner(slice_, v, apply_word(word, u))


def theta(slice_: ModuleSlice, word: GhatWord) -> Fraction:
    """<v_top | w v_top> / <v_top | v_top>: the highest matrix coefficient.

    Independent of the choice of highest-weight vector and of the scaling of
    the contravariant form.
    """
    v = slice_.highest_vector()
    return matrix_coefficient(slice_, v, v, word)


# -- probes -----------------------------------------------------------------------


@dataclass(frozen=True)
class EqualOnProbes:
    """Equality of operator matrices on the probes tried.

    This is a semi-decision: NOT a proof of equality in the ambient monoid.
    """

    probes: tuple[tuple[Wt, int], ...]


@dataclass(frozen=True)
class Distinct:
    probe: tuple[Wt, int]
    row: tuple[Wt, int]
    col: tuple[Wt, int]
    left: Fraction
    right: Fraction


def probe_equal(datum: RootDatum, w1: GhatWord, w2: GhatWord, probes: Sequence):
    """Compare two words as operators on the given probes.

    Each probe is (hw, depth) or (hw, depth, max_height); the third entry
    restricts the compared columns to basis vectors of bounded height so
    that words with lowering content fit inside the window on infinite
    modules.  EqualOnProbes is NOT a proof of equality in the ambient
    monoid; Distinct returns an exact witness coefficient.
    """
    tried = []
    for probe in probes:
        hw, d = probe[0], probe[1]
        hmax = probe[2] if len(probe) > 2 else None
        sl = build_basis(datum, hw, d)
        (rows, cols), m1 = evaluate_word(sl, w1, max_height=hmax)
        _, m2 = evaluate_word(sl, w2, max_height=hmax)
        if m1 != m2:
            for r in range(len(rows)):
                for c in range(len(cols)):
                    if m1[r][c] != m2[r][c]:
                        return Distinct(probe=(tuple(hw), d), row=rows[r],
                                        col=cols[c], left=m1[r][c], right=m2[r][c])
        tried.append((tuple(int(x) for x in hw), d))
    return EqualOnProbes(probes=tuple(tried))


# -- cell identification ------------------------------------------------------------


def nhat_letters(x: NhatElt) -> list[Letter]:
    """Letters realizing n_w * t * e(face) exactly as a slice operator."""
    out: list[Letter] = [nsimple(i) for i in x.w.word]
    for j, val in enumerate(x.torus):
        if val != 1:
            out.append(torus_letter(x.datum.coroot(j), val))
    if not x.face.is_full_cone():
        out.append(idem(x.face))
    return out


def _root_supp(datum: RootDatum, root: Beta) -> tuple[int, ...]:
    return tuple(i for i in range(datum.n) if root[i] != 0)


def _absorbs(face: Face, root: Beta, side: str) -> bool:
    """Whether exp(g_root) is killed against e(face) on the given side.

    side='left' tests x e(face) = e(face); side='right' tests e(face) x =
    e(face).  The root is conjugated through the face's minimal
    representative and compared against the combinatorial absorption sets.
    """
    datum = face.datum
    g = tuple(int(c) for c in face.w.inv().act_root(root))
    supp = _root_supp(datum, g)
    theta = set(face.theta)
    perp = set(datum.theta_perp(face.theta))
    if set(supp) <= theta:
        return True
    in_perp_part = set(supp) <= perp
    if side == "left":
        return all(c >= 0 for c in g) and not in_perp_part
    return all(c <= 0 for c in g) and not in_perp_part


def bruhat_cell(datum: RootDatum, word: GhatWord) -> WmonElt:
    """Cell of a word presented in (or reducible to) factored shape.

    Supported inputs: a block of lowering exponentials, then normalizer
    letters (lifts, torus, face idempotents), then raising exponentials.
    Simple-root exponentials adjacent to an idempotent are also absorbed
    when the absorption predicate allows it.  Anything else raises
    NotFactored; a general word-to-normal-form rewriter is out of scope.
    """
    middle: Optional[NhatElt] = None
    stage = 0  # 0: lowering prefix, 1: middle, 2: raising suffix
    pending_plus: list[Letter] = []

    def fold(elt: NhatElt):
        nonlocal middle
        middle = elt if middle is None else MO.nhat_mul(middle, elt)

    for letter in word.letters:
        tag = letter[0]
        if tag == "X-":
            root = tuple(-1 if j == letter[1] else 0 for j in range(datum.n))
            if stage == 0:
                continue  # part of the lowering prefix; irrelevant for the cell
            if stage == 1 and not pending_plus and middle is not None \
                    and _absorbs(middle.face, root, side="right"):
                continue
            raise NotFactored("lowering letter after the normalizer block")
        if tag == "X+":
            stage = max(stage, 1)
            pending_plus.append(letter)
            continue
        # normalizer letters: N / T / E
        if tag == "T":
            # torus letters commute across exponentials (rescaling their
            # parameters, which never affects the cell) and die in the
            # T-quotient, so they fold from any position
            fold(MO.nhat_from(W.identity_elt(datum),
                              MO.torus_from_coweight(datum, letter[1], letter[2])))
            continue
        if pending_plus:
            if tag != "E":
                raise NotFactored("raising letters blocked before a non-idempotent")
            face: Face = letter[1]
            for pl in pending_plus:
                root = tuple(1 if j == pl[1] else 0 for j in range(datum.n))
                if not _absorbs(face, root, side="left"):
                    raise NotFactored("raising letter does not absorb into the idempotent")
            pending_plus = []
        stage = 1
        if tag == "N":
            fold(MO.nhat_from(W.simple(datum, letter[1])))
        elif tag == "E":
            fold(MO.nhat_idempotent(letter[1]))
        else:
            raise ValueError(f"unknown letter {letter!r}")
    if middle is None:
        return MO.wm_unit(datum)
    return MO.nhat_to_wmon(middle)


# -- word syntax --------------------------------------------------------------------

_LETTER_RE = re.compile(
    r"X\+\(([^)]*)\)|X-\(([^)]*)\)|T\(([^)]*)\)|N\(([^)]*)\)|E\(([^)]*)\)")


def format_word(word: GhatWord) -> str:
    parts = []
    for letter in word.letters:
        tag = letter[0]
        if tag in ("X+", "X-"):
            parts.append(f"{tag}({letter[1] + 1};{letter[2]})")
        elif tag == "T":
            h = letter[1]
            if sum(1 for x in h if x) == 1 and sum(h) == 1:
                parts.append(f"T(h{h.index(1) + 1};{letter[2]})")
            else:
                parts.append(f"T(v={','.join(str(x) for x in h)};{letter[2]})")
        elif tag == "N":
            parts.append(f"N({letter[1] + 1})")
        elif tag == "E":
            face: Face = letter[1]
            wtxt = " ".join(str(i + 1) for i in face.w.word)
            ttxt = ",".join(str(i + 1) for i in face.theta)
            parts.append(f"E(w={wtxt}; theta={ttxt})")
    return " ".join(parts)


def parse_word(datum: RootDatum, text: str) -> GhatWord:
    """Parse the external word syntax, e.g.
    "X+(1;3/2) X-(2;-1) T(h1;2) N(1) E(w=3 1; theta=1,2)"."""
    letters: list[Letter] = []
    rest = text.strip()
    pos = 0
    while pos < len(rest):
        mm = _LETTER_RE.match(rest, pos)
        if mm is None:
            if rest[pos].isspace():
                pos += 1
                continue
            raise ValueError(f"cannot parse word at: {rest[pos:]!r}")
        xp, xm, tt, nn, ee = mm.groups()
        if xp is not None or xm is not None:
            body = xp if xp is not None else xm
            idx, val = body.split(";")
            i = int(idx) - 1
            letters.append(xplus(i, Fraction(val)) if xp is not None
                           else xminus(i, Fraction(val)))
        elif tt is not None:
            hspec, val = tt.split(";")
            hspec = hspec.strip()
            if hspec.startswith("h"):
                j = int(hspec[1:]) - 1
                h = tuple(1 if k == j else 0 for k in range(datum.m))
            elif hspec.startswith("v="):
                h = tuple(int(x) for x in hspec[2:].split(","))
            else:
                raise ValueError(f"bad torus coweight {hspec!r}")
            letters.append(torus_letter(h, Fraction(val)))
        elif nn is not None:
            letters.append(nsimple(int(nn) - 1))
        else:
            fields = {}
            for part in ee.split(";"):
                key, _, val = part.partition("=")
                fields[key.strip()] = val.strip()
            wtxt = fields.get("w", "")
            ttxt = fields.get("theta", "")
            wword = tuple(int(x) - 1 for x in wtxt.split()) if wtxt else ()
            th = tuple(int(x) - 1 for x in ttxt.split(",")) if ttxt else ()
            face = FC.normalize_face(W.from_word(datum, wword), th)
            letters.append(idem(face))
        pos = mm.end()
    return GhatWord(tuple(letters))
