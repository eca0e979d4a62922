"""The Weyl monoid, the torus monoid and the normalizer monoid.

Weyl monoid elements are congruence classes of pairs (face R, sigma) under
(R, sigma) ~ (R, sigma') iff sigma' sigma^{-1} centralizes R; the class acts
on the Tits cone by lam -> sigma(lam) if sigma(lam) lies in R, else an
explicit absorbing Zero.  Torus-monoid elements t e(R) are canonicalized by
the values of t on a Smith-basis of the lattice spanned by R.  Normalizer
elements are n_w t e(R) where n_w is the canonical lift of a reduced word;
products use the rank-one cocycle n_i^2 = t_{h_i}(-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import exact, faces as F, weyl as W
from .cartan import RootDatum
from .errors import InternalError, PreconditionViolated, ZeroTorusValue
from .exact import IntVec
from .faces import Face
from .weyl import WeylElt


class ZeroWeight:
    """Absorbing value of the Tits-cone action; distinct from the zero weight."""

    _instance: Optional["ZeroWeight"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"


ZERO = ZeroWeight()


# -- Weyl monoid ---------------------------------------------------------------


@dataclass(frozen=True)
class WmonElt:
    face: Face
    w: WeylElt  # canonical representative of Z_W(face) * w

    @property
    def datum(self) -> RootDatum:
        return self.face.datum

    def is_idempotent(self) -> bool:
        return self.w.is_identity()

    def is_unit(self) -> bool:
        return self.face.is_full_cone()


def _centralizer_rep(face: Face, sigma: WeylElt) -> WeylElt:
    """Canonical representative of the right coset Z_W(face) * sigma.

    Conjugate into W_Theta form through the face's minimal representative,
    strip to the minimal element of W_Theta tau, and conjugate back.
    """
    tau = face.w.inv() * sigma
    rep, _ = W.min_coset_left(tau, face.theta)
    return face.w * rep


def wm_normalize(w: WeylElt, face: Face) -> WmonElt:
    return WmonElt(face=face, w=_centralizer_rep(face, w))


def wm_unit(datum: RootDatum, w: Optional[WeylElt] = None) -> WmonElt:
    return wm_normalize(w if w is not None else W.identity_elt(datum),
                        F.full_cone(datum))


def wm_idempotent(face: Face) -> WmonElt:
    return wm_normalize(W.identity_elt(face.datum), face)


def wm_mul(x: WmonElt, y: WmonElt) -> WmonElt:
    face = F.intersect(x.face, F.act_face(x.w, y.face))
    return wm_normalize(x.w * y.w, face)


def wm_invert(x: WmonElt) -> WmonElt:
    return wm_normalize(x.w.inv(), F.act_face(x.w.inv(), x.face))


def wm_apply(x: WmonElt, weight: Sequence, *, known_in_cone: bool = False):
    """Action on the Tits cone: sigma(lam) when it lands in the face, else Zero.

    Well-defined on congruence classes: replacing sigma by z sigma with z
    centralizing the face changes neither the membership test nor the image.
    Tits-cone membership verdicts (NotInTitsCone / Undecided) pass through
    unless the caller certifies the input with known_in_cone.
    """
    img = x.w.act_weight(weight)
    if F.contains(x.face, img, known_in_cone=known_in_cone):
        return tuple(img)
    return ZERO


# -- torus monoid ---------------------------------------------------------------

TorusVals = tuple[Fraction, ...]  # values on the fundamental-weight basis of P


def torus_one(datum: RootDatum) -> TorusVals:
    return (Fraction(1),) * datum.m


def torus_from_coweight(datum: RootDatum, h: Sequence[int], s: Fraction) -> TorusVals:
    """t_h(s): the homomorphism lam -> s^{lam(h)}."""
    s = Fraction(s)
    if s == 0:
        raise ZeroTorusValue("torus parameter must be nonzero")
    return tuple(s ** int(y) for y in h)


def torus_mul(a: TorusVals, b: TorusVals) -> TorusVals:
    return tuple(x * y for x, y in zip(a, b))


def torus_inv(a: TorusVals) -> TorusVals:
    return tuple(1 / x for x in a)


def torus_eval(datum: RootDatum, t: TorusVals, weight: Sequence[int]) -> Fraction:
    val = Fraction(1)
    for tv, c in zip(t, weight):
        val *= tv ** int(c)
    return val


def torus_act(u: WeylElt, t: TorusVals) -> TorusVals:
    """(u t)(lam) = t(u^{-1} lam); exact via the integer matrix of u^{-1}."""
    datum = u.datum
    cols = exact.transpose(u.mat_p_inv)
    return tuple(torus_eval(datum, t, col) for col in cols)


def _span_lattice_basis(face: Face) -> tuple[IntVec, ...]:
    """Smith-basis of (span of the face) intersected with P."""
    normals = face.span_normals()
    if not normals:
        return tuple(tuple(row) for row in exact.identity(face.datum.m))
    return exact.kernel_lattice_basis(exact.int_mat(normals))


@dataclass(frozen=True)
class ThatElt:
    """t e(R) in canonical form: values of t on a Smith-basis of span(R) cap P."""

    face: Face
    basis: tuple[IntVec, ...]
    values: TorusVals

    @property
    def datum(self) -> RootDatum:
        return self.face.datum


def that_normalize(t: TorusVals, face: Face) -> ThatElt:
    if any(v == 0 for v in t):
        raise ZeroTorusValue("torus values must be nonzero")
    basis = _span_lattice_basis(face)
    return ThatElt(face=face, basis=basis,
                   values=tuple(torus_eval(face.datum, t, b) for b in basis))


def that_idempotent(face: Face) -> ThatElt:
    return that_normalize(torus_one(face.datum), face)


def _restricted_eval(x: ThatElt, weight: Sequence[int]) -> Fraction:
    """Evaluate the restricted data on a lattice point of span(face)."""
    if not x.basis:
        if any(weight):
            raise InternalError("weight outside the face span")
        return Fraction(1)
    coords = exact.rat_solve(exact.transpose(exact.int_mat(x.basis)), weight)
    if coords is None:
        raise InternalError("weight outside the face span")
    c, _ = coords
    if any(ci.denominator != 1 for ci in c):
        raise InternalError("span lattice basis is not saturated")
    val = Fraction(1)
    for v, ci in zip(x.values, c):
        val *= v ** int(ci)
    return val


def that_mul(x: ThatElt, y: ThatElt) -> ThatElt:
    """(t e(R)) (t' e(S)) = t t' e(R cap S); re-restrict to the smaller span."""
    face = F.intersect(x.face, y.face)
    basis = _span_lattice_basis(face)
    vals = tuple(_restricted_eval(x, b) * _restricted_eval(y, b) for b in basis)
    return ThatElt(face=face, basis=basis, values=vals)


def that_act(u: WeylElt, x: ThatElt) -> ThatElt:
    """sigma(t e(R)) = sigma(t) e(sigma R)."""
    face = F.act_face(u, x.face)
    basis = _span_lattice_basis(face)
    vals = []
    for b in basis:
        pre = u.inv().act_weight(b)
        vals.append(_restricted_eval(x, tuple(int(c) for c in pre)))
    return ThatElt(face=face, basis=basis, values=tuple(vals))


def that_eval(x: ThatElt, weight: Sequence[int], *, known_in_cone: bool = False):
    """Operator value on a weight: t(lam) on the face, else Zero."""
    if F.contains(x.face, weight, known_in_cone=known_in_cone):
        return _restricted_eval(x, weight)
    return ZERO


# -- canonical Weyl lifts and the normalizer monoid ------------------------------

NElt = tuple[WeylElt, TorusVals]  # n_w followed by a torus element: n_w * t


def _minus_one_torus(datum: RootDatum, i: int) -> TorusVals:
    return torus_from_coweight(datum, datum.coroot(i), Fraction(-1))


def _gen_mul(i: int, v: WeylElt, t: TorusVals) -> tuple[WeylElt, TorusVals]:
    """n_i * (n_v t): fold one canonical generator from the left."""
    datum = v.datum
    s = W.simple(datum, i)
    if v.left_descent(i):
        v2 = s * v
        corr = torus_act(v2.inv(), _minus_one_torus(datum, i))
        return v2, torus_mul(corr, t)
    return s * v, t


def nelt_identity(datum: RootDatum) -> NElt:
    return (W.identity_elt(datum), torus_one(datum))


def nelt_mul(a: NElt, b: NElt) -> NElt:
    w, tau = a
    v, s = b
    cur_v, cur_t = v, torus_mul(torus_act(v.inv(), tau), s)
    for i in reversed(w.word):
        cur_v, cur_t = _gen_mul(i, cur_v, cur_t)
    return cur_v, cur_t


def nelt_lift(w: WeylElt) -> NElt:
    return (w, torus_one(w.datum))


def nelt_inv(a: NElt) -> NElt:
    w, tau = a
    wi = w.inv()
    _, c0 = nelt_mul(nelt_lift(wi), nelt_lift(w))
    corr = torus_act(w, torus_inv(torus_mul(tau, c0)))
    return (wi, corr)


@dataclass(frozen=True)
class NhatElt:
    """n_w * t * e(face), with e applied first."""

    w: WeylElt
    torus: TorusVals
    face: Face

    @property
    def datum(self) -> RootDatum:
        return self.w.datum

    def canonical(self) -> tuple[WmonElt, Face, TorusVals]:
        """(kappa-class, face, residual torus values on the face span).

        The class determines the canonical sigma; the residual torus element
        s with  n_w t e(R) = n_sigma s e(R)  is found by dividing off a lift
        of sigma and an explicit centralizer lift of the leftover Weyl part.
        """
        cached = self.__dict__.get("_canon")
        if cached is not None:
            return cached
        kappa_class = nhat_to_wmon(self)
        sigma = kappa_class.w
        q = nelt_mul(nelt_inv(nelt_lift(sigma)), (self.w, self.torus))
        v, s0 = q
        vbar = self.face.w.inv() * v * self.face.w
        if not W.in_parabolic(vbar, self.face.theta):
            raise InternalError("leftover Weyl part does not centralize the face")
        m = nelt_mul(nelt_mul(nelt_lift(self.face.w), nelt_lift(vbar)),
                     nelt_inv(nelt_lift(self.face.w)))
        res = nelt_mul(q, nelt_inv(m))
        if not res[0].is_identity():
            raise InternalError("centralizer lift failed to cancel the Weyl part")
        restricted = that_normalize(res[1], self.face)
        canon = (kappa_class, self.face, restricted.values)
        object.__setattr__(self, "_canon", canon)
        return canon

    def __eq__(self, other):
        if not isinstance(other, NhatElt) or self.datum is not other.datum:
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())


def nhat_from(w: WeylElt, t: Optional[TorusVals] = None,
              face: Optional[Face] = None) -> NhatElt:
    datum = w.datum
    t = torus_one(datum) if t is None else t
    if any(v == 0 for v in t):
        raise ZeroTorusValue("torus values must be nonzero")
    face = F.full_cone(datum) if face is None else face
    return NhatElt(w=w, torus=t, face=face)


def nhat_idempotent(face: Face) -> NhatElt:
    return nhat_from(W.identity_elt(face.datum), face=face)


def nhat_mul(x: NhatElt, y: NhatElt) -> NhatElt:
    """e(R) n_v = n_v e(v^{-1} R) moves both idempotents to the right."""
    w, tau = nelt_mul((x.w, x.torus), (y.w, y.torus))
    face = F.intersect(F.act_face(y.w.inv(), x.face), y.face)
    return NhatElt(w=w, torus=tau, face=face)


def nhat_to_wmon(x: NhatElt) -> WmonElt:
    """kappa: N-hat / T  ->  W-hat (a monoid isomorphism)."""
    return wm_normalize(x.w, F.act_face(x.w, x.face))


def nhat_conj_idem(x: NhatElt, face: Face) -> Face:
    """n e(R) n^{-1} = e(wR) for n in the unit group N; returns e's new face."""
    if not x.face.is_full_cone():
        raise PreconditionViolated("conjugation of idempotents needs a unit of N-hat")
    prod = nhat_mul(nhat_mul(x, nhat_idempotent(face)), nhat_inv(x))
    expect = F.act_face(x.w, face)
    if prod != nhat_idempotent(expect):
        raise InternalError("idempotent conjugation disagrees with the face action")
    return expect


def nhat_inv(x: NhatElt) -> NhatElt:
    """Monoid inverse: (n t e(R))^inv = e(R) (n t)^{-1} = (nt)^{-1} e(wR)."""
    w, tau = nelt_inv((x.w, x.torus))
    return NhatElt(w=w, torus=tau, face=F.act_face(x.w, x.face))
