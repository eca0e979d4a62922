"""The face lattice of the Tits cone, in normal form, with its Weyl action.

A face is stored as (w, Theta) with Theta special and w the minimal coset
representative modulo W_{Theta u Theta^perp}; this pair is unique per face.
Faces are never enumerated globally (there can be infinitely many);
every query is normal-form local.

Intersection realizes faces as exposed faces: each face is the zero set on
the Tits cone of an integer coweight (a Weyl image of an exposing coweight),
the coweights add, and antidominant minimization of the sum lands on a
canonical exposing coweight whose support is special.  The Galois property
with inclusion cross-validates this route against the double-coset route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import weyl as W
from .cartan import RootDatum, classify, is_special
from .errors import NotSpecial
from .exact import IntVec, vec_add
from .weyl import WeylElt, antidominant_coweight, dominant_rep


@dataclass(frozen=True)
class Face:
    w: WeylElt
    theta: tuple[int, ...]

    @property
    def datum(self) -> RootDatum:
        return self.w.datum

    def is_full_cone(self) -> bool:
        return self.theta == ()

    def exposing(self) -> IntVec:
        """Integer coweight whose zero set on the Tits cone is this face."""
        return tuple(int(x) for x in
                     self.w.act_coweight(self.datum.exposing_coweight(self.theta)))

    def span_normals(self) -> tuple[IntVec, ...]:
        """Coweights w*h_i (i in Theta) cutting out the linear span."""
        return tuple(tuple(int(x) for x in self.w.act_coweight(self.datum.coroot(i)))
                     for i in self.theta)


def normalize_face(w: WeylElt, theta: Sequence[int]) -> Face:
    datum = w.datum
    key = tuple(sorted(set(theta)))
    if not is_special(datum.gcm, key):
        raise NotSpecial(key)
    stab = key + datum.theta_perp(key)
    rep, _ = W.min_coset_right(w, stab)
    return Face(w=rep, theta=key)


def full_cone(datum: RootDatum) -> Face:
    return Face(w=W.identity_elt(datum), theta=())


def standard_face(datum: RootDatum, theta: Sequence[int]) -> Face:
    return normalize_face(W.identity_elt(datum), theta)


def act_face(u: WeylElt, r: Face) -> Face:
    return normalize_face(u * r.w, r.theta)


def includes(r: Face, s: Face) -> bool:
    """S <= R, i.e. S is a subset of R (double-coset criterion)."""
    if not set(s.theta) >= set(r.theta):
        return False
    perp = r.datum.theta_perp(r.theta)
    return W.in_parabolic_product(r.w.inv() * s.w, perp, s.theta)


def intersect(r: Face, s: Face) -> Face:
    """Meet in the face lattice via added exposing coweights."""
    d = vec_add(r.exposing(), s.exposing())
    if not any(d):
        return full_cone(r.datum)
    dmin, v = antidominant_coweight(r.datum, d)
    support = tuple(i for i in range(r.datum.n) if dmin[i] != 0)
    return normalize_face(v.inv(), support)


def face_of_point(datum: RootDatum, weight: Sequence, cap: int = 2000) -> Face:
    """Smallest face containing a Tits-cone weight.

    Propagates NotInTitsCone / Undecided verdicts from dominance
    minimization.  For lam = w * lam+ with facet type J, the face is
    w R(J^infty): finite-type components of J keep the point in the
    relative interior.
    """
    res = dominant_rep(datum, weight, cap=cap)
    theta = classify(datum.gcm, res.facet_type).theta_inf
    return normalize_face(res.w, theta)


def contains(r: Face, weight: Sequence, *, known_in_cone: bool = False,
             cap: int = 2000) -> bool:
    """Point containment: lam in X and lam(c_R) = 0 for the exposing coweight."""
    if not known_in_cone:
        dominant_rep(r.datum, weight, cap=cap)  # raises if not certified inside
    return r.datum.pair(weight, r.exposing()) == 0


def in_relative_interior(r: Face, weight: Sequence, cap: int = 2000) -> bool:
    return face_of_point(r.datum, weight, cap=cap) == r


def in_span(r: Face, weight: Sequence) -> bool:
    return all(r.datum.pair(weight, h) == 0 for h in r.span_normals())


def centralizes(r: Face, u: WeylElt) -> bool:
    """u fixes the face pointwise iff u lies in w_R W_Theta w_R^{-1}."""
    return W.in_parabolic(r.w.inv() * u * r.w, r.theta)


def normalizes(r: Face, u: WeylElt) -> bool:
    stab = r.theta + r.datum.theta_perp(r.theta)
    return W.in_parabolic(r.w.inv() * u * r.w, stab)


def face_predicates(r: Face, *, weight: Optional[Sequence] = None,
                    u: Optional[WeylElt] = None, cap: int = 2000) -> dict:
    out: dict = {}
    if weight is not None:
        out["contains"] = contains(r, weight, cap=cap)
        out["in_relative_interior"] = in_relative_interior(r, weight, cap=cap)
        out["in_span"] = in_span(r, weight)
    if u is not None:
        out["centralizes"] = centralizes(r, u)
        out["normalizes"] = normalizes(r, u)
    return out
