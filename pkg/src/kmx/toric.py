"""Saturated submonoids of a lattice and their Hom-monoids.

Implements the finitely generated case of the cone/monoid correspondence:
saturation as cone-intersect-lattice via exact double description, the full
face lattice, relative interiors, hulls, dual faces, and the monoid of
homomorphisms into the rationals with its idempotent and orbit structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import exact
from .errors import NotAFace, NotInMonoid, RankMismatch, SizeGuard
from .exact import IntVec

RANK_GUARD = 8
GENERATOR_GUARD = 64


def _dd_pair(inequalities: Sequence[IntVec], dim: int) -> tuple[tuple[IntVec, ...], tuple[IntVec, ...]]:
    """Double description: (lineality basis, extreme rays) of
    {y : a . y >= 0 for all a}.

    Exact incremental method; zero sets are recomputed against all
    inequalities processed so far, which keeps the combinatorial adjacency
    test sound.
    """
    lineality: list[tuple[Fraction, ...]] = [
        tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim)
    ]
    rays: list[IntVec] = []
    processed: list[IntVec] = []

    def zero_set(r):
        return frozenset(j for j, b in enumerate(processed)
                         if exact.vec_dot(b, r) == 0)

    for a in inequalities:
        av = [exact.vec_dot(a, v) for v in lineality]
        pivot = next((k for k, val in enumerate(av) if val != 0), None)
        if pivot is not None:
            # Split one lineality direction into a ray; project the rest.
            v0 = lineality[pivot]
            c0 = av[pivot]
            lineality = [exact.vec_sub(v, exact.vec_scale(av[k] / c0, v0))
                         for k, v in enumerate(lineality) if k != pivot]
            new_rays = [exact.primitive_ray(exact.vec_sub(
                r, exact.vec_scale(Fraction(exact.vec_dot(a, r)) / c0, v0)))
                for r in rays]
            r0 = v0 if c0 > 0 else exact.vec_scale(Fraction(-1), v0)
            rays = list(dict.fromkeys(new_rays + [exact.primitive_ray(r0)]))
        else:
            vals = [exact.vec_dot(a, r) for r in rays]
            zsets = [zero_set(r) for r in rays]
            plus = [k for k, v in enumerate(vals) if v > 0]
            minus = [k for k, v in enumerate(vals) if v < 0]
            keep = [rays[k] for k, v in enumerate(vals) if v >= 0]
            for p in plus:
                for m_ in minus:
                    common = zsets[p] & zsets[m_]
                    if any(common <= zsets[k] for k in range(len(rays))
                           if k not in (p, m_)):
                        continue
                    newr = exact.vec_sub(exact.vec_scale(vals[p], rays[m_]),
                                         exact.vec_scale(vals[m_], rays[p]))
                    keep.append(exact.primitive_ray(newr))
            rays = list(dict.fromkeys(keep))
        processed.append(tuple(a))

    prim_rays = sorted({exact.primitive_ray(r) for r in rays if any(r)})
    lin_basis = exact.saturate_span([exact.primitive(v) for v in lineality if any(v)], dim)
    return lin_basis, tuple(prim_rays)


@dataclass(frozen=True)
class MonoidFace:
    """A face of a finitely generated saturated monoid."""

    index: int
    ray_ids: tuple[int, ...]       # cone rays contained in the face
    active: tuple[int, ...]        # facet inequalities vanishing on the face
    hull: tuple[IntVec, ...]       # Smith-basis of (span F) cap lattice
    dim: int


class LatticeMonoid:
    """Saturation of the monoid generated by integer vectors: cone cap lattice."""

    def __init__(self, generators: Sequence[Sequence[int]], rank: int):
        if rank < 0 or rank > RANK_GUARD:
            raise SizeGuard(f"rank guarded to <= {RANK_GUARD}")
        gens = [tuple(int(x) for x in g) for g in generators]
        if any(len(g) != rank for g in gens):
            raise RankMismatch("generator length differs from the ambient rank")
        if len(gens) > GENERATOR_GUARD:
            raise SizeGuard(f"at most {GENERATOR_GUARD} generators supported")
        self.rank = rank
        self.generators = tuple(gens)
        # Dual cone {y : g.y >= 0}: its lineality cuts equalities, its rays
        # cut the facet inequalities of the primal cone.
        dual_lin, dual_rays = _dd_pair(self.generators, rank)
        self.equalities: tuple[IntVec, ...] = dual_lin
        self.inequalities: tuple[IntVec, ...] = dual_rays
        # Primal description back from the inequalities: lineality and rays.
        ineqs = list(self.inequalities)
        for eq in self.equalities:
            ineqs.append(eq)
            ineqs.append(tuple(-x for x in eq))
        self.lineality, self.rays = _dd_pair(ineqs, rank)
        self._faces: Optional[tuple[MonoidFace, ...]] = None

    # -- membership ----------------------------------------------------------

    def contains(self, x: Sequence[int]) -> bool:
        if len(x) != self.rank:
            raise RankMismatch("point has the wrong length")
        return (all(exact.vec_dot(a, x) >= 0 for a in self.inequalities)
                and all(exact.vec_dot(a, x) == 0 for a in self.equalities))

    def active_set(self, x: Sequence[int]) -> tuple[int, ...]:
        if not self.contains(x):
            raise NotInMonoid(f"{tuple(x)} is outside the monoid")
        return tuple(i for i, a in enumerate(self.inequalities)
                     if exact.vec_dot(a, x) == 0)

    # -- face lattice ----------------------------------------------------------

    def faces(self) -> tuple[MonoidFace, ...]:
        """All faces, ordered by (dimension, ray set).

        Faces are intersections of facets; each is identified by the set of
        extreme rays it contains (every face contains the lineality).
        """
        if self._faces is not None:
            return self._faces
        nray = len(self.rays)
        full = frozenset(range(nray))
        ray_sets = {full}
        facet_rays = []
        for a in self.inequalities:
            fs = frozenset(k for k in range(nray)
                           if exact.vec_dot(a, self.rays[k]) == 0)
            facet_rays.append(fs)
            ray_sets.add(fs)
        frontier = set(ray_sets)
        while frontier:
            new = set()
            for rs in frontier:
                for fs in facet_rays:
                    cand = rs & fs
                    if cand not in ray_sets:
                        new.add(cand)
            ray_sets |= new
            frontier = new
        faces = []
        for rs in ray_sets:
            span_vecs = [self.rays[k] for k in sorted(rs)] + list(self.lineality)
            hull = exact.saturate_span(span_vecs, self.rank)
            active = tuple(i for i, a in enumerate(self.inequalities)
                           if all(exact.vec_dot(a, self.rays[k]) == 0 for k in rs))
            faces.append((len(hull), tuple(sorted(rs)), active, hull))
        faces.sort(key=lambda t: (t[0], t[1]))
        self._faces = tuple(
            MonoidFace(index=i, ray_ids=rids, active=act, hull=hull, dim=d)
            for i, (d, rids, act, hull) in enumerate(faces)
        )
        return self._faces

    def face_of(self, x: Sequence[int]) -> MonoidFace:
        """Smallest face containing x; its full active set matches that of x."""
        act = self.active_set(x)
        for f in self.faces():
            if f.active == act:
                return f
        raise NotAFace(f"no face with active set {act}")

    def _point_in_face(self, x, f: MonoidFace) -> bool:
        return (self.contains(x)
                and all(exact.vec_dot(self.inequalities[i], x) == 0 for i in f.active)
                and self._in_hull(x, f))

    def _in_hull(self, x, f: MonoidFace) -> bool:
        if not f.hull:
            return not any(x)
        sol = exact.rat_solve(exact.transpose(exact.int_mat(f.hull)), tuple(x))
        return sol is not None and all(c.denominator == 1 for c in sol[0])

    def face_contains(self, f: MonoidFace, x: Sequence[int]) -> bool:
        return self._point_in_face(x, f)

    def top_face(self) -> MonoidFace:
        return self.faces()[-1]

    def face_leq(self, f: MonoidFace, g: MonoidFace) -> bool:
        return set(f.ray_ids) <= set(g.ray_ids)

    def face_meet(self, f: MonoidFace, g: MonoidFace) -> MonoidFace:
        rs = tuple(sorted(set(f.ray_ids) & set(g.ray_ids)))
        for h in self.faces():
            if h.ray_ids == rs:
                return h
        raise NotAFace("meet fell outside the computed lattice")

    def subfaces(self, f: MonoidFace) -> tuple[MonoidFace, ...]:
        return tuple(g for g in self.faces() if self.face_leq(g, f))

    # -- section 1.2 operations -------------------------------------------------

    def relative_interior_contains(self, f: MonoidFace, x: Sequence[int]) -> bool:
        """In f but in no proper subface: active sets coincide."""
        if not self._point_in_face(x, f):
            return False
        return self.active_set(x) == f.active

    def hull_basis(self, f: MonoidFace) -> tuple[IntVec, ...]:
        return f.hull

    def dual_face(self, f: MonoidFace) -> "LatticeMonoid":
        """The monoid M - F, generated by M and the negated hull of F."""
        gens = list(self.generators)
        for v in f.hull:
            gens.append(v)
            gens.append(tuple(-x for x in v))
        return LatticeMonoid(gens, self.rank)

    def closure_order(self, f: MonoidFace) -> tuple[MonoidFace, ...]:
        """Faces G whose torus orbit lies in the closure of T(F): the subfaces."""
        return self.subfaces(f)

    def principal_open(self, m: Sequence[int]) -> tuple[MonoidFace, ...]:
        """Faces G with e(G)(m) != 0, i.e. G containing the ri-face of m."""
        fm = self.face_of(m)
        return tuple(g for g in self.faces() if self.face_leq(fm, g))


def saturate_and_faces(generators: Sequence[Sequence[int]], rank: int) -> LatticeMonoid:
    return LatticeMonoid(generators, rank)


# -- the Hom monoid -------------------------------------------------------------


@dataclass(frozen=True)
class MhatElt:
    """A rational-valued monoid homomorphism with support face `face`:
    nonzero scalars on the hull basis of the face, zero off the face."""

    monoid: LatticeMonoid = field(compare=False)
    face_index: int
    values: tuple[Fraction, ...]

    @property
    def face(self) -> MonoidFace:
        return self.monoid.faces()[self.face_index]

    def __call__(self, x: Sequence[int]) -> Fraction:
        if not self.monoid.contains(x):
            raise NotInMonoid(f"{tuple(x)} is outside the monoid")
        f = self.face
        if not self.monoid.face_contains(f, x):
            return Fraction(0)
        if not f.hull:
            return Fraction(1)
        sol = exact.rat_solve(exact.transpose(exact.int_mat(f.hull)), tuple(x))
        assert sol is not None
        val = Fraction(1)
        for v, c in zip(self.values, sol[0]):
            assert c.denominator == 1
            val *= v ** int(c)
        return val


def mhat_idempotent(monoid: LatticeMonoid, f: MonoidFace) -> MhatElt:
    return MhatElt(monoid=monoid, face_index=f.index,
                   values=(Fraction(1),) * len(f.hull))


def mhat_idempotents(monoid: LatticeMonoid) -> tuple[MhatElt, ...]:
    return tuple(mhat_idempotent(monoid, f) for f in monoid.faces())


def mhat_unit(monoid: LatticeMonoid, values: Sequence[Fraction]) -> MhatElt:
    """A unit: nonzero values on the hull basis of the whole monoid."""
    top = monoid.top_face()
    vals = tuple(Fraction(v) for v in values)
    if len(vals) != len(top.hull) or any(v == 0 for v in vals):
        raise ValueError("need one nonzero value per hull basis vector")
    return MhatElt(monoid=monoid, face_index=top.index, values=vals)


def mhat_mul(x: MhatElt, y: MhatElt) -> MhatElt:
    """Pointwise product: support is the meet, values multiply on its hull."""
    assert x.monoid is y.monoid
    m = x.monoid
    f = m.face_meet(x.face, y.face)
    vals = []
    for b in f.hull:
        vx = _eval_on_span(x, b)
        vy = _eval_on_span(y, b)
        vals.append(vx * vy)
    return MhatElt(monoid=m, face_index=f.index, values=tuple(vals))


def _eval_on_span(x: MhatElt, b: IntVec) -> Fraction:
    f = x.face
    sol = exact.rat_solve(exact.transpose(exact.int_mat(f.hull)), tuple(b))
    assert sol is not None and all(c.denominator == 1 for c in sol[0])
    val = Fraction(1)
    for v, c in zip(x.values, sol[0]):
        val *= v ** int(c)
    return val
