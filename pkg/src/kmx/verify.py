"""Deterministic verification battery behind the `verify` CLI verb.

Each check exercises one acceptance property with fixed seeds and sorted
iteration, so two runs print byte-identical reports.  The pytest acceptance
suite runs the same functions and additionally enforces the runtime bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Callable, Optional

from . import exact, faces as FC, highest_weight as HW, monoids as MO, toric
from .cartan import (A2_ROWS, AFFINE_A1_ROWS, HYPERBOLIC_ROWS, RootDatum,
                     build_realization, classify, special_sets)
from .errors import DepthExceeded
from . import weyl as W


@dataclass
class CheckResult:
    name: str
    passed: bool
    lines: tuple[str, ...]


def _data():
    return {
        "A2": build_realization(A2_ROWS),
        "affine-A1": build_realization(AFFINE_A1_ROWS),
        "rank3-hyperbolic": build_realization(HYPERBOLIC_ROWS),
    }


def _rand_weyl(rng: random.Random, datum: RootDatum, maxlen: int = 6) -> W.WeylElt:
    return W.from_word(datum, [rng.randrange(datum.n)
                               for _ in range(rng.randrange(maxlen + 1))])


def _rand_face(rng: random.Random, datum: RootDatum) -> FC.Face:
    theta = rng.choice(datum.special_sets())
    return FC.normalize_face(_rand_weyl(rng, datum), theta)


def _fail(lines, msg):
    lines.append("FAIL " + msg)


# -- criterion 1 ------------------------------------------------------------------


def check_hyperbolic_example() -> CheckResult:
    lines = []
    datum = build_realization(HYPERBOLIC_ROWS)
    cls = classify(datum.gcm)
    ok = (len(cls.components) == 1
          and cls.components[0][1].value == "IND"
          and cls.components[0][0] == (0, 1, 2))
    lines.append(f"classification: {[(c, t.value) for c, t in cls.components]}")
    ss = special_sets(datum.gcm)
    expect = ((), (0, 1), (0, 1, 2))
    ok = ok and ss == expect
    lines.append(f"special sets (1-based): {[tuple(i + 1 for i in t) for t in ss]}")
    if not ok:
        _fail(lines, "hyperbolic fixed point mismatch")
    return CheckResult("hyperbolic-classification-and-special-sets", ok, tuple(lines))


# -- criterion 2 ------------------------------------------------------------------


def check_face_counts(samples: int = 1000) -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(20)
    for name, rows, expected in (("finite", A2_ROWS, 1), ("affine", AFFINE_A1_ROWS, 2)):
        datum = build_realization(rows)
        seen = set()
        for _ in range(samples):
            seen.add(_rand_face(rng, datum))
        lines.append(f"{name}: {len(seen)} distinct faces from {samples} samples "
                     f"(expected {expected})")
        if len(seen) != expected:
            ok = False
            _fail(lines, f"{name} face count")
    return CheckResult("face-count-collapse", ok, tuple(lines))


# -- criterion 3 ------------------------------------------------------------------


def check_face_galois(pairs: int = 1000) -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(30)
    for name, datum in sorted(_data().items()):
        bad = 0
        for _ in range(pairs):
            r = _rand_face(rng, datum)
            s = _rand_face(rng, datum)
            meet = FC.intersect(r, s)
            if FC.includes(r, s) != (meet == s):
                bad += 1
            if meet != FC.intersect(s, r) or FC.intersect(r, r) != r:
                bad += 1
            u = _rand_weyl(rng, datum, 4)
            if FC.act_face(u, meet) != FC.intersect(FC.act_face(u, r), FC.act_face(u, s)):
                bad += 1
        for t1 in datum.special_sets():
            for t2 in datum.special_sets():
                lhs = FC.intersect(FC.standard_face(datum, t1), FC.standard_face(datum, t2))
                rhs = FC.standard_face(datum, tuple(sorted(set(t1) | set(t2))))
                if lhs != rhs:
                    bad += 1
        lines.append(f"{name}: {pairs} pairs, {bad} violations")
        if bad:
            ok = False
            _fail(lines, f"{name} Galois/lattice laws")
    return CheckResult("face-lattice-galois", ok, tuple(lines))


# -- criterion 4 ------------------------------------------------------------------


def check_weyl_monoid(triples: int = 1000) -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(40)

    def rand_elt(datum):
        return MO.wm_normalize(_rand_weyl(rng, datum, 5), _rand_face(rng, datum))

    for name, datum in sorted(_data().items()):
        bad = 0
        unit = MO.wm_unit(datum)
        for _ in range(triples):
            x, y, z = (rand_elt(datum) for _ in range(3))
            if MO.wm_mul(MO.wm_mul(x, y), z) != MO.wm_mul(x, MO.wm_mul(y, z)):
                bad += 1
            if MO.wm_mul(unit, x) != x or MO.wm_mul(x, unit) != x:
                bad += 1
            xi = MO.wm_invert(x)
            if MO.wm_mul(MO.wm_mul(x, xi), x) != x or MO.wm_mul(MO.wm_mul(xi, x), xi) != xi:
                bad += 1
            # unit-regular factorization x = (unit part) * (idempotent)
            upart = MO.wm_unit(datum, x.w)
            epart = MO.wm_idempotent(FC.act_face(x.w.inv(), x.face))
            if MO.wm_mul(upart, epart) != x:
                bad += 1
            if x.is_unit() != x.face.is_full_cone():
                bad += 1
            # idempotents commute and mirror the face lattice
            e1 = MO.wm_idempotent(x.face)
            e2 = MO.wm_idempotent(y.face)
            if MO.wm_mul(e1, e2) != MO.wm_mul(e2, e1):
                bad += 1
            if MO.wm_mul(e1, e2) != MO.wm_idempotent(FC.intersect(x.face, y.face)):
                bad += 1
        lines.append(f"{name}: {triples} triples, {bad} violations")
        if bad:
            ok = False
            _fail(lines, f"{name} monoid laws")
    # affine: the monoid is the group plus a single zero
    datum = build_realization(AFFINE_A1_ROWS)
    zero = MO.wm_idempotent(FC.standard_face(datum, (0, 1)))
    bad = 0
    for _ in range(200):
        x = rand_elt(datum)
        if not x.is_unit() and x != zero:
            bad += 1
        if MO.wm_mul(x, zero) != zero or MO.wm_mul(zero, x) != zero:
            bad += 1
    lines.append(f"affine-A1 zero absorption: {bad} violations")
    ok = ok and bad == 0
    return CheckResult("weyl-monoid-laws", ok, tuple(lines))


# -- criterion 5 ------------------------------------------------------------------


def check_kappa_and_cocycle(pairs: int = 500) -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(50)

    def rand_nhat(datum):
        tvals = tuple(Fraction(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2]))
                      for _ in range(datum.m))
        return MO.nhat_from(_rand_weyl(rng, datum, 4), tvals, _rand_face(rng, datum))

    for name, datum in sorted(_data().items()):
        bad = 0
        for _ in range(pairs):
            a, b = rand_nhat(datum), rand_nhat(datum)
            if MO.nhat_to_wmon(MO.nhat_mul(a, b)) != MO.wm_mul(
                    MO.nhat_to_wmon(a), MO.nhat_to_wmon(b)):
                bad += 1
        lines.append(f"{name}: kappa respects {pairs} products, {bad} violations")
        if bad:
            ok = False
            _fail(lines, f"{name} kappa homomorphism")
        # cocycle n_i(1)^2 = t_{h_i}(-1): algebraic and operator-level
        for i in range(datum.n):
            ni = MO.nelt_lift(W.simple(datum, i))
            w2, t2 = MO.nelt_mul(ni, ni)
            expect = MO.torus_from_coweight(datum, datum.coroot(i), Fraction(-1))
            alg_ok = w2.is_identity() and t2 == expect
            probe_hw = tuple(1 if j < datum.n else 0 for j in range(datum.m))
            res = HW.probe_equal(
                datum,
                HW.GhatWord((HW.nsimple(i), HW.nsimple(i))),
                HW.GhatWord((HW.torus_letter(datum.coroot(i), Fraction(-1)),)),
                [(probe_hw, 2, 0)])
            op_ok = isinstance(res, HW.EqualOnProbes)
            lines.append(f"{name}: generator {i + 1} squared cocycle "
                         f"algebraic={'ok' if alg_ok else 'BAD'} "
                         f"operators={'ok' if op_ok else 'BAD'}")
            if not (alg_ok and op_ok):
                ok = False
                _fail(lines, f"{name} cocycle at {i + 1}")
    return CheckResult("normalizer-quotient-and-cocycle", ok, tuple(lines))


# -- criterion 6 ------------------------------------------------------------------


def _adaptive_probe(datum, w1, w2, probes) -> Optional[bool]:
    """Equality on the largest fitting probe heights; None when nothing fits."""
    verdicts = []
    for hw, depth in probes:
        for h0 in (2, 1, 0):
            try:
                res = HW.probe_equal(datum, w1, w2, [(hw, depth, h0)])
            except DepthExceeded:
                continue
            verdicts.append(isinstance(res, HW.EqualOnProbes))
            break
    if not verdicts:
        return None
    return all(verdicts)


def _conj_letters(x: MO.NhatElt, mid: list) -> HW.GhatWord:
    inv_w, inv_t = MO.nelt_inv((x.w, x.torus))
    return HW.GhatWord(tuple(HW.nhat_letters(x) + mid
                             + HW.nhat_letters(MO.nhat_from(inv_w, inv_t))))


def _fundamental_probes(datum, depth):
    return [(tuple(1 if j == k else 0 for j in range(datum.m)), depth)
            for k in range(datum.n)]


def check_operator_theorems() -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(60)
    data = sorted(_data().items())

    # conjugation identity: n e(R) n^{-1} = e(wR) as operators
    for name, datum in data:
        tried = skipped = bad = 0
        for _ in range(12):
            sigma = _rand_weyl(rng, datum, 2)
            face = _rand_face(rng, datum)
            lhs = _conj_letters(MO.nhat_from(sigma), [HW.idem(face)])
            rhs = HW.GhatWord((HW.idem(FC.act_face(sigma, face)),))
            verdict = _adaptive_probe(datum, lhs, rhs, _fundamental_probes(datum, 5))
            if verdict is None:
                skipped += 1
            else:
                tried += 1
                bad += 0 if verdict else 1
        lines.append(f"{name}: projection conjugation {tried} instances, "
                     f"{bad} failures, {skipped} beyond depth")
        if bad:
            ok = False
            _fail(lines, f"{name} conjugation")

    # absorption: exp(g_root) e(R(Theta)) = e(R(Theta)) for roots in the
    # Theta-subsystem (both signs)
    absorb_cases = [
        ("affine-A1", AFFINE_A1_ROWS, (0, 1)),
        ("rank3-hyperbolic", HYPERBOLIC_ROWS, (0, 1)),
        ("rank3-hyperbolic", HYPERBOLIC_ROWS, (0, 1, 2)),
    ]
    for name, rows, theta in absorb_cases:
        datum = build_realization(rows)
        face = FC.standard_face(datum, theta)
        roots = HW.real_roots_with_witness(datum, 3)
        tried = skipped = bad = 0
        for root in sorted(roots):
            if not all(i in theta for i, c in enumerate(root) if c):
                continue
            u, i = roots[root]
            # exp of a root vector for root = u(alpha_i), via the lift of u
            body = _conj_letters(MO.nhat_from(u), [HW.xplus(i, Fraction(1))])
            lhs = HW.GhatWord(body.letters + (HW.idem(face),))
            rhs = HW.GhatWord((HW.idem(face),))
            verdict = _adaptive_probe(datum, lhs, rhs, _fundamental_probes(datum, 5))
            if verdict is None:
                skipped += 1
            else:
                tried += 1
                bad += 0 if verdict else 1
        lines.append(f"{name} type {tuple(i + 1 for i in theta)}: absorption "
                     f"{tried} roots, {bad} failures, {skipped} beyond depth")
        if bad or tried == 0:
            ok = False
            _fail(lines, f"{name} absorption")

    # root condition vs actual invariance of the face-projected submodule
    for name, datum in data:
        roots = HW.real_roots_with_witness(datum, 4)
        faces = sorted({_rand_face(rng, datum) for _ in range(6)},
                       key=lambda f: (f.theta, f.w.word))
        tried = skipped = bad = 0
        for face in faces:
            cvec = face.exposing()
            for root in sorted(roots):
                u, i = roots[root]
                g = tuple(int(c) for c in face.w.inv().act_root(root))
                supp = set(j for j, c in enumerate(g) if c)
                predicate = (all(c >= 0 for c in g) or supp <= set(face.theta)
                             or supp <= set(datum.theta_perp(face.theta)))
                word = _conj_letters(MO.nhat_from(u), [HW.xplus(i, Fraction(1))])
                verdict = _check_preserves(datum, word, cvec)
                if verdict is None:
                    skipped += 1
                    continue
                tried += 1
                if verdict != predicate:
                    bad += 1
        lines.append(f"{name}: root-condition vs invariance {tried} instances, "
                     f"{bad} disagreements, {skipped} beyond depth")
        if bad:
            ok = False
            _fail(lines, f"{name} root condition")

    # tensor indicator law on module weight pairs
    for name, datum in data:
        bad = total = 0
        sl = HW.build_basis(datum, tuple(1 if j < datum.n else 0
                                         for j in range(datum.m)), 4)
        weights = sorted(sl.spaces)
        faces = sorted({_rand_face(rng, datum) for _ in range(4)},
                       key=lambda f: (f.theta, f.w.word))
        for face in faces:
            c = face.exposing()
            for lam in weights:
                for mu in weights:
                    pl, pm = exact.vec_dot(lam, c), exact.vec_dot(mu, c)
                    if pl < 0 or pm < 0:
                        bad += 1  # module weight outside the Tits cone
                    total += 1
                    if ((pl + pm == 0) != (pl == 0 and pm == 0)):
                        bad += 1
        lines.append(f"{name}: indicator multiplicativity on {total} pairs, "
                     f"{bad} violations")
        if bad:
            ok = False
            _fail(lines, f"{name} tensor law")

    # zero absorption for special J
    zero_cases = [
        ("affine-A1", AFFINE_A1_ROWS, (0, 1)),
        ("rank3-hyperbolic", HYPERBOLIC_ROWS, (0, 1)),
        ("rank3-hyperbolic", HYPERBOLIC_ROWS, (0, 1, 2)),
    ]
    for name, rows, jset in zero_cases:
        datum = build_realization(rows)
        zface = FC.standard_face(datum, jset)
        zero = HW.GhatWord((HW.idem(zface),))
        tried = skipped = bad = 0
        for _ in range(10):
            letters = []
            for _ in range(rng.randrange(1, 4)):
                j = rng.choice(jset)
                kind = rng.randrange(3)
                if kind == 0:
                    letters.append(HW.xplus(j, Fraction(rng.randrange(1, 3))))
                elif kind == 1:
                    letters.append(HW.xminus(j, Fraction(rng.randrange(1, 3))))
                else:
                    letters.append(HW.torus_letter(datum.coroot(j),
                                                   Fraction(rng.choice([2, 3, -1]))))
            word = HW.GhatWord(tuple(letters))
            left = HW.GhatWord((HW.idem(zface),) + word.letters)
            right = HW.GhatWord(word.letters + (HW.idem(zface),))
            v1 = _adaptive_probe(datum, left, zero, _fundamental_probes(datum, 5))
            v2 = _adaptive_probe(datum, right, zero, _fundamental_probes(datum, 5))
            if v1 is None or v2 is None:
                skipped += 1
            else:
                tried += 1
                bad += 0 if (v1 and v2) else 1
        lines.append(f"{name} J={tuple(i + 1 for i in jset)}: zero absorption "
                     f"{tried} words, {bad} failures, {skipped} beyond depth")
        if bad or tried == 0:
            ok = False
            _fail(lines, f"{name} zero absorption")
    return CheckResult("operator-theorems", ok, tuple(lines))


def _check_preserves(datum, word: HW.GhatWord, cvec) -> Optional[bool]:
    """Does the word map face-supported basis vectors into the face span?

    Checked on fundamental slices with restricted columns; None when no
    probe fits the depth window.
    """
    any_fit = False
    for hw, depth in _fundamental_probes(datum, 5):
        sl = HW.build_basis(datum, hw, depth)
        for h0 in (2, 1, 0):
            try:
                (rows, cols), mat = HW.evaluate_word(sl, word, max_height=h0)
            except DepthExceeded:
                continue
            relevant = False
            for c, (wt_c, _) in enumerate(cols):
                if exact.vec_dot(wt_c, cvec) != 0:
                    continue
                relevant = True
                for r, (wt_r, _) in enumerate(rows):
                    if mat[r][c] != 0 and exact.vec_dot(wt_r, cvec) != 0:
                        return False
            if relevant:
                any_fit = True
            break
    return True if any_fit else None


# -- criterion 7 ------------------------------------------------------------------


def check_multiplicity_oracles() -> CheckResult:
    lines = []
    ok = True
    cases = [
        ("A2", A2_ROWS, (1, 0)),
        ("A2", A2_ROWS, (1, 1)),
        ("affine-A1", AFFINE_A1_ROWS, (1, 0, 0)),
    ]
    for name, rows, hw in cases:
        datum = build_realization(rows)
        freud = HW.weights_and_mults(datum, hw, 4)
        sl = HW.build_basis(datum, hw, 4)
        agree = freud == sl.dims()
        lines.append(f"{name} hw={hw}: {len(freud)} weights, "
                     f"routes {'agree' if agree else 'DISAGREE'}")
        if not agree:
            ok = False
            _fail(lines, f"{name} multiplicities")
        bad = 0
        for wt in sorted(sl.spaces):
            sp = sl.spaces[wt]
            for i in range(datum.n):
                em = sp.e_mat.get(i)
                if em is None:
                    continue
                up = tuple(wt[j] + datum.alpha[i][j] for j in range(datum.m))
                usp = sl.spaces[up]
                fm = usp.f_mat[i]
                for a in range(sp.dim):
                    for b in range(usp.dim):
                        lhs = sum(usp.gram[r][b] * em[r][a] for r in range(usp.dim))
                        rhs = sum(sp.gram[a][c] * fm[c][b] for c in range(sp.dim))
                        if lhs != rhs:
                            bad += 1
        lines.append(f"{name} hw={hw}: contravariance violations {bad}")
        if bad:
            ok = False
            _fail(lines, f"{name} contravariance")
    return CheckResult("multiplicity-cross-oracle", ok, tuple(lines))


# -- criterion 8 ------------------------------------------------------------------


def check_theta_multiplicative(count: int = 100) -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(80)
    cases = [
        ("A2", A2_ROWS, (1, 0), (0, 1), 4),
        ("affine-A1", AFFINE_A1_ROWS, (1, 0, 0), (0, 1, 0), 3),
    ]
    for name, rows, hw1, hw2, depth in cases:
        datum = build_realization(rows)
        hw3 = tuple(a + b for a, b in zip(hw1, hw2))
        s1 = HW.build_basis(datum, hw1, depth)
        s2 = HW.build_basis(datum, hw2, depth)
        s3 = HW.build_basis(datum, hw3, depth)
        done = skipped = bad = 0
        while done < count and skipped < 40 * count:
            letters = []
            for _ in range(rng.randrange(1, 4)):
                kind = rng.randrange(5)
                i = rng.randrange(datum.n)
                if kind == 0:
                    letters.append(HW.xminus(i, Fraction(rng.randrange(1, 3))))
                elif kind == 1:
                    letters.append(HW.xplus(i, Fraction(rng.randrange(1, 3))))
                elif kind == 2:
                    letters.append(HW.torus_letter(
                        datum.coroot(rng.randrange(datum.m)),
                        Fraction(rng.choice([2, 3, -1, 1]), rng.choice([1, 2]))))
                elif kind == 3:
                    letters.append(HW.nsimple(i))
                else:
                    letters.append(HW.idem(_rand_face(rng, datum)))
            word = HW.GhatWord(tuple(letters))
            try:
                t1, t2, t3 = HW.theta(s1, word), HW.theta(s2, word), HW.theta(s3, word)
            except DepthExceeded:
                skipped += 1
                continue
            done += 1
            if t1 * t2 != t3:
                bad += 1
        lines.append(f"{name}: {done} words checked ({skipped} beyond depth), "
                     f"{bad} violations")
        if bad or done < count:
            ok = False
            _fail(lines, f"{name} theta multiplicativity")
    return CheckResult("theta-multiplicativity", ok, tuple(lines))


# -- criterion 9 ------------------------------------------------------------------


def check_toric(count: int = 100) -> CheckResult:
    lines = []
    ok = True
    rng = random.Random(90)
    bad_mem = bad_rt = bad_part = bad_meet = 0
    boxes = 0
    for case in range(count):
        rank = rng.randrange(2, 5)
        ngen = rng.randrange(1, rank + 3)
        gens = [tuple(rng.randrange(-3, 4) for _ in range(rank)) for _ in range(ngen)]
        m1 = toric.LatticeMonoid(gens, rank)
        # membership against an independent nonnegative-combination oracle
        span = 2
        pts = list(iproduct(range(-span, span + 1), repeat=rank))
        cols = exact.transpose(exact.int_mat(gens))
        for x in pts:
            boxes += 1
            oracle = exact.nonneg_solve(cols, x) is not None
            if m1.contains(x) != oracle:
                bad_mem += 1
        # round trip: regenerate from the cone description
        gens2 = list(m1.rays) + [v for b in m1.lineality for v in (b, tuple(-c for c in b))]
        m2 = toric.LatticeMonoid(gens2 or [(0,) * rank], rank)
        for x in pts:
            if m1.contains(x) != m2.contains(x):
                bad_rt += 1
        if len(m1.faces()) != len(m2.faces()):
            bad_rt += 1
        # relative interiors partition the monoid
        for x in pts:
            if not m1.contains(x):
                continue
            hits = [f.index for f in m1.faces() if m1.relative_interior_contains(f, x)]
            if len(hits) != 1:
                bad_part += 1
        # meets agree with set intersection on the box
        fl = m1.faces()
        for fa in fl:
            for fb in fl:
                meet = m1.face_meet(fa, fb)
                for x in pts:
                    if not m1.contains(x):
                        continue
                    inter = m1.face_contains(fa, x) and m1.face_contains(fb, x)
                    if inter != m1.face_contains(meet, x):
                        bad_meet += 1
    lines.append(f"{count} random cones, {boxes} box points: "
                 f"membership {bad_mem}, round-trip {bad_rt}, "
                 f"ri-partition {bad_part}, meet {bad_meet} violations")
    if bad_mem or bad_rt or bad_part or bad_meet:
        ok = False
        _fail(lines, "toric lattice checks")
    return CheckResult("toric-gordan-roundtrip", ok, tuple(lines))


def check_random_gcms(count: int = 24) -> CheckResult:
    """Randomized matrices within guards: classification, realization and
    face-law smoke across freshly sampled symmetrizable inputs."""
    from .errors import NotSymmetrizable
    from .cartan import validate_and_symmetrize

    lines = []
    ok = True
    rng = random.Random(100)
    tried = bad = 0
    while tried < count:
        n = rng.randrange(2, 4)
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.randrange(2):
                    rows[i][j] = -rng.randrange(1, 4)
                    rows[j][i] = -rng.randrange(1, 4)
        try:
            gcm = validate_and_symmetrize(rows)
        except NotSymmetrizable:
            continue
        tried += 1
        datum = build_realization(gcm)
        a = gcm.a
        for i in range(n):
            for j in range(n):
                if datum.pair(datum.alpha[i], datum.coroot(j)) != a[j][i]:
                    bad += 1
            if datum.form_weights(datum.alpha[i], datum.alpha[i]) * gcm.eps[i] != 2:
                bad += 1
        specials = datum.special_sets()
        for t1 in specials:
            for t2 in specials:
                if tuple(sorted(set(t1) | set(t2))) not in specials:
                    bad += 1
        for _ in range(10):
            r, s = _rand_face(rng, datum), _rand_face(rng, datum)
            meet = FC.intersect(r, s)
            if FC.includes(r, s) != (meet == s) or meet != FC.intersect(s, r):
                bad += 1
    lines.append(f"{tried} random symmetrizable matrices, {bad} violations")
    if bad:
        ok = False
        _fail(lines, "randomized sweep")
    return CheckResult("randomized-matrix-sweep", ok, tuple(lines))


# -- driver -----------------------------------------------------------------------

ALL_CHECKS: tuple[tuple[str, Callable[[], CheckResult]], ...] = (
    ("1", check_hyperbolic_example),
    ("2", check_face_counts),
    ("3", check_face_galois),
    ("4", check_weyl_monoid),
    ("5", check_kappa_and_cocycle),
    ("6", check_operator_theorems),
    ("7", check_multiplicity_oracles),
    ("8", check_theta_multiplicative),
    ("9", check_toric),
    ("r", check_random_gcms),
)


def run_all() -> tuple[bool, str]:
    out = []
    all_ok = True
    for num, fn in ALL_CHECKS:
        res = fn()
        all_ok = all_ok and res.passed
        out.append(f"[{num}] {res.name}: {'PASS' if res.passed else 'FAIL'}")
        for line in res.lines:
            out.append(f"    {line}")
    out.append("result: " + ("all checks passed" if all_ok else "FAILURES PRESENT"))
    return all_ok, "\n".join(out) + "\n"
