"""Command-line front end.

All indices are 1-based in input and output.  Output is deterministic JSON
(fixed key order, exact rationals as strings); --text renders small aligned
tables instead.  Exit codes: 0 success, 1 domain error, 2 usage error,
3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import faces as FC, highest_weight as HW, monoids as MO, toric, verify
from . import weyl as W
from .cartan import RootDatum, build_realization, classify, special_sets
from .errors import DomainError, GuardError, NotInTitsCone


def _load_gcm(args) -> RootDatum:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    elif getattr(args, "gcm", None):
        payload = json.loads(args.gcm)
    else:
        raise DomainError("no Cartan matrix given: use -i FILE or --gcm JSON")
    if not isinstance(payload, dict) or "A" not in payload:
        raise DomainError('Cartan matrix input must be {"A": [[...], ...]}')
    return build_realization(payload["A"])


def _parse_subset(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(sorted(int(x) - 1 for x in text.replace(",", " ").split()))


def _parse_word(datum, text: str):
    word = tuple(int(x) - 1 for x in text.split())
    return W.from_word(datum, word)


def _parse_weight(datum, text: str):
    vals = tuple(Fraction(x) for x in text.replace(",", " ").split())
    if len(vals) != datum.m:
        raise DomainError(f"weight needs {datum.m} coordinates")
    return vals


def _parse_face(datum, text: str) -> FC.Face:
    text = text.strip()
    if text.startswith("{"):
        payload = json.loads(text)
        wtxt = payload.get("w", "")
        theta = tuple(int(x) - 1 for x in payload.get("theta", ()))
    else:
        fields = {}
        for part in text.split(";"):
            key, _, val = part.partition("=")
            fields[key.strip()] = val.strip()
        wtxt = fields.get("w", "")
        theta = _parse_subset(fields.get("theta", ""))
    return FC.normalize_face(_parse_word(datum, wtxt), theta)


def _face_json(face: FC.Face) -> dict:
    return {"w": " ".join(str(i + 1) for i in face.w.word),
            "theta": [i + 1 for i in face.theta]}


def _wmon_json(x: MO.WmonElt) -> dict:
    return {"w": " ".join(str(i + 1) for i in x.w.word),
            "face": _face_json(x.face),
            "is_idempotent": x.is_idempotent(),
            "is_unit": x.is_unit()}


def _parse_wmon(datum, text: str) -> MO.WmonElt:
    payload = json.loads(text)
    face = FC.normalize_face(_parse_word(datum, payload["face"]["w"]),
                             tuple(int(x) - 1 for x in payload["face"]["theta"]))
    return MO.wm_normalize(_parse_word(datum, payload.get("w", "")), face)


def _parse_torus(datum, vals) -> MO.TorusVals:
    t = tuple(Fraction(str(v)) for v in vals)
    if len(t) != datum.m:
        raise DomainError(f"torus element needs {datum.m} values")
    return t


def _that_json(x: MO.ThatElt) -> dict:
    return {"face": _face_json(x.face),
            "basis": [list(b) for b in x.basis],
            "values": [str(v) for v in x.values]}


def _parse_nhat(datum, text: str) -> MO.NhatElt:
    payload = json.loads(text)
    face = FC.full_cone(datum)
    if payload.get("face"):
        face = FC.normalize_face(_parse_word(datum, payload["face"]["w"]),
                                 tuple(int(x) - 1 for x in payload["face"]["theta"]))
    torus = _parse_torus(datum, payload.get("t", ["1"] * datum.m))
    return MO.nhat_from(_parse_word(datum, payload.get("w", "")), torus, face)


def _nhat_json(x: MO.NhatElt) -> dict:
    kappa, face, residual = x.canonical()
    return {"w": " ".join(str(i + 1) for i in x.w.word),
            "torus": [str(v) for v in x.torus],
            "face": _face_json(face),
            "canonical_w": " ".join(str(i + 1) for i in kappa.w.word),
            "residual_torus": [str(v) for v in residual],
            "kappa": _wmon_json(kappa)}


def _parse_monoid(args) -> toric.LatticeMonoid:
    payload = json.loads(args.monoid)
    if "rank" not in payload or "generators" not in payload:
        raise DomainError('monoid input must be {"rank": r, "generators": [[...], ...]}')
    return toric.LatticeMonoid(payload["generators"], payload["rank"])


def _vec_str_list(v):
    return [str(x) for x in v]


def _default_depth(args) -> int:
    if getattr(args, "depth", None) is not None:
        return args.depth
    return int(os.environ.get("KMX_DEPTH", "4"))


def _emit(args, obj) -> None:
    if getattr(args, "text", False):
        sys.stdout.write(_render_text(obj) + "\n")
    else:
        sys.stdout.write(json.dumps(obj) + "\n")


def _render_text(obj, indent: str = "") -> str:
    if isinstance(obj, dict):
        lines = []
        width = max((len(str(k)) for k in obj), default=0)
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}{k}:")
                lines.append(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{str(k):<{width}}  {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            _render_text(v, indent + "  ") if isinstance(v, (dict, list))
            else f"{indent}- {v}" for v in obj)
    return f"{indent}{obj}"


# -- handlers -----------------------------------------------------------------------


def cmd_validate(args):
    datum = _load_gcm(args)
    _emit(args, {
        "valid": True,
        "n": datum.n,
        "rank": datum.l,
        "symmetrizer": [str(e) for e in datum.gcm.eps],
        "B": [[str(x) for x in row] for row in datum.gcm.b],
    })


def cmd_classify(args):
    datum = _load_gcm(args)
    subset = _parse_subset(args.subset) if args.subset else None
    cls = classify(datum.gcm, subset)
    _emit(args, {
        "components": [{"set": [i + 1 for i in comp], "type": t.value}
                       for comp, t in cls.components],
        "theta0": [i + 1 for i in cls.theta0],
        "theta_inf": [i + 1 for i in cls.theta_inf],
    })


def cmd_special(args):
    datum = _load_gcm(args)
    _emit(args, [[i + 1 for i in t] for t in special_sets(datum.gcm)])


def cmd_expose(args):
    datum = _load_gcm(args)
    theta = _parse_subset(args.theta)
    c = datum.exposing_coweight(theta)
    _emit(args, {"theta": [i + 1 for i in theta], "coweight": list(c)})


def cmd_realize(args):
    datum = _load_gcm(args)
    _emit(args, {
        "n": datum.n,
        "rank": datum.l,
        "dim": datum.m,
        "alpha": [list(a) for a in datum.alpha],
        "symmetrizer": [str(e) for e in datum.gcm.eps],
        "coroot_gram": [[str(x) for x in row] for row in datum.gram],
    })


def cmd_weyl_reduce(args):
    datum = _load_gcm(args)
    w = _parse_word(datum, args.word)
    _emit(args, {
        "word": " ".join(str(i + 1) for i in w.word),
        "length": w.length,
        "left_descents": [i + 1 for i in w.left_descents()],
        "right_descents": [i + 1 for i in w.right_descents()],
        "matrix": [list(row) for row in w.mat_p],
    })


def cmd_dominant(args):
    datum = _load_gcm(args)
    if args.antidominant:
        d = tuple(int(Fraction(x)) for x in args.weight.replace(",", " ").split())
        dmin, v = W.antidominant_coweight(datum, d)
        _emit(args, {
            "antidominant": list(dmin),
            "word": " ".join(str(i + 1) for i in v.word),
        })
        return
    lam = _parse_weight(datum, args.weight)
    try:
        res = W.dominant_rep(datum, lam, cap=args.cap)
    except NotInTitsCone as e:
        _emit(args, {"status": "not_in_tits_cone", "certificate": e.certificate})
        return
    _emit(args, {
        "status": "ok",
        "dominant": _vec_str_list(res.dominant),
        "word": " ".join(str(i + 1) for i in res.w.word),
        "facet_type": [i + 1 for i in res.facet_type],
    })


def cmd_face_normalize(args):
    datum = _load_gcm(args)
    _emit(args, _face_json(_parse_face(datum, args.face)))


def cmd_face_include(args):
    datum = _load_gcm(args)
    r = _parse_face(datum, args.left)
    s = _parse_face(datum, args.right)
    _emit(args, {"included": FC.includes(r, s)})


def cmd_face_intersect(args):
    datum = _load_gcm(args)
    r = _parse_face(datum, args.left)
    s = _parse_face(datum, args.right)
    _emit(args, _face_json(FC.intersect(r, s)))


def cmd_face_of_point(args):
    datum = _load_gcm(args)
    lam = _parse_weight(datum, args.weight)
    face = FC.face_of_point(datum, lam, cap=args.cap)
    out = _face_json(face)
    if args.predicates:
        ref = _parse_face(datum, args.predicates)
        preds = FC.face_predicates(ref, weight=lam)
        if args.element is not None:
            preds.update(FC.face_predicates(ref, u=_parse_word(datum, args.element)))
        out = {"face": out, "predicates": preds}
    _emit(args, out)


def cmd_wmon_mul(args):
    datum = _load_gcm(args)
    x = _parse_wmon(datum, args.left)
    y = _parse_wmon(datum, args.right)
    prod = MO.wm_mul(x, y)
    out = _wmon_json(prod)
    if args.apply is not None:
        lam = _parse_weight(datum, args.apply)
        img = MO.wm_apply(prod, lam)
        out = {"product": out,
               "applied": "zero" if img is MO.ZERO else _vec_str_list(img)}
    _emit(args, out)


def cmd_wmon_inv(args):
    datum = _load_gcm(args)
    x = _parse_wmon(datum, args.elt)
    _emit(args, {
        "inverse": _wmon_json(MO.wm_invert(x)),
        "is_idempotent": x.is_idempotent(),
        "is_unit": x.is_unit(),
    })


def cmd_that_mul(args):
    datum = _load_gcm(args)

    def parse(text):
        payload = json.loads(text)
        face = FC.normalize_face(_parse_word(datum, payload["face"]["w"]),
                                 tuple(int(i) - 1 for i in payload["face"]["theta"]))
        return MO.that_normalize(_parse_torus(datum, payload.get("t", ["1"] * datum.m)), face)

    x, y = parse(args.left), parse(args.right)
    out = _that_json(MO.that_mul(x, y))
    if args.act is not None:
        out = {"product": out,
               "acted": _that_json(MO.that_act(_parse_word(datum, args.act),
                                               MO.that_mul(x, y)))}
    _emit(args, out)


def cmd_nhat_mul(args):
    datum = _load_gcm(args)
    x = _parse_nhat(datum, args.left)
    y = _parse_nhat(datum, args.right)
    prod = MO.nhat_mul(x, y)
    out = _nhat_json(prod)
    if args.conj_face is not None:
        face = _parse_face(datum, args.conj_face)
        out = {"product": out,
               "conjugated_face": _face_json(MO.nhat_conj_idem(x, face))}
    _emit(args, out)


def cmd_toric_saturate(args):
    m = _parse_monoid(args)
    out = {
        "rank": m.rank,
        "rays": [list(r) for r in m.rays],
        "lineality": [list(b) for b in m.lineality],
        "inequalities": [list(a) for a in m.inequalities],
        "equalities": [list(a) for a in m.equalities],
        "num_faces": len(m.faces()),
    }
    if args.contains is not None:
        x = tuple(int(v) for v in args.contains.replace(",", " ").split())
        out["contains"] = m.contains(x)
    _emit(args, out)


def cmd_toric_faces(args):
    m = _parse_monoid(args)
    faces = m.faces()
    out = {"faces": [{"index": f.index, "dim": f.dim,
                      "hull": [list(b) for b in f.hull]} for f in faces]}
    if args.face is not None:
        f = faces[args.face]
        entry = {"index": f.index, "dim": f.dim,
                 "hull": [list(b) for b in f.hull],
                 "subfaces": [g.index for g in m.closure_order(f)]}
        if args.ri is not None:
            x = tuple(int(v) for v in args.ri.replace(",", " ").split())
            entry["relative_interior_contains"] = m.relative_interior_contains(f, x)
        if args.dual:
            d = m.dual_face(f)
            entry["dual_face"] = {"rays": [list(r) for r in d.rays],
                                  "lineality": [list(b) for b in d.lineality],
                                  "num_faces": len(d.faces())}
        out["face"] = entry
    if args.principal_open is not None:
        x = tuple(int(v) for v in args.principal_open.replace(",", " ").split())
        out["principal_open"] = [f.index for f in m.principal_open(x)]
    if args.idempotents:
        out["idempotents"] = [{"face": e.face_index, "values": [str(v) for v in e.values]}
                              for e in toric.mhat_idempotents(m)]
    _emit(args, out)


def _parse_hw(datum, text):
    vals = tuple(int(Fraction(x)) for x in text.replace(",", " ").split())
    if len(vals) != datum.m:
        raise DomainError(f"highest weight needs {datum.m} coordinates")
    return vals


def cmd_module_weights(args):
    datum = _load_gcm(args)
    hw = _parse_hw(datum, args.hw)
    table = HW.weights_and_mults(datum, hw, _default_depth(args))
    _emit(args, {"weights": [{"weight": list(wt), "mult": table[wt]}
                             for wt in sorted(table)]})


def cmd_module_basis(args):
    datum = _load_gcm(args)
    hw = _parse_hw(datum, args.hw)
    sl = HW.build_basis(datum, hw, _default_depth(args))
    out = []
    for wt in sl.order:
        sp = sl.spaces[wt]
        out.append({
            "weight": list(wt),
            "dim": sp.dim,
            "basis_words": [" ".join(str(i + 1) for i in word) for word in sp.words],
            "gram": [[str(x) for x in row] for row in sp.gram],
        })
    _emit(args, {"depth": sl.depth, "spaces": out})


def cmd_ghat_eval(args):
    datum = _load_gcm(args)
    hw = _parse_hw(datum, args.hw)
    sl = HW.build_basis(datum, hw, _default_depth(args))
    word = HW.parse_word(datum, args.word)
    (rows, cols), mat = HW.evaluate_word(sl, word, max_height=args.max_height)
    _emit(args, {
        "rows": [{"weight": list(wt), "index": k} for wt, k in rows],
        "cols": [{"weight": list(wt), "index": k} for wt, k in cols],
        "matrix": [[str(x) for x in row] for row in mat],
    })


def cmd_ghat_theta(args):
    datum = _load_gcm(args)
    hw = _parse_hw(datum, args.hw)
    sl = HW.build_basis(datum, hw, _default_depth(args))
    word = HW.parse_word(datum, args.word)
    _emit(args, {"theta": str(HW.theta(sl, word))})


def cmd_ghat_equal(args):
    datum = _load_gcm(args)
    w1 = HW.parse_word(datum, args.word1)
    w2 = HW.parse_word(datum, args.word2)
    probes = []
    for chunk in args.probes.split(";"):
        parts = chunk.split(":")
        hw = _parse_hw(datum, parts[0])
        depth = int(parts[1])
        probes.append((hw, depth, int(parts[2])) if len(parts) > 2 else (hw, depth))
    res = HW.probe_equal(datum, w1, w2, probes)
    if isinstance(res, HW.EqualOnProbes):
        _emit(args, {"verdict": "equal_on_probes",
                     "note": "not a proof of equality in the full monoid",
                     "probes": [{"hw": list(h), "depth": d} for h, d in res.probes]})
    else:
        _emit(args, {"verdict": "distinct",
                     "probe": {"hw": list(res.probe[0]), "depth": res.probe[1]},
                     "row": {"weight": list(res.row[0]), "index": res.row[1]},
                     "col": {"weight": list(res.col[0]), "index": res.col[1]},
                     "left": str(res.left), "right": str(res.right)})


def cmd_ghat_cell(args):
    datum = _load_gcm(args)
    word = HW.parse_word(datum, args.word)
    _emit(args, _wmon_json(HW.bruhat_cell(datum, word)))


def cmd_verify(args):
    ok, report = verify.run_all()
    sys.stdout.write(report)
    if not ok:
        sys.exit(1)


# -- parser -------------------------------------------------------------------------


def _add_gcm_opts(p):
    p.add_argument("-i", "--input", help="path to a JSON file {\"A\": [[...], ...]}")
    p.add_argument("--gcm", help="inline JSON Cartan matrix")
    p.add_argument("--text", action="store_true", help="aligned text output")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kmx",
        description="exact Kac-Moody monoid-completion combinatorics")
    sub = ap.add_subparsers(dest="verb", required=True)

    def verb(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_gcm_opts(p)
        p.set_defaults(fn=fn)
        return p

    verb("validate", cmd_validate, help="validate and symmetrize a Cartan matrix")
    p = verb("classify", cmd_classify, help="component types (FIN/AFF/IND)")
    p.add_argument("-S", "--subset", help="1-based index subset, e.g. '1,2'")
    verb("special", cmd_special, help="all special subsets")
    p = verb("expose", cmd_expose, help="canonical exposing coweight of a special set")
    p.add_argument("--theta", required=True)
    verb("realize", cmd_realize, help="explicit realization data")
    p = verb("weyl-reduce", cmd_weyl_reduce, help="canonical reduced word and descents")
    p.add_argument("--word", required=True, help="1-based simple indices, e.g. '1 2 1'")
    p = verb("dominant", cmd_dominant, help="dominance minimization with certificates")
    p.add_argument("--weight", required=True)
    p.add_argument("--antidominant", action="store_true",
                   help="treat the input as an integer coweight and antidominant-minimize")
    p.add_argument("--cap", type=int, default=2000)
    p = verb("face-normalize", cmd_face_normalize, help="face normal form")
    p.add_argument("--face", required=True, help="'w=3 1;theta=1,2' or JSON")
    p = verb("face-include", cmd_face_include, help="is the right face inside the left?")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = verb("face-intersect", cmd_face_intersect, help="meet of two faces")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p = verb("face-of-point", cmd_face_of_point, help="smallest face containing a weight")
    p.add_argument("--weight", required=True)
    p.add_argument("--predicates", help="face to test the point's predicates against")
    p.add_argument("--element", help="Weyl word for centralize/normalize predicates")
    p.add_argument("--cap", type=int, default=2000)
    p = verb("wmon-mul", cmd_wmon_mul, help="Weyl monoid product")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--apply", help="weight to apply the product to")
    p = verb("wmon-inv", cmd_wmon_inv, help="Weyl monoid inverse and flags")
    p.add_argument("--elt", required=True)
    p = verb("that-mul", cmd_that_mul, help="torus monoid product")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--act", help="Weyl word acting on the product")
    p = verb("nhat-mul", cmd_nhat_mul, help="normalizer monoid product")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--conj-face", help="conjugate this face idempotent by the left element")
    p = verb("toric-saturate", cmd_toric_saturate, help="saturate a lattice monoid")
    p.add_argument("--monoid", required=True)
    p.add_argument("--contains", help="lattice point to test")
    p = verb("toric-faces", cmd_toric_faces, help="face lattice of a lattice monoid")
    p.add_argument("--monoid", required=True)
    p.add_argument("--face", type=int, help="face index for detailed operations")
    p.add_argument("--ri", help="point for a relative-interior test")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--principal-open", help="point m for D(m)")
    p.add_argument("--idempotents", action="store_true")
    p = verb("module-weights", cmd_module_weights, help="weight multiplicities")
    p.add_argument("--hw", required=True)
    p.add_argument("--depth", type=int)
    p = verb("module-basis", cmd_module_basis, help="slice bases and Gram matrices")
    p.add_argument("--hw", required=True)
    p.add_argument("--depth", type=int)
    p = verb("ghat-eval", cmd_ghat_eval, help="operator matrix of a word")
    p.add_argument("--hw", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--word", required=True)
    p.add_argument("--max-height", type=int)
    p = verb("ghat-theta", cmd_ghat_theta, help="highest matrix coefficient")
    p.add_argument("--hw", required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--word", required=True)
    p = verb("ghat-equal", cmd_ghat_equal, help="probe operator equality of two words")
    p.add_argument("--word1", required=True)
    p.add_argument("--word2", required=True)
    p.add_argument("--probes", required=True, help="'hw:depth[:height];...'")
    p = verb("ghat-cell", cmd_ghat_cell, help="cell of a factored word")
    p.add_argument("--word", required=True)
    verb("verify", cmd_verify, help="run the deterministic verification battery")
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    args = ap.parse_args(argv)
    try:
        args.fn(args)
    except DomainError as e:
        sys.stdout.write(json.dumps({"error": {"kind": type(e).__name__,
                                               "message": str(e)}}) + "\n")
        return 1
    except GuardError as e:
        sys.stdout.write(json.dumps({"error": {"kind": type(e).__name__,
                                               "message": str(e)}}) + "\n")
        return 3
    except (ValueError, KeyError, IndexError, OSError) as e:
        # malformed user input (bad JSON, bad word syntax, missing file)
        sys.stdout.write(json.dumps({"error": {"kind": type(e).__name__,
                                               "message": str(e)}}) + "\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
