"""Command line front end.

    sparsetrop cones  --input family.json [--format json]
    sparsetrop mult   --input family.json [--point 1,0]
    sparsetrop degree --input family.json [--subset 0,3]
    sparsetrop order  --input family.json [--strict]
    sparsetrop verify --input family.json

The input is a JSON object with ``dim``, ``supports`` and optional ``deg_f``
and ``deg_rho``. Exit codes: 0 success, 2 bad input, 3 a violated invariant
or integrality check, 4 an unmet hypothesis under ``--strict``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import oracle
from .degree import degree_chain
from .exceptions import (IntegralityViolation, InvariantViolation, NotInTropicalization,
                         NotRegular)
from .fan import enumerate_coherent_collections, is_essential
from .lattice import SupportSet, hull
from .mixed_volume import mixed_volume
from .multiplicity import MultiplicityQuery, m_w, multiplicities, trop_F
from .order import order_at_origin
from .tropical import build_tropicalization, image_dimension_report, maximal_cones

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_HYPOTHESIS = 0, 2, 3, 4


class InputError(Exception):
    pass


# --- input --------------------------------------------------------------------


def _int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {json.dumps(x)}")
    return x


def parse_document(text: str) -> dict:
    """Validate an input document; supports are translated into the positive orthant."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    for key in ("dim", "supports"):
        if key not in doc:
            raise InputError(f"missing field '{key}'")
    unknown = sorted(set(doc) - {"dim", "supports", "deg_f", "deg_rho"})
    if unknown:
        raise InputError(f"unknown field(s): {', '.join(unknown)}")
    d = _int(doc["dim"], "dim")
    if d < 1:
        raise InputError("dim: must be at least 1")
    sups = doc["supports"]
    if not isinstance(sups, list) or len(sups) < 2:
        raise InputError("supports: need a list of at least two supports")
    pts = []
    for i, A in enumerate(sups):
        if not isinstance(A, list) or not A:
            raise InputError(f"supports[{i}]: must be a nonempty list of points")
        row = []
        for k, p in enumerate(A):
            if not isinstance(p, list) or len(p) != d:
                raise InputError(f"supports[{i}][{k}]: expected a vector of length {d}")
            row.append(tuple(_int(x, f"supports[{i}][{k}]") for x in p))
        pts.append(row)
    degs = {}
    for key in ("deg_f", "deg_rho"):
        v = _int(doc.get(key, 1), key)
        if v < 1:
            raise InputError(f"{key}: must be positive")
        degs[key] = v
    # one common shift keeps the map unchanged (all f_i get the same monomial factor)
    shift = tuple(min(0, *(p[c] for A in pts for p in A)) for c in range(d))
    shifted = [SupportSet([tuple(x - s for x, s in zip(p, shift)) for p in A], d) for A in pts]
    canon = json.dumps({"dim": d, "supports": [[list(p) for p in A] for A in pts], **degs},
                       sort_keys=True, separators=(",", ":"))
    return {
        "dim": d,
        "supports": shifted,
        "shift": tuple(-s for s in shift),
        "digest": hashlib.sha256(canon.encode()).hexdigest(),
        **degs,
    }


def parse_point(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"--point: cannot read {text!r} as comma-separated rationals") from None


def parse_subset(text: str) -> tuple[int, ...]:
    try:
        return tuple(sorted({int(x) for x in text.split(",")}))
    except ValueError:
        raise InputError(f"--subset: cannot read {text!r}") from None


# --- payloads -------------------------------------------------------------------


def _q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vec(v):
    return [int(x) for x in v]


def _qvec(v):
    return [_q(x) for x in v]


def cmd_cones(doc, args):
    sups = doc["supports"]
    colls = enumerate_coherent_collections(sups)
    cones = build_tropicalization(sups, colls)
    dim, only_empty = image_dimension_report(cones)
    mcs = maximal_cones(cones)
    out = {
        "image_dimension": dim,
        "only_empty_J_at_top": only_empty,
        "cone_count": len(cones),
        "maximal_cones": [
            {"dim": m.dim, "rays": [_vec(r) for r in m.rays],
             "lineality": [_vec(v) for v in m.cone.lineality],
             "representative": _vec(m.representative), "convex": m.convex}
            for m in mcs
        ],
    }
    rays = sorted({tuple(r) for m in mcs for r in m.rays})
    out["rays"] = [_vec(r) for r in rays]
    status = [] if all(m.convex for m in mcs) else ["NONCONVEX_MAXIMAL_CELL"]
    return out, status


def _deg_F(doc):
    q, r = divmod(doc["deg_f"], doc["deg_rho"])
    if r:
        raise InputError(f"deg_rho = {doc['deg_rho']} must divide deg_f = {doc['deg_f']}")
    return q


def _mult_entry(rep, rays=None):
    e = {"w": _qvec(rep.w), "m_w": rep.m_w,
         "preimages": [{"v": _qvec(p.v), "m_v": p.m_v, "index": p.index} for p in rep.preimages]}
    if rays is not None:
        e["rays"] = [_vec(r) for r in rays]
    return e


def cmd_mult(doc, args):
    sups = doc["supports"]
    deg_F, deg_rho = _deg_F(doc), doc["deg_rho"]
    if args.point:
        w = parse_point(args.point)
        if len(w) != len(sups) - 1:
            raise InputError(f"--point: expected {len(sups) - 1} coordinates, got {len(w)}")
        colls = enumerate_coherent_collections(sups)
        try:
            rep = m_w(MultiplicityQuery(w, deg_F, deg_rho), sups, trop_F(sups, colls),
                      build_tropicalization(sups, colls))
        except (NotInTropicalization, NotRegular) as e:
            raise InputError(f"--point: {e}") from None
        return {"deg_F": deg_F, "deg_rho": deg_rho, "points": [_mult_entry(rep)]}, []
    entries = [_mult_entry(rep, mc.rays) for mc, rep in multiplicities(sups, deg_F, deg_rho)]
    out = {"deg_F": deg_F, "deg_rho": deg_rho, "points": entries}
    # balancing: only meaningful when every maximal cone is a ray
    if all(len(e["rays"]) == 1 for e in entries):
        n = len(sups) - 1
        tot = [sum(e["m_w"] * e["rays"][0][i] for e in entries) for i in range(n)]
        out["weighted_ray_sum"] = tot
        if any(tot):
            raise InvariantViolation(f"weighted rays do not balance: {tot}")
    return out, []


def cmd_degree(doc, args):
    sups = doc["supports"]
    subsets = [parse_subset(s) for s in args.subset] if args.subset else None
    d = doc["dim"]
    if subsets:
        for I in subsets:
            if len(I) != d or not all(0 <= i < len(sups) for i in I):
                raise InputError(f"--subset: {list(I)} must be {d} distinct indices in [0, {len(sups) - 1}]")
    rep = degree_chain(sups, doc["deg_f"], subsets, threads=args.threads)
    out = {
        "chain": rep.chain_text(),
        "mv_lift": rep.mv_lift,
        "deg_S": rep.deg_S,
        "min_d_I": rep.min_dI,
        "max_d_I": rep.max_dI,
        "vol_union": rep.vol_union,
        "flags": rep.chain_flags,
        "d_I": [{"I": list(I), "value": v} for I, v in sorted(rep.d_I_table.items())],
    }
    if rep.hull_criterion:
        out["vol_equals_d_I"] = [{"I": list(I), "value": v} for I, v in sorted(rep.hull_criterion.items())]
        out["lift_equals_d_I"] = [
            {"I": list(I), "hypothesis": r.hypothesis, "conclusion": r.conclusion}
            for I, r in sorted(rep.lift_criterion.items())]
    if rep.mv_lift % doc["deg_f"]:
        raise IntegralityViolation("deg(S) not integral")
    return out, []


def cmd_order(doc, args):
    sups = doc["supports"]
    if doc["dim"] != len(sups) - 2:
        raise InputError(f"order needs dim = n - 1; got dim = {doc['dim']} with n = {len(sups) - 1}")
    rep = order_at_origin(sups, doc["deg_f"])
    out = {
        "tame": rep.tame,
        "witness_alpha": _vec(rep.witness_alpha) if rep.witness_alpha else None,
        "witness_J": list(rep.witness_J) if rep.witness_J else None,
        "mv_double_lift": rep.mv2,
        "mv_single_lift": rep.mv1,
        "min_union_mv": rep.min_union_mv,
        "ord_times_deg": rep.ord_times_deg,
        "lower_bound": rep.lower_bound,
        "ord": rep.ord,
        "single_support_j0": rep.single_support_j0,
    }
    status = [] if rep.tame else ["NOT_TAME", "HYPOTHESIS_UNMET"]
    return out, status


def cmd_verify(doc, args):
    """Re-derive what can be re-derived with the brute-force routines."""
    sups = doc["supports"]
    d = doc["dim"]
    checks = []

    def record(name, ok, detail=""):
        checks.append({"check": name, "ok": bool(ok), "detail": detail})

    U = sups[0].union(*sups[1:])
    a, b = hull(U).volume, oracle.volume_bruteforce(list(U))
    record("volume of conv(union)", a == b, f"{a} vs {b}")
    for i, A in enumerate(sups):
        a, b = hull(A).volume, oracle.volume_bruteforce(list(A))
        record(f"volume of conv(A_{i})", a == b, f"{a} vs {b}")
    if d <= 3 and len(sups) >= d:
        for I in combinations(range(len(sups)), d):
            fam = [sups[i] for i in I]
            a, b = mixed_volume(fam), oracle.mixed_volume_bruteforce(fam)
            record(f"MV(A_{','.join(map(str, I))})", a == b, f"{a} vs {b}")
    colls = enumerate_coherent_collections(sups)
    keys = {tuple(f.points for f in F.faces) for F in colls}
    sampled = oracle.faces_by_sampling(sups, 3 if d <= 3 else 1)
    missing = [s for s in sampled if s not in keys]
    record("sampled face tuples are coherent collections", not missing, f"{len(sampled)} sampled, {len(keys)} enumerated")
    bad = 0
    for F in colls:
        for r in range(1, d + 1):
            for J in combinations(range(len(sups)), r):
                fam = [F.faces[j] for j in J]
                if is_essential(fam) != oracle.essential_bruteforce(fam):
                    bad += 1
    record("essential families agree", bad == 0, f"{bad} disagreements")
    failed = [c for c in checks if not c["ok"]]
    if failed:
        raise InvariantViolation("; ".join(f"{c['check']}: {c['detail']}" for c in failed))
    return {"checks": checks}, []


COMMANDS = {"cones": cmd_cones, "mult": cmd_mult, "degree": cmd_degree,
            "order": cmd_order, "verify": cmd_verify}


# --- output ---------------------------------------------------------------------


def _text(report) -> str:
    lines = [f"command: {report['command']}", f"input: sha256 {report['input_digest']}"]
    if report.get("translated_by") and any(report["translated_by"]):
        lines.append(f"supports translated by {report['translated_by']}")
    lines.append(f"status: {', '.join(report['status']) or 'OK'}")
    res = report["result"]
    cmd = report["command"]
    if cmd == "cones":
        lines.append(f"image dimension {res['image_dimension']}, {res['cone_count']} cones C_J^F, "
                     f"{len(res['maximal_cones'])} maximal")
        lines.append("rays: " + " ".join(str(tuple(r)) for r in res["rays"]))
        for i, m in enumerate(res["maximal_cones"], 1):
            lin = f" + span{[tuple(v) for v in m['lineality']]}" if m["lineality"] else ""
            lines.append(f"  {i:>3}  dim {m['dim']}  rays {[tuple(r) for r in m['rays']]}{lin}"
                         f"  rep {tuple(m['representative'])}")
    elif cmd == "mult":
        lines.append(f"deg_F = {res['deg_F']}, deg_rho = {res['deg_rho']}")
        for e in res["points"]:
            head = f"w = ({', '.join(e['w'])})  m_w = {e['m_w']}"
            if "rays" in e:
                head += f"  cone {[tuple(r) for r in e['rays']]}"
            lines.append(head)
            for p in e["preimages"]:
                lines.append(f"    v = ({', '.join(p['v'])})  m_v = {p['m_v']}  index = {p['index']}")
        if "weighted_ray_sum" in res:
            lines.append(f"weighted ray sum: {tuple(res['weighted_ray_sum'])}")
    elif cmd == "degree":
        lines.append(f"chain: {res['chain']}")
        lines.append(f"deg(S) = {res['deg_S']}")
        lines.append("  I        d_I")
        for e in res["d_I"]:
            lines.append(f"  {','.join(map(str, e['I'])):<8} {e['value']}")
        for k, v in res["flags"].items():
            lines.append(f"  {k}: {v}")
        if "vol_equals_d_I" in res:
            lines.append("  I        vol=d_I  lift=d_I hypothesis")
            for a, b in zip(res["vol_equals_d_I"], res["lift_equals_d_I"]):
                lines.append(f"  {','.join(map(str, a['I'])):<8} {str(a['value']):<8} {b['hypothesis']}")
    elif cmd == "order":
        lines.append(f"tame: {res['tame']}")
        if not res["tame"]:
            lines.append(f"  witness alpha {tuple(res['witness_alpha'])}, J = {res['witness_J']}")
            lines.append("  hypothesis unmet; value below is the formula, not a proven order")
        lines.append(f"ord * deg(f) = {res['mv_double_lift']} - {res['mv_single_lift']} = {res['ord_times_deg']}")
        lines.append(f"lower bound = {res['mv_double_lift']} - {res['min_union_mv']} = {res['lower_bound']}")
        lines.append(f"ord = {res['ord']}")
        if res["single_support_j0"] is not None:
            lines.append(f"single-support condition holds at j0 = {res['single_support_j0']}")
    elif cmd == "verify":
        for c in res["checks"]:
            lines.append(f"  [{'ok' if c['ok'] else 'FAIL'}] {c['check']}  {c['detail']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sparsetrop", description="Tropical invariants of sparse rational maps.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", required=True, help="JSON input document")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--strict", action="store_true", help="exit 4 when a hypothesis is unmet")
    common.add_argument("--threads", type=int, default=1, help="worker processes for independent subproblems")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("cones", parents=[common], help="cones of the tropicalized image")
    p = sub.add_parser("mult", parents=[common], help="multiplicities at regular points")
    p.add_argument("--point", help="comma-separated rationals; default: one point per maximal cone")
    p = sub.add_parser("degree", parents=[common], help="degree chain")
    p.add_argument("--subset", action="append", help="index set I, e.g. 0,3 (repeatable)")
    sub.add_parser("order", parents=[common], help="order at the origin (d = n - 1)")
    sub.add_parser("verify", parents=[common], help="cross-check against brute-force routines")
    return ap


def _glue_point(argv):
    # "--point -1,-1" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--point":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--point={nxt}")
        else:
            out.append(a)
    return out


def run(argv=None) -> tuple[int, str]:
    argv = _glue_point(sys.argv[1:] if argv is None else list(argv))
    args = build_parser().parse_args(argv)
    try:
        if args.threads < 1:
            raise InputError("--threads must be positive")
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {args.input}: {e.strerror}") from None
        doc = parse_document(text)
        result, status = COMMANDS[args.command](doc, args)
    except InputError as e:
        return EXIT_INPUT, f"input error: {e}\n"
    except (ValueError, TypeError) as e:
        return EXIT_INPUT, f"input error: {e}\n"
    except (InvariantViolation, IntegralityViolation) as e:
        return EXIT_INVARIANT, f"invariant violated: {e}\n"
    report = {"command": args.command, "input_digest": doc["digest"],
              "translated_by": list(doc["shift"]), "status": status, "result": result}
    body = json.dumps(report, indent=2, sort_keys=True) + "\n" if args.format == "json" else _text(report)
    code = EXIT_HYPOTHESIS if args.strict and status else EXIT_OK
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body)
        return code, ""
    return code, body


def main(argv=None) -> int:
    code, body = run(argv)
    (sys.stdout if code in (EXIT_OK, EXIT_HYPOTHESIS) else sys.stderr).write(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
