"""Command-line front end with reproducible text and JSON output.

Exit status: 0 = computed (whatever the verdict), 1 = usage error,
2 = computation error (failed precondition, desk-scale bound, factorization
too hard), 3 = internal consistency violation (the two criteria or the three
equivalence columns disagreed, which signals a bug here, not bad input).
"""

from __future__ import annotations

import argparse
import json
import sys

from .binomials import irreducible_ln
from .errors import ConsistencyError, FqbinomError
from .fields import FieldCtx, FieldElem, PrimePower, field_for, find_generator, mult_order
from .pseudofinite import (
    divisibility_verdict,
    equivalence_report,
    family_to_json_dict,
    gen_dirichlet_family,
    gen_paper_family,
    load_family,
    save_family,
)
from .towers import build_tower, closure_check

_VERDICT_TEXT = {
    "holds": "holds for U-almost all k (from k={thr})",
    "fails": "fails for U-almost all k (from k={thr})",
    "mixed": "mixed (ultrafilter-dependent)",
    "unknown-tail": "unknown-tail (finite evidence cannot decide an almost-all statement)",
}


def _emit_json(out, obj) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _field(qtext: str) -> FieldCtx:
    return field_for(PrimePower.parse(qtext))


def _modulus_text(F: FieldCtx) -> str:
    return ",".join(str(c) for c in F.modulus)


def _verdict_line(v) -> str:
    line = _VERDICT_TEXT[v.outcome].format(thr=v.threshold)
    if v.witness_indices:
        line += "; exceptions within evidence: " + ", ".join(
            f"k={k}" for k in v.witness_indices
        )
    return line


def _cmd_irr(args, out) -> int:
    F = _field(args.q)
    g = F.elem(args.g)
    report = irreducible_ln(F, g, args.n, with_oracle=args.oracle)
    if args.json:
        _emit_json(out, report.to_json_dict())
        return 0
    verdict = "irreducible" if report.ln_verdict else "reducible"
    out.write(f"x^{args.n} - {g.text} over {F!r}: {verdict}\n")
    if F.t > 1:
        out.write(f"modulus: {_modulus_text(F)}\n")
    out.write(f"order(g) = {report.order_e}\n")
    if report.failed_condition is not None:
        out.write(f"failed: {report.failed_condition}\n")
    if report.oracle_verdict is not None:
        out.write("oracle: agrees\n")
    return 0


def _cmd_order(args, out) -> int:
    F = _field(args.q)
    a = F.elem(args.a)
    e = mult_order(a)
    if args.json:
        _emit_json(out, {"q": F.q, "p": F.p, "t": F.t, "a": a.text, "order": e})
        return 0
    out.write(f"{e}\n")
    return 0


def _cmd_gen(args, out) -> int:
    F = _field(args.q)
    g = find_generator(F)
    if args.json:
        _emit_json(
            out,
            {
                "q": F.q,
                "p": F.p,
                "t": F.t,
                "modulus": _modulus_text(F),
                "generator": g.text,
            },
        )
        return 0
    out.write(f"{g.text}\n")
    if F.t > 1:
        out.write(f"modulus: {_modulus_text(F)}\n")
    return 0


def _cmd_family_gen(args, out) -> int:
    fam = gen_paper_family(args.count) if args.kind == "paper" else gen_dirichlet_family(args.count)
    save_family(fam, args.out)
    qs = [str(e.q.q) for e in fam.entries]
    if args.json:
        _emit_json(
            out,
            {"kind": fam.kind, "count": len(fam.entries), "out": args.out, "q": qs},
        )
        return 0
    out.write(f"wrote {fam.kind} family with {len(fam.entries)} entries to {args.out}\n")
    out.write("q: " + ", ".join(qs) + "\n")
    return 0


def _cmd_family_check(args, out) -> int:
    fam = load_family(args.file)
    v = divisibility_verdict(fam, args.n)
    if args.json:
        _emit_json(out, {"n": args.n, "kind": fam.kind, "verdict": v.to_json_dict()})
        return 0
    tail = fam.tail_guarantee if fam.tail_guarantee is not None else "none"
    out.write(f"family: {fam.kind}, {len(fam.entries)} entries, tail guarantee: {tail}\n")
    out.write(f"condition at n={args.n} per index:\n")
    for (k, ok) in v.per_index:
        q = fam.entry(k).q.q
        out.write(f"  k={k} q={q}: {'true' if ok else 'false'}\n")
    out.write(f"verdict: {_verdict_line(v)}\n")
    return 0


def _cmd_equiv(args, out) -> int:
    fam = load_family(args.file)
    rep = equivalence_report(fam, args.n)
    if args.json:
        _emit_json(out, rep.to_json_dict())
        return 0
    out.write(f"family: {rep.kind}, {len(rep.rows)} entries; n = {args.n}\n")
    for r in rep.rows:
        out.write(
            f"  k={r.k} q={r.q.q}: condition={str(r.condition_holds).lower()} "
            f"exists-g={str(r.exists_g).lower()} "
            f"generator-irr={str(r.generator_irreducible).lower()}\n"
        )
    out.write("per-index agreement: ok\n")
    out.write(f"verdict: {_verdict_line(rep.verdict)}\n")
    return 0


def _cmd_tower(args, out) -> int:
    F = _field(args.q)
    g = F.elem(args.g)
    degrees = [int(s) for s in args.degrees.split(",") if s]
    levels = build_tower(F, g, degrees)
    ambient = levels[-1].field
    if args.json:
        _emit_json(
            out,
            {
                "q": F.q,
                "g": g.text,
                "degrees": degrees,
                "ambient_p": ambient.p,
                "ambient_t": ambient.t,
                "ambient_modulus": _modulus_text(ambient),
                "levels": [
                    {"n": l.degree_over_base, "root": l.root.text} for l in levels
                ],
            },
        )
        return 0
    out.write(
        f"tower over {F!r} with g = {g.text}, degrees "
        + ",".join(str(n) for n in degrees)
        + "\n"
    )
    out.write(f"ambient: {ambient!r}, modulus: {_modulus_text(ambient)}\n")
    for l in levels:
        n = l.degree_over_base
        out.write(f"  n={n}: root = {l.root.text} (root^{n} = g)\n")
    return 0


def _cmd_closure(args, out) -> int:
    F = _field(args.q)
    g = F.elem(args.g)
    rep = closure_check(F, g, args.N)
    if args.json:
        _emit_json(out, rep.to_json_dict())
        return 0
    out.write(f"closure check over {F!r} with g = {g.text}, N = {args.N}\n")
    out.write(f"ambient: {rep.ambient!r}, modulus: {_modulus_text(rep.ambient)}\n")
    for r in rep.rows:
        flags = (
            f"irreducible={'yes' if r.irreducible else 'no'} "
            f"root-found={'yes' if r.root_found else 'no'} "
            f"generates-subfield={'yes' if r.generates_unique_subfield else 'no'}"
        )
        out.write(f"  n={r.n}: {flags}\n")
    out.write(f"hypothesis met: {'yes' if rep.hypothesis_met else 'no'}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fqbinom",
        description="binomial irreducibility over finite fields and prime-power families",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("irr", help="decide irreducibility of x^n - g over F_q")
    p.add_argument("--q", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--oracle", action="store_true", help="also run the Rabin oracle")
    add_json(p)
    p.set_defaults(func=_cmd_irr)

    p = sub.add_parser("order", help="multiplicative order of a in F_q*")
    p.add_argument("--q", required=True)
    p.add_argument("--a", required=True)
    add_json(p)
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("gen", help="canonical generator of F_q*")
    p.add_argument("--q", required=True)
    add_json(p)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("family-gen", help="generate a witness family")
    p.add_argument("--kind", required=True, choices=["paper", "dirichlet"])
    p.add_argument("--count", required=True, type=int)
    p.add_argument("--out", required=True)
    add_json(p)
    p.set_defaults(func=_cmd_family_gen)

    p = sub.add_parser("family-check", help="almost-all divisibility verdict")
    p.add_argument("--file", required=True)
    p.add_argument("--n", required=True, type=int)
    add_json(p)
    p.set_defaults(func=_cmd_family_check)

    p = sub.add_parser("equiv", help="per-index equivalence of the three conditions")
    p.add_argument("--file", required=True)
    p.add_argument("--n", required=True, type=int)
    add_json(p)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("tower", help="build a compatible radical tower")
    p.add_argument("--q", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--degrees", required=True)
    add_json(p)
    p.set_defaults(func=_cmd_tower)

    p = sub.add_parser("closure", help="per-divisor closure check inside F_(q^N)")
    p.add_argument("--q", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--N", required=True, type=int)
    add_json(p)
    p.set_defaults(func=_cmd_closure)

    return ap


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args, out)
    except ConsistencyError as exc:
        err.write(f"internal consistency violation: {exc}\n")
        return 3
    except (FqbinomError, ValueError, OSError, json.JSONDecodeError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
