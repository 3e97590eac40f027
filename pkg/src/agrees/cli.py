"""Command-line interface: parsing, dispatch, and machine-readable reports.

One invocation runs one verb.  Reports are byte-deterministic for a fixed
(command, seed, field): wall-clock timing is only emitted under --timing.
Exit codes: 0 success, 1 check-failure, 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from time import perf_counter

from .core import (
    Poly,
    RingCtx,
    field_by_name,
    format_ideal,
    order_by_name,
)
from .groebner import (
    IdealHandle,
    groebner_basis,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    is_m_primary,
    is_member,
    min_gens,
    normal_form,
    vdim,
)
from .monomial import MonoIdeal2
from .rees import (
    SearchFailure,
    find_joint_reduction,
    find_parameter_reduction,
    reduction_number,
    rees_ideal,
)
from .agcheck import (
    ag_check,
    hypersurface_example,
    socle_FGH,
    socle_ag_criterion,
)
from .suite import run_suite


# ---------------------------------------------------------------------------
# input grammar: sums of terms, `^` powers, `*` products, ideal(p1, ..., pk)


class ParseError(ValueError):
    """Syntax or name error; the message carries the offset."""


def _tokens(text: str):
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("int", text[i:j], i)
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            yield ("name", text[i:j], i)
            i = j
            continue
        if ch in "^*+-(),/":
            yield (ch, ch, i)
            i += 1
            continue
        raise ParseError(f"syntax error at position {i}: unexpected {ch!r}")
    yield ("end", "", n)


class _Parser:
    def __init__(self, text: str, ring: RingCtx):
        self.toks = list(_tokens(text))
        self.k = 0
        self.ring = ring

    def _peek(self):
        return self.toks[self.k]

    def _take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            shown = repr(tok[1]) if tok[1] else "end of input"
            raise ParseError(
                f"syntax error at position {tok[2]}: expected {kind}, got {shown}"
            )
        self.k += 1
        return tok

    def poly(self) -> Poly:
        neg = False
        if self._peek()[0] in ("+", "-"):
            neg = self._take()[0] == "-"
        p = self._term()
        if neg:
            p = -p
        while self._peek()[0] in ("+", "-"):
            op = self._take()[0]
            q = self._term()
            p = p - q if op == "-" else p + q
        return p

    def _term(self) -> Poly:
        p = self._factor()
        while self._peek()[0] == "*":
            self._take()
            p = p * self._factor()
        return p

    def _factor(self) -> Poly:
        tok = self._peek()
        if tok[0] == "int":
            self._take()
            num = int(tok[1])
            if self._peek()[0] == "/":
                self._take()
                den = int(self._take("int")[1])
                if den == 0:
                    raise ParseError(
                        f"syntax error at position {tok[2]}: zero denominator"
                    )
                f = self.ring.field
                return self.ring.const(f.div(f.of_int(num), f.of_int(den)))
            return self.ring.const(self.ring.field.of_int(num))
        if tok[0] == "name":
            self._take()
            if tok[1] not in self.ring.names:
                raise ParseError(f"unknown variable {tok[1]!r} at position {tok[2]}")
            v = self.ring.var(self.ring.names.index(tok[1]))
            if self._peek()[0] == "^":
                self._take()
                return v ** int(self._take("int")[1])
            return v
        shown = repr(tok[1]) if tok[1] else "end of input"
        raise ParseError(
            f"syntax error at position {tok[2]}: expected a term, got {shown}"
        )

    def ideal(self) -> list:
        head = self._take("name")
        if head[1] != "ideal":
            raise ParseError(
                f"syntax error at position {head[2]}: expected 'ideal(...)'"
            )
        self._take("(")
        if self._peek()[0] == ")":
            raise ParseError(
                f"syntax error at position {self._peek()[2]}: "
                "ideal needs at least one generator"
            )
        gens = [self.poly()]
        while self._peek()[0] == ",":
            self._take()
            gens.append(self.poly())
        self._take(")")
        self._take("end")
        return gens


def parse_poly(text: str, ring: RingCtx) -> Poly:
    p = _Parser(text, ring)
    out = p.poly()
    p._take("end")
    return out


def parse_ideal(text: str, ring: RingCtx) -> IdealHandle:
    return IdealHandle(ring, _Parser(text, ring).ideal())


# ---------------------------------------------------------------------------
# dispatch helpers


def _make_ring(args) -> RingCtx:
    names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    if not names:
        raise ValueError("at least one variable required")
    field = field_by_name(args.field)
    order = order_by_name(args.order, len(names))
    return RingCtx(names, field, order)


def _ideal_arg(args, attr, ring) -> IdealHandle:
    text = getattr(args, attr, None)
    if text is None:
        raise ValueError(f"--{attr} is required")
    return parse_ideal(text, ring)


def _mono_arg(handle: IdealHandle) -> MonoIdeal2:
    return MonoIdeal2.from_polys(list(handle.gens))


def _ideal_str(handle: IdealHandle) -> str:
    return format_ideal([g for g in handle.gens if not g.is_zero])


def _basis_str(handle: IdealHandle) -> list:
    return [str(g) for g in handle.gb()[0]]


# each handler returns (result_dict, witness_or_None, warnings, plain_lines)


def _cmd_gb(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    basis = [str(g) for g in groebner_basis(I)]
    return {"basis": basis}, None, [], basis


def _cmd_nf(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    p = parse_poly(args.poly, ring)
    if args.tracked:
        rep = normal_form(p, I, tracked=True)
        lines = [f"remainder: {rep.remainder}"]
        cof = [str(c) for c in rep.cofactors]
        for i, c in enumerate(cof):
            lines.append(f"cofactor[{i}]: {c}")
        lines.append(f"identity: {'true' if rep.holds() else 'false'}")
        result = {
            "remainder": str(rep.remainder),
            "cofactors": cof,
            "identity": rep.holds(),
        }
        return result, None, [], lines
    r = normal_form(p, I)
    return {"remainder": str(r)}, None, [], [f"remainder: {r}"]


def _cmd_member(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    p = parse_poly(args.poly, ring)
    val = is_member(p, I)
    return {"value": val}, None, [], ["true" if val else "false"]


def _binary(args, ring, op):
    I = _ideal_arg(args, "I", ring)
    J = _ideal_arg(args, "J", ring)
    return op(I, J)


def _cmd_colon(args, ring):
    out = _binary(args, ring, ideal_colon)
    return {"ideal": _ideal_str(out)}, None, [], [_ideal_str(out)]


def _cmd_product(args, ring):
    out = _binary(args, ring, ideal_product)
    return {"ideal": _ideal_str(out)}, None, [], [_ideal_str(out)]


def _cmd_intersect(args, ring):
    out = _binary(args, ring, ideal_intersect)
    return {"ideal": _ideal_str(out)}, None, [], [_ideal_str(out)]


def _cmd_equal(args, ring):
    val = _binary(args, ring, ideal_equal)
    return {"value": val}, None, [], ["true" if val else "false"]


def _cmd_power(args, ring):
    I = _ideal_arg(args, "I", ring)
    out = ideal_power(I, args.k)
    return {"ideal": _ideal_str(out)}, None, [], [_ideal_str(out)]


def _cmd_mingens(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    modulus = parse_poly(args.mod, ring) if args.mod else None
    val = min_gens(I, modulus=modulus)
    return {"value": val}, None, [], [str(val)]


def _cmd_mprimary(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    val = is_m_primary(I)
    return {"value": val}, None, [], ["true" if val else "false"]


def _cmd_vdim(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    val = vdim(I)
    return {"value": val}, None, [], [str(val)]


def _staircase_figure(args, M, closure):
    if not getattr(args, "figure", None):
        return None
    from .plots import save_staircase

    return save_staircase(M, args.figure, closure=closure, title=args.ideal)


def _cmd_closure(args, ring):
    M = _mono_arg(_ideal_arg(args, "ideal", ring))
    C = M.closure()
    out = format_ideal([ring.monomial(e) for e in C.gens])
    lines = [out]
    fig = _staircase_figure(args, M, C)
    if fig:
        lines.append(f"figure: {fig}")
    result = {"ideal": out}
    if fig:
        result["figure"] = fig
    return result, None, [], lines


def _cmd_isclosed(args, ring):
    M = _mono_arg(_ideal_arg(args, "ideal", ring))
    val = M.is_integrally_closed()
    lines = ["true" if val else "false"]
    fig = _staircase_figure(args, M, M.closure())
    if fig:
        lines.append(f"figure: {fig}")
    result = {"value": val}
    if fig:
        result["figure"] = fig
    return result, None, [], lines


def _cmd_redno(args, ring):
    Q = _ideal_arg(args, "Q", ring)
    I = _ideal_arg(args, "I", ring)
    modulus = parse_poly(args.mod, ring) if args.mod else None
    warnings = []
    if not is_m_primary(I):
        warnings.append("input not m-primary")
    r = reduction_number(Q, I, cap=args.cap, modulus=modulus)
    return {"r": r}, None, warnings, [str(r)]


def _cmd_findred(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    pair = find_parameter_reduction(I, seed=args.seed, trials=args.trials)
    witness = {"a": str(pair.a), "b": str(pair.b)}
    result = {"a": str(pair.a), "b": str(pair.b), "r": pair.r, "trial": pair.trial}
    lines = [
        f"a: {pair.a}",
        f"b: {pair.b}",
        f"r: {pair.r}",
        f"trial: {pair.trial}",
    ]
    return result, witness, [], lines


def _cmd_reesideal(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    pres = rees_ideal(I)
    basis = _basis_str(pres.K)
    lines = [f"{t}: {im}" for t, im in pres.gen_map] + basis
    result = {
        "tvars": [str(t) for t in pres.tvars],
        "images": [str(im) for im in pres.images],
        "basis": basis,
    }
    return result, None, [], lines


def _cmd_jointred(args, ring):
    I = _ideal_arg(args, "I", ring)
    J = _ideal_arg(args, "J", ring)
    jr = find_joint_reduction(I, J, seed=args.seed, trials=args.trials)
    witness = {"a": str(jr.a), "b": str(jr.b)}
    result = {"a": str(jr.a), "b": str(jr.b), "trial": jr.trial}
    lines = [f"a: {jr.a}", f"b: {jr.b}", f"trial: {jr.trial}"]
    return result, witness, [], lines


def _verdict_payload(v):
    result = {"verdict": v.kind}
    if v.Q is not None:
        result["Q"] = _ideal_str(v.Q)
    if v.J is not None:
        result["J"] = _ideal_str(v.J)
    if v.trials_used is not None:
        result["trials"] = v.trials_used
    witness = None
    if v.witness is not None:
        witness = {
            "f": str(v.witness.f),
            "g": str(v.witness.g),
            "h": str(v.witness.h),
        }
    lines = [f"verdict: {v.kind}"]
    for key in ("Q", "J"):
        if key in result:
            lines.append(f"{key}: {result[key]}")
    if witness:
        lines += [f"f: {witness['f']}", f"g: {witness['g']}", f"h: {witness['h']}"]
    if v.trials_used is not None:
        lines.append(f"trials: {v.trials_used}")
    return result, witness, lines


def _cmd_agcheck(args, ring):
    I = _ideal_arg(args, "ideal", ring)
    v = ag_check(I, seed=args.seed, trials=args.trials)
    result, witness, lines = _verdict_payload(v)
    warnings = list(v.warnings)
    lines += [f"warning: {w}" for w in warnings]
    return result, witness, warnings, lines


def _cmd_socle(args, ring):
    Q = _ideal_arg(args, "Q", ring)
    v = socle_ag_criterion(Q, seed=args.seed, trials=args.trials)
    result, witness, lines = _verdict_payload(v)
    if v.socle is not None:
        s = v.socle
        result["c"] = str(s.c)
        result["coeffs"] = [str(c) for c in s.coeffs]
        result["residues"] = [str(r) for r in s.residues]
        result["criterion_fires"] = s.criterion_fires
        lines.append(f"c: {s.c}")
        for name, val in zip(("f1", "f2", "g1", "g2"), s.coeffs):
            lines.append(f"{name}: {val}")
        lines.append(
            "criterion: fires" if s.criterion_fires else "criterion: does not fire"
        )
    return result, witness, list(v.warnings), lines


def _cmd_fgh(args, ring):
    Q = _ideal_arg(args, "Q", ring)
    rep = socle_FGH(Q)
    result = {
        "F": str(rep.F),
        "G": str(rep.G),
        "H": str(rep.H),
        "c2_coeffs": [str(c) for c in rep.c2_coeffs],
        "verified": rep.verified,
    }
    lines = [
        f"F: {rep.F}",
        f"G: {rep.G}",
        f"H: {rep.H}",
        f"verified: {'true' if rep.verified else 'false'}",
    ]
    return result, None, [], lines


def _cmd_hypersurface(args, ring):
    modulus = parse_poly(args.mod, ring) if args.mod else None
    rep = hypersurface_example(args.l, f3=modulus)
    result = {
        "l": rep.l,
        "f3": str(rep.f3),
        "a": str(rep.a),
        "b": str(rep.b),
        "mu": rep.mu,
        "checks": list(rep.checks),
    }
    lines = [
        f"l: {rep.l}",
        f"f3: {rep.f3}",
        f"a: {rep.a}",
        f"b: {rep.b}",
        f"mu: {rep.mu}",
    ] + [f"check: {c}" for c in rep.checks]
    return result, None, [], lines


def _suite_artifacts(args, report):
    outdir = getattr(args, "outdir", None)
    if not outdir:
        return []
    os.makedirs(outdir, exist_ok=True)
    paths = []
    csv_path = os.path.join(outdir, "suite.csv")
    with open(csv_path, "w", newline="") as fh:
        w = csv.writer(fh)
        header = ["name", "passed", "detail"]
        if args.timing:
            header.append("seconds")
        w.writerow(header)
        for e in report.entries:
            row = [e.name, "pass" if e.passed else "fail", e.detail]
            if args.timing:
                row.append(f"{e.elapsed:.3f}")
            w.writerow(row)
    paths.append(csv_path)
    from .plots import save_newton_gallery, save_suite_summary
    from .suite import _random_closed

    paths.append(save_suite_summary(report, os.path.join(outdir, "summary.png")))
    gallery = []
    for i in range(20):
        C = _random_closed(args.seed * 1000 + i)
        label = format_ideal(
            [RingCtx(("x", "y")).monomial(e) for e in C.gens]
        )
        gallery.append((label, C))
    paths.append(
        save_newton_gallery(gallery, os.path.join(outdir, "newton_gallery.png"))
    )
    return paths


def _cmd_paper_suite(args, ring):
    report = run_suite(
        field=ring.field, seed=args.seed, tamper=getattr(args, "tamper", None)
    )
    lines = []
    for e in report.entries:
        cols = ["pass" if e.passed else "FAIL", e.name, e.detail]
        if args.timing:
            cols.append(f"{e.elapsed:.3f}s")
        lines.append("\t".join(cols))
    lines.append(f"suite: {'passed' if report.passed else 'FAILED'}")
    artifacts = _suite_artifacts(args, report)
    lines += [f"artifact: {p}" for p in artifacts]
    entries = [
        {"name": e.name, "passed": e.passed, "detail": e.detail}
        | ({"seconds": round(e.elapsed, 3)} if args.timing else {})
        for e in report.entries
    ]
    result = {"entries": entries, "passed": report.passed}
    if artifacts:
        result["artifacts"] = artifacts
    return result, None, [], lines


_HANDLERS = {
    "gb": _cmd_gb,
    "nf": _cmd_nf,
    "member": _cmd_member,
    "colon": _cmd_colon,
    "product": _cmd_product,
    "power": _cmd_power,
    "intersect": _cmd_intersect,
    "equal": _cmd_equal,
    "mingens": _cmd_mingens,
    "mprimary": _cmd_mprimary,
    "vdim": _cmd_vdim,
    "closure": _cmd_closure,
    "isclosed": _cmd_isclosed,
    "redno": _cmd_redno,
    "findred": _cmd_findred,
    "reesideal": _cmd_reesideal,
    "jointred": _cmd_jointred,
    "agcheck": _cmd_agcheck,
    "socle": _cmd_socle,
    "fgh": _cmd_fgh,
    "hypersurface": _cmd_hypersurface,
    "paper-suite": _cmd_paper_suite,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="fp:32003", help="fp:<p> or q")
    common.add_argument("--order", default="grevlex", choices=["grevlex", "lex"])
    common.add_argument("--vars", default="x,y", help="comma-separated variable names")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=32)
    common.add_argument("--cap", type=int, default=10)
    common.add_argument("--mod", default=None, help="modulus polynomial")
    common.add_argument("--json", action="store_true")
    common.add_argument("--timing", action="store_true")

    top = argparse.ArgumentParser(
        prog="agrees",
        description="exact almost-Gorenstein checks for Rees algebras over k[x,y]",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add(verb, **flags):
        p = sub.add_parser(verb, parents=[common])
        for name, kwargs in flags.items():
            p.add_argument(f"--{name}", **kwargs)
        return p

    add("gb", ideal={"required": True})
    add("nf", poly={"required": True}, ideal={"required": True},
        tracked={"action": "store_true"})
    add("member", poly={"required": True}, ideal={"required": True})
    add("colon", I={"required": True}, J={"required": True})
    add("product", I={"required": True}, J={"required": True})
    add("power", I={"required": True}, k={"type": int, "required": True})
    add("intersect", I={"required": True}, J={"required": True})
    add("equal", I={"required": True}, J={"required": True})
    add("mingens", ideal={"required": True})
    add("mprimary", ideal={"required": True})
    add("vdim", ideal={"required": True})
    add("closure", ideal={"required": True}, figure={"default": None})
    add("isclosed", ideal={"required": True}, figure={"default": None})
    add("redno", Q={"required": True}, I={"required": True})
    add("findred", ideal={"required": True})
    add("reesideal", ideal={"required": True})
    add("jointred", I={"required": True}, J={"required": True})
    add("agcheck", ideal={"required": True})
    add("socle", Q={"required": True})
    add("fgh", Q={"required": True})
    add("hypersurface", l={"type": int, "required": True})
    add("paper-suite", tamper={"default": None}, outdir={"default": None})
    return top


def _params_echo(args) -> dict:
    skip = {"verb", "json", "timing", "figure", "outdir"}
    out = {}
    for key, val in sorted(vars(args).items()):
        if key in skip or val is None:
            continue
        out[key] = val
    return out


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.verb == "hypersurface" and args.vars == "x,y":
        args.vars = "x,y,z"  # the quadric family lives in three variables
    t0 = perf_counter()
    try:
        ring = _make_ring(args)
        result, witness, warnings, lines = _HANDLERS[args.verb](args, ring)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchFailure as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    millis = int((perf_counter() - t0) * 1000) if args.timing else None
    if args.json:
        report = {
            "command": args.verb,
            "params": _params_echo(args),
            "result": result,
        }
        if witness is not None:
            report["witness"] = witness
        report["warnings"] = warnings
        report["millis"] = millis
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
        if millis is not None:
            print(f"millis: {millis}")
    if args.verb == "paper-suite" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
