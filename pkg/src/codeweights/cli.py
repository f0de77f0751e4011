"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import enumerators as en
from .codes import (LinearCode, code_from_matrix, default_budget, extend_code,
                    iter_codewords, weight_distribution)
from .errors import (BudgetExceeded, FieldError, InterpolationError,
                     RankDeficientError, VerificationError)
from .families import ewe_formula, family_code, gwe_formula
from .geometry import sweep_supports, verify_extension_word_support
from .linalg import read_matrix
from .qcombinatorics import gaussian_binomial

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3

# default cap on words checked one by one in `verify all` without --m
EXTENSION_SWEEP_LIMIT = 1 << 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    family: Optional[str] = None
    q: Optional[int] = None
    s: Optional[int] = None
    input: Optional[str] = None
    budget: int = 1 << 26
    fmt: str = "text"
    workers: int = 1

    def __post_init__(self):
        if self.budget < 1:
            raise UsageError("budget must be >= 1")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")

    @classmethod
    def from_args(cls, args):
        return cls(args.command, getattr(args, "family", None), getattr(args, "q", None),
                   getattr(args, "s", None), getattr(args, "input", None),
                   args.budget if args.budget is not None else default_budget(),
                   args.format, args.workers)

    def load_code(self) -> LinearCode:
        if self.input:
            G = read_matrix(Path(self.input).read_text())
            return code_from_matrix(G.field, G)
        if self.family and self.q and self.s:
            return family_code(self.family, self.q, self.s)
        raise UsageError("give --input FILE or --family with --q and --s")


def _emit(cfg: RunConfig, text: str, data) -> None:
    if cfg.fmt == "json":
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _weights_text(wv) -> str:
    return "\n".join(f"{w}: {c}" for w, c in wv.nonzero().items())


def _ewe(cfg: RunConfig, code: LinearCode, route: str) -> en.EWETable:
    if route == "formula":
        if code.family is None:
            raise UsageError("--route formula needs a --family code")
        return ewe_formula(code.family.kind, code.family.q, code.family.s)
    if route == "convert":
        return en.ewe_from_gwe(en.gwe_compute(code, cfg.budget))
    if route == "interpolate":
        return en.ewe_by_interpolation(code, cfg.budget, cfg.workers)
    raise UsageError(f"unknown route {route!r}")


def _gwe(cfg: RunConfig, code: LinearCode, route: str) -> en.GWETable:
    if route == "formula":
        if code.family is None:
            raise UsageError("--route formula needs a --family code")
        return gwe_formula(code.family.kind, code.family.q, code.family.s)
    if route == "enumerate":
        return en.gwe_compute(code, cfg.budget)
    if route == "convert":
        return en.gwe_from_ewe(en.ewe_by_interpolation(code, cfg.budget, cfg.workers))
    raise UsageError(f"unknown route {route!r}")


def cmd_enumerate(cfg: RunConfig, args) -> int:
    code = cfg.load_code()
    wv = weight_distribution(code, cfg.budget, cfg.workers)
    text = [_weights_text(wv)]
    data = {"n": code.n, "k": code.k, "q": code.q, "weights": wv.to_json()}
    if args.gwe:
        g = en.gwe_compute(code, cfg.budget)
        text += ["", "generalized weight enumerator:", g.format()]
        data["gwe"] = g.to_json()
    if args.ewe:
        e = _ewe(cfg, code, args.ewe)
        text += ["", f"extended weight enumerator ({args.ewe}):", e.format()]
        data["ewe"] = e.to_json()
    _emit(cfg, "\n".join(text), data)
    return EXIT_OK


def cmd_ewe(cfg: RunConfig, args) -> int:
    e = _ewe(cfg, cfg.load_code(), args.route)
    _emit(cfg, e.format(), e.to_json())
    return EXIT_OK


def cmd_gwe(cfg: RunConfig, args) -> int:
    g = _gwe(cfg, cfg.load_code(), args.route)
    _emit(cfg, g.format(), g.to_json())
    return EXIT_OK


def cmd_family(cfg: RunConfig, args) -> int:
    cfg.family = args.kind
    code = cfg.load_code()
    if args.emit == "code":
        _emit(cfg, code.G.to_text().rstrip("\n"),
              {"field": code.field.notation, "modulus": code.field.modulus_str(),
               "G": [list(r) for r in code.G.entries]})
    elif args.emit == "gwe":
        g = gwe_formula(args.kind, cfg.q, cfg.s)
        _emit(cfg, g.format(), g.to_json())
    else:
        e = ewe_formula(args.kind, cfg.q, cfg.s)
        _emit(cfg, e.format(), e.to_json())
    return EXIT_OK


class _Checks:
    def __init__(self):
        self.results = []

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.results.append({"check": name, "passed": bool(ok), "detail": detail})

    @property
    def passed(self) -> bool:
        return all(r["passed"] for r in self.results)

    def text(self) -> str:
        return "\n".join(f"{'PASS' if r['passed'] else 'FAIL'}  {r['check']}"
                         + (f"  ({r['detail']})" if r["detail"] else "") for r in self.results)


def _route_checks(cfg: RunConfig, code: LinearCode, checks: _Checks) -> None:
    g = en.gwe_compute(code, cfg.budget)
    e_conv = en.ewe_from_gwe(g)
    e_int = en.ewe_by_interpolation(code, cfg.budget, cfg.workers)
    checks.add("gwe invariants", _ok(g.check))
    checks.add("ewe invariants", _ok(e_int.check))
    if code.family is not None:
        fam = code.family
        g_form = gwe_formula(fam.kind, fam.q, fam.s)
        e_form = ewe_formula(fam.kind, fam.q, fam.s)
        checks.add("gwe formula == enumeration", g_form == g)
        checks.add("ewe formula == convert(gwe formula)", e_form == en.ewe_from_gwe(g_form))
        checks.add("ewe formula == interpolation", e_form == e_int)
    checks.add("ewe convert == interpolation", e_conv == e_int)
    checks.add("gwe_from_ewe round trip", en.gwe_from_ewe(e_int) == g)
    wv = weight_distribution(code, cfg.budget, cfg.workers)
    checks.add("(q-1) A^(1)_w == A_w", code.k == 0 or all(
        (code.q - 1) * g.rows[1][w] == wv[w] for w in range(1, code.n + 1)))
    m = code.k + 1
    if code.q ** (m * code.k) <= cfg.budget:
        direct = weight_distribution(extend_code(code, m), cfg.budget, cfg.workers)
        pred = en.ewe_eval(e_int, m)
        checks.add(f"prediction at m={m}", direct == pred and pred.total() == code.q ** (m * code.k),
                   f"sum = {pred.total()}")
    else:
        checks.add(f"prediction at m={m}", True, "skipped: over budget")


def _ok(fn) -> bool:
    try:
        fn()
    except ValueError:
        return False
    return True


def _support_checks(code: LinearCode, rs, checks: _Checks, rows: list) -> None:
    fam = code.family
    for r in rs:
        res = sweep_supports(code, r)
        detail = f"{res.handles} handles, complement sizes {dict(sorted(res.complement_sizes.items()))}"
        ok = res.passed and res.handles == gaussian_binomial(code.k, r, code.q)
        if fam is not None and fam.kind == "rm1":
            q, s = fam.q, fam.s
            full = res.cases.get("full", 0)
            affine = res.cases.get("affine", 0)
            ok = ok and full == gaussian_binomial(s - 1, r - 1, q) and affine == q ** r * gaussian_binomial(s - 1, r, q)
            detail += f"; full {full}, affine {affine}"
        checks.add(f"supports r={r}", ok, detail)
        for handle, rep in res.failures:
            rows.append({"r": r, "basis": [list(x) for x in handle.basis.entries], **rep.to_json()})


def _extension_checks(cfg: RunConfig, code: LinearCode, m: int, checks: _Checks, rows: list) -> None:
    ext = extend_code(code, m)
    if ext.q ** code.k > cfg.budget:
        raise BudgetExceeded(ext.q ** code.k, cfg.budget)
    by_weight = {}
    bad = 0
    for word in iter_codewords(ext):
        rep = verify_extension_word_support(code, m, word)
        by_weight.setdefault(rep.weight, [0, 0])
        by_weight[rep.weight][0] += 1
        by_weight[rep.weight][1] += rep.design_checked
        if not rep.passed:
            bad += 1
            rows.append({"word": list(word), **rep.to_json()})
    summary = ", ".join(f"w={w}: {c} words" + (f" ({d} design-checked)" if d else "")
                        for w, (c, d) in sorted(by_weight.items()))
    checks.add(f"extension words m={m}", bad == 0, summary)


def _parse_rs(text: str, k: int):
    if text == "all":
        return range(k + 1)
    return [int(t) for t in text.split(",")]


def cmd_verify(cfg: RunConfig, args) -> int:
    code = cfg.load_code()
    checks = _Checks()
    failures: list = []
    what = args.what
    if what in ("all", "routes"):
        _route_checks(cfg, code, checks)
    if what in ("all", "supports"):
        _support_checks(code, _parse_rs(args.r, code.k), checks, failures)
    if what in ("all", "extension"):
        ms = [args.m] if args.m else [m for m in range(1, code.k + 1)
                                      if code.q ** (m * code.k) <= min(cfg.budget, EXTENSION_SWEEP_LIMIT)]
        for m in ms:
            _extension_checks(cfg, code, m, checks, failures)
    title = f"verify {what}: {code}"
    text = title + "\n" + checks.text()
    if failures:
        text += "\nfailures:\n" + "\n".join(json.dumps(f, sort_keys=True) for f in failures)
    _emit(cfg, text, {"code": str(code), "checks": checks.results, "failures": failures,
                      "passed": checks.passed})
    return EXIT_OK if checks.passed else EXIT_VERIFY


def _add_common(p, source=True):
    if source:
        p.add_argument("--input", help="generator matrix file")
        p.add_argument("--family", choices=["simplex", "rm1"])
        p.add_argument("--q", type=int, help="field size (prime power)")
        p.add_argument("--s", type=int, help="family parameter s (dimension)")
    p.add_argument("--budget", type=int, default=None,
                   help="max words/subspaces per enumeration (default $CODEWEIGHTS_BUDGET or 2^26)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="codeweights", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="weight distribution, optionally with GWE/EWE")
    _add_common(p)
    p.add_argument("--gwe", action="store_true")
    p.add_argument("--ewe", choices=["formula", "convert", "interpolate"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("ewe", help="extended weight enumerator")
    _add_common(p)
    p.add_argument("--route", choices=["formula", "convert", "interpolate"], default="convert")
    p.set_defaults(func=cmd_ewe)

    p = sub.add_parser("gwe", help="generalized weight enumerators")
    _add_common(p)
    p.add_argument("--route", choices=["formula", "enumerate", "convert"], default="enumerate")
    p.set_defaults(func=cmd_gwe)

    p = sub.add_parser("family", help="Simplex / first-order Reed-Muller constructors")
    p.add_argument("kind", choices=["simplex", "rm1"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--emit", choices=["code", "gwe", "ewe"], default="code")
    _add_common(p, source=False)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="cross-route and support-geometry checks")
    p.add_argument("what", choices=["all", "routes", "supports", "extension"])
    _add_common(p)
    p.add_argument("--r", default="all", help="subcode dimensions: 'all' or comma list")
    p.add_argument("--m", type=int, default=None, help="extension degree for word checks")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.func(cfg, args)
    except BudgetExceeded as exc:
        print(f"codeweights: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (VerificationError, InterpolationError) as exc:
        print(f"codeweights: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, FieldError, RankDeficientError, ValueError, OSError) as exc:
        print(f"codeweights: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
