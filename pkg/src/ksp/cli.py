"""
ksp: command-line harness over the library.

    ksp series EXPR            coefficients of a series expression
    ksp poset KIND NAME N ...  posets with mobius / homology / cm / export
    ksp koszul KIND NAME       Koszul verdict (Schur filter, CM check, three-way agreement)
    ksp verify NAME|all        named identity suite against brute-force oracles

Series expressions
    names      E L Cosh Sinh X J0 I0, integers and p/q rationals
               (Cosh, Sinh are graded: cos, sin; cosh, sinh are ungraded)
    binary     +  -  *  (also ·)  ⊙ (also %, Hadamard)  ∘ (also @, substitution)
    functions  inv cinv d point fix_rooted fix_schroeder
    precedence ∘ binds tighter than * and ⊙, which bind tighter than + and -

Reports are JSON objects ``{schema_version, command, config, results, checks}``
with sorted keys and rationals as "p/q" strings.  Failures exit nonzero and
print ``{schema_version, error: {code, message}}``.
"""

import argparse
import json
import re
import sys
from fractions import Fraction
from math import factorial

from ksp.errors import GuardExceeded, KspError, ParseError, UnknownName
from ksp.identities import IDENTITIES, run_identity
from ksp.koszul import koszul_check
from ksp.poset import build_poset, cohen_macaulay_check, mobius_row, order_complex
from ksp.series import (
    bessel_i0,
    bessel_j0,
    constant,
    cos_series,
    cosh_series,
    egf_comp_inverse,
    egf_compose,
    egf_derivative,
    egf_hadamard,
    egf_mul,
    egf_mul_inverse,
    egf_pointing,
    egf_solve_tree_fixed_point,
    exp_series,
    fraction_str,
    linear_orders,
    sin_series,
    sinh_series,
    x_series,
)
from ksp.species import ENUM_GUARD, CModule, CMonoid, COperad, builtin, to_text

SCHEMA_VERSION = 1

# Cosh and Sinh name their weight-graded series (Euler projection), so that
# inv(Cosh) is the dual series sec(x); the ungraded ones are cosh and sinh.
NAMES = {
    "E": exp_series,
    "L": linear_orders,
    "Cosh": cos_series,
    "Sinh": sin_series,
    "cosh": cosh_series,
    "sinh": sinh_series,
    "X": x_series,
    "J0": bessel_j0,
    "I0": bessel_i0,
}

FUNCTIONS = {
    "inv": egf_mul_inverse,
    "cinv": egf_comp_inverse,
    "d": egf_derivative,
    "point": egf_pointing,
    "fix_rooted": lambda f: egf_solve_tree_fixed_point(f, "rooted"),
    "fix_schroeder": lambda f: egf_solve_tree_fixed_point(f, "schroeder"),
}

BINARY = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": egf_mul,
    "·": egf_mul,
    "⊙": egf_hadamard,
    "%": egf_hadamard,
    "∘": egf_compose,
    "@": egf_compose,
}

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class Parser:
    """Recursive descent over the grammar in the module docstring."""

    def __init__(self, text, trunc):
        self.toks = tokenize(text)
        self.i = 0
        self.trunc = trunc

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.take()
        if t[1] != value:
            raise ParseError("expected %r, found %r" % (value, t[1] or "end of input"), t[2])

    def parse(self):
        v = self.sum()
        t = self.peek()
        if t[0] != "end":
            raise ParseError("unexpected %r" % t[1], t[2])
        return v

    def sum(self):
        v = self.product()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            v = BINARY[op](v, self.product())
        return v

    def product(self):
        v = self.compose()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "·", "⊙", "%"):
            op = self.take()[1]
            v = BINARY[op](v, self.compose())
        return v

    def compose(self):
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("∘", "@"):
            self.take()
            v = egf_compose(v, self.unary())
        return v

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return -self.unary()
        return self.atom()

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return constant(Fraction(val), self.trunc)
        if kind == "name":
            if val in FUNCTIONS:
                self.expect("(")
                arg = self.sum()
                self.expect(")")
                return FUNCTIONS[val](arg)
            if val in NAMES:
                return NAMES[val](self.trunc)
            raise ParseError("unknown name %r" % val, pos)
        if kind == "op" and val == "(":
            v = self.sum()
            self.expect(")")
            return v
        raise ParseError("unexpected %r" % (val or "end of input"), pos)


def parse_series(text, trunc):
    return Parser(text, trunc).parse()


# -- commands -------------------------------------------------------------

def cmd_series(args):
    f = parse_series(args.expr, args.trunc)
    rows = [
        {"n": n, "c": fraction_str(c), "a": fraction_str(c), "ordinary": fraction_str(c / factorial(n))}
        for n, c in enumerate(f.coeffs)
    ]
    return {"expression": args.expr, "series": f.to_json(), "table": rows}, []


KINDS = {"monoid": CMonoid, "module": CModule, "operad": COperad}


def _lookup(kind, name):
    x = builtin(name)
    if not isinstance(x, KINDS[kind]):
        raise UnknownName("%r is not a registered %s" % (name, kind))
    return x


def _check_guard(n, args):
    if n > ENUM_GUARD and not args.force:
        raise GuardExceeded("n = %d exceeds the enumeration guard %d (use --force)" % (n, ENUM_GUARD))


POSET_ACTIONS = ("mobius", "homology", "cm", "export")


def cmd_poset(args):
    x = _lookup(args.kind, args.name)
    _check_guard(args.n, args)
    P = build_poset(x, args.n, force=args.force)
    actions = args.actions or ["mobius"]
    bad = [a for a in actions if a not in POSET_ACTIONS]
    if bad:
        raise UsageError("unknown poset action %r (choose from %s)" % (bad[0], ", ".join(POSET_ACTIONS)))
    results = {"poset": {"name": P.name, "size": len(P), "tops": len(P.tops or [])}}
    checks = []
    for action in actions:
        if action == "mobius":
            row = mobius_row(P, P.bottom)
            per = {to_text(P.elements[t]): row[t] for t in P.tops}
            results["mobius"] = {"per_top": per, "total": sum(per.values())}
        elif action == "homology":
            C = order_complex(P) if P.tops else None
            results["homology"] = {
                "chain_dims": C.dims() if C else [],
                "homology": C.homology() if C else [],
            }
            if C:
                checks.append({"name": "d-squared-zero", "passed": C.check_d_squared()})
                checks.append({"name": "euler-characteristic", "passed": C.euler_chains() == C.euler_homology()})
        elif action == "cm":
            cert = cohen_macaulay_check(P, table=True)
            results["cm"] = cert.to_json()
            checks.append({"name": "cohen-macaulay", "passed": cert.passed})
        elif action == "export":
            C = order_complex(P) if P.tops else None
            results["export"] = {"poset": P.to_json(), "complex": C.to_json() if C else None}
    return results, checks


def cmd_koszul(args):
    x = _lookup(args.kind, args.name)
    v = koszul_check(x, args.nmax, force=args.force)
    checks = [
        {"name": "schur-prefilter", "passed": not v.schur_negatives},
        {"name": "cohen-macaulay", "passed": all(p["passed"] for p in v.profiles.values())},
        {"name": "three-way-agreement", "passed": v.dual.agree and v.dual.concentrated},
    ]
    return {"verdict": v.to_json()}, checks


def cmd_verify(args):
    names = sorted(IDENTITIES) if args.identity == "all" else [args.identity]
    out = {}
    checks = []
    for name in names:
        r = run_identity(name, trunc=args.trunc, n_max=args.nmax)
        out[name] = r.to_json()
        checks.append({"name": name, "passed": r.passed})
    return {"identities": out}, checks


COMMANDS = {"series": cmd_series, "poset": cmd_poset, "koszul": cmd_koszul, "verify": cmd_verify}


# -- plumbing -------------------------------------------------------------

class UsageError(KspError):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, default=10, help="series truncation degree (default 10)")
    common.add_argument("--nmax", type=int, default=6, help="largest label-set size (default 6)")
    common.add_argument("--out", choices=["json", "text"], default="text", help="report format")
    common.add_argument("--output", help="also write the report to this path")
    common.add_argument("--force", action="store_true", help="allow sizes beyond the enumeration guard")

    p = _Parser(prog="ksp", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    s = sub.add_parser("series", parents=[common], help="evaluate a series expression")
    s.add_argument("expr")
    s = sub.add_parser("poset", parents=[common], help="build a poset and run actions")
    s.add_argument("kind", choices=sorted(KINDS))
    s.add_argument("name")
    s.add_argument("n", type=int)
    # validated by hand: argparse rejects an empty list when choices are given
    s.add_argument("actions", nargs="*", metavar="{mobius,homology,cm,export}")
    s = sub.add_parser("koszul", parents=[common], help="Koszul verdict at desk scale")
    s.add_argument("kind", choices=sorted(KINDS))
    s.add_argument("name")
    s = sub.add_parser("verify", parents=[common], help="named identity suite")
    s.add_argument("identity", help="identity name or 'all' (%s)" % ", ".join(sorted(IDENTITIES)))
    return p


def _config(args):
    return {"trunc": args.trunc, "nmax": args.nmax, "out": args.out, "force": args.force,
            "output": args.output, "deterministic": True}


def _command_echo(args):
    echo = {"name": args.command}
    for key, label in (("expr", "expr"), ("kind", "kind"), ("name", "target"), ("n", "n"),
                       ("actions", "actions"), ("identity", "identity")):
        if hasattr(args, key):
            echo[label] = getattr(args, key)
    return echo


def _encode(o):
    if isinstance(o, Fraction):
        return fraction_str(o)
    raise TypeError("cannot encode %r" % (o,))


def _dumps(obj, **kw):
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, default=_encode, **kw)


def render_text(report):
    lines = ["ksp %s" % report["command"]["name"]]
    res = report["results"]
    if "table" in res:
        lines.append("%4s  %s" % ("n", "a_n"))
        for row in res["table"]:
            lines.append("%4d  %s" % (row["n"], row["a"]))
    else:
        lines.append(_dumps(res, indent=2))
    for c in report["checks"]:
        lines.append("%s  %s" % ("PASS" if c["passed"] else "FAIL", c["name"]))
    return "\n".join(lines)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("missing command (series, poset, koszul, verify)")
        results, checks = COMMANDS[args.command](args)
    except KspError as e:
        err = {"schema_version": SCHEMA_VERSION, "error": {"code": e.code, "message": str(e)}}
        print(_dumps(err))
        return 2 if isinstance(e, UsageError) else 1
    except (AssertionError, ValueError, ZeroDivisionError) as e:
        err = {"schema_version": SCHEMA_VERSION, "error": {"code": "internal", "message": str(e)}}
        print(_dumps(err))
        return 1
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": _command_echo(args),
        "config": _config(args),
        "results": results,
        "checks": checks,
    }
    text = _dumps(report, indent=2) if args.out == "json" else render_text(report)
    print(text)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if all(c["passed"] for c in checks) else 1


if __name__ == "__main__":
    sys.exit(main())
