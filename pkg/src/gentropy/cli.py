"""Batch command-line front end.

Exit codes: 0 on success with all checks passing, 1 when a requested check
fails (the witness is emitted), 2 on usage or validation errors.  All output
is line-oriented TSV with a '#'-prefixed header; randomized subcommands are
fully determined by --seed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import axioms, thermo
from .catalog import (
    BoltzmannGibbs,
    BorgesRoditi,
    Distribution,
    GenericEntropy,
    GroupEntropy,
    Kaniadakis,
    SAlphaBetaQ,
    SDelta,
    SFourth,
    SQDelta,
    SThird,
    SpecError,
    Tsallis,
)
from .groups import GroupLawError, group_law_from_exponential
from .io import (
    InputFormatError,
    format_value,
    parse_distribution,
    read_energy_file,
    tsv_line,
)
from .scd import ScdEntropy
from .series import SeriesError, normalized_from_literal, parse_rational_list

CATALOG_ROWS = [
    # kind, parameters, domain, definition sketch
    ("bg", "-", "-", "sum p ln(1/p)"),
    ("tsallis", "q", "q != 1", "(sum p^q - 1)/(1-q)"),
    ("kaniadakis", "kappa", "-1 < kappa <= 1, kappa != 0", "sum p (p^-k - p^k)/(2k)"),
    ("borges_roditi", "a,b", "a != b", "log (x^a - x^b)/(a-b)"),
    ("s_cd", "c,d", "c in (0,1], d in N", "incomplete-gamma family"),
    ("group_entropy", "sigma,coeffs", "sum k_n = 0, sum n k_n = 1", "(1/s) sum k_n x^(s n)"),
    ("s_iii", "q", "q != 1; concave for 2/3 < q < 1", "third-order discrete derivative"),
    ("s_iv", "q", "q != 1", "fourth-order discrete derivative"),
    ("s_alpha_beta_q", "alpha,beta,q", "q != 1; concave e.g. on (1/2,3/2)x(0,1/4)x(-1/4,0)", "three-parameter group entropy"),
    ("s_delta", "delta", "0 < delta <= 1 + ln W", "sum p (ln 1/p)^delta"),
    ("s_q_delta", "q,delta", "q != 1, delta > 0", "sum p (ln_q 1/p)^delta"),
    ("generic", "a", "a_0 != 0", "series-defined exponential"),
]


class UsageError(ValueError):
    pass


def _rat(value: str):
    """Prefer an exact rational when the literal is one."""
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad numeric literal {value!r}")


def build_entropy(args) -> object:
    kind = args.entropy
    kB = float(args.kb)
    scale = args.scale if args.scale is not None else 1
    try:
        if kind == "bg":
            return BoltzmannGibbs(kB=kB, scale_c=scale)
        if kind == "tsallis":
            _need(args, "q")
            return Tsallis(args.q, kB=kB, scale_c=scale)
        if kind == "kaniadakis":
            _need(args, "kappa")
            return Kaniadakis(args.kappa, kB=kB, scale_c=scale)
        if kind == "borges_roditi":
            _need(args, "a")
            _need(args, "b")
            return BorgesRoditi(args.a, args.b, kB=kB, scale_c=scale)
        if kind == "s_cd":
            _need(args, "c")
            _need(args, "d")
            return ScdEntropy(float(args.c), int(args.d), kB=kB)
        if kind == "group_entropy":
            _need(args, "sigma")
            _need(args, "coeffs")
            coeffs = _parse_coeff_map(args.coeffs)
            return GroupEntropy(args.sigma, coeffs, kB=kB, scale_c=scale)
        if kind == "s_iii":
            _need(args, "q")
            return SThird(args.q, kB=kB, scale_c=scale)
        if kind == "s_iv":
            _need(args, "q")
            return SFourth(args.q, kB=kB, scale_c=scale)
        if kind == "s_alpha_beta_q":
            _need(args, "alpha")
            _need(args, "beta_param")
            _need(args, "q")
            return SAlphaBetaQ(args.alpha, args.beta_param, args.q, kB=kB, scale_c=scale)
        if kind == "s_delta":
            _need(args, "delta")
            return SDelta(float(args.delta), kB=kB, scale_c=scale)
        if kind == "s_q_delta":
            _need(args, "q")
            _need(args, "delta")
            return SQDelta(args.q, float(args.delta), kB=kB, scale_c=scale)
        if kind == "generic":
            _need(args, "a_sequence")
            a = parse_rational_list(args.a_sequence)
            return GenericEntropy(a, order=args.order, kB=kB, scale_c=scale)
    except SpecError as exc:
        raise UsageError(str(exc))
    raise UsageError(f"unknown entropy kind {kind!r}")


def _need(args, attr):
    if getattr(args, attr, None) is None:
        flag = attr.replace("_param", "").replace("_", "-")
        raise UsageError(f"--entropy {args.entropy} requires --{flag}")


def _parse_coeff_map(text: str) -> dict:
    # "1:1,-1:-2,-2:1" maps index n to k_n
    out = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            n, v = chunk.rsplit(":", 1)
            out[int(n)] = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad coefficient entry {chunk!r}")
    return out


def _add_spec_flags(sub):
    sub.add_argument("--entropy", required=True, help="entropy kind (see `catalog`)")
    sub.add_argument("--q", type=_rat)
    sub.add_argument("--kappa", type=_rat)
    sub.add_argument("--a", type=_rat)
    sub.add_argument("--b", type=_rat)
    sub.add_argument("--c", type=_rat)
    sub.add_argument("--d", type=int)
    sub.add_argument("--delta", type=_rat)
    sub.add_argument("--alpha", type=_rat)
    sub.add_argument("--beta-param", dest="beta_param", type=_rat,
                     help="entropy parameter beta (distinct from the multiplier --beta)")
    sub.add_argument("--sigma", type=_rat)
    sub.add_argument("--coeffs", help="generalized-log coefficients as n:k_n pairs")
    sub.add_argument("--a-sequence", dest="a_sequence",
                     help="comma-separated rational a_k sequence for --entropy generic")
    sub.add_argument("--kb", type=float, default=1.0)
    sub.add_argument("--scale", type=_rat, default=None,
                     help="scale constant applied as G(c t)")
    sub.add_argument("--order", type=int, default=12)
    sub.add_argument("--digits", type=int, default=17)


def cmd_eval(args) -> int:
    spec = build_entropy(args)
    dist = parse_distribution(args.dist)
    value = spec.evaluate(dist)
    print(format_value(value, args.digits))
    return 0


def cmd_expand(args) -> int:
    spec = build_entropy(args)
    coeffs = spec.expansion_coefficients(args.count)
    print("#k\tcoefficient")
    for k, c in enumerate(coeffs, start=1):
        print(tsv_line(k, c, digits=args.digits))
    return 0


def cmd_group_law(args) -> int:
    if args.series:
        G = normalized_from_literal(args.series, args.order)
    else:
        spec = build_entropy(args)
        G = spec.exp_series(args.order)
    law = group_law_from_exponential(G, args.order)
    print("#k\tm\tc_km")
    for (k, m), coeff in law.phi.iter_terms():
        print(tsv_line(k, m, coeff))
    return 0


def cmd_check(args) -> int:
    spec = build_entropy(args)
    reports = []
    name = args.axiom
    if name == "sk2":
        reports.append(axioms.check_sk2_maximum(spec, args.states, args.trials, args.seed))
    elif name == "sk3":
        dist = parse_distribution(args.dist or f"uniform:{args.states}")
        reports.append(axioms.check_sk3_expansibility(spec, dist))
    elif name == "weak-composability":
        reports.append(axioms.check_weak_composability(spec, args.wa, args.wb))
    elif name == "strict-composability":
        reports.append(
            axioms.check_strict_composability(
                spec, args.wa, args.wb, args.trials, args.seed
            )
        )
    elif name == "concavity":
        reports.append(axioms.check_concavity_numeric(spec))
    elif name == "concavity-condition":
        reports.append(axioms.check_concavity_condition(spec.a_sequence(args.order)))
    elif name == "lesche":
        reports.append(
            axioms.lesche_probe(spec, args.states, args.perturbation, args.trials, args.seed)
        )
    elif name == "all":
        reports.append(axioms.check_sk2_maximum(spec, args.states, args.trials, args.seed))
        reports.append(
            axioms.check_sk3_expansibility(spec, Distribution.uniform(args.states))
        )
        if getattr(spec, "has_group_law", False):
            reports.append(axioms.check_weak_composability(spec, args.wa, args.wb))
            reports.append(
                axioms.check_strict_composability(
                    spec, args.wa, args.wb, args.trials, args.seed
                )
            )
    else:
        raise UsageError(f"unknown axiom {name!r}")

    print("#axiom\tverdict\tresidual\twitness")
    failed = False
    for rep in reports:
        witness = "-" if rep.witness is None else repr(rep.witness)
        print(tsv_line(rep.axiom, rep.verdict, rep.worst_residual, witness,
                       digits=args.digits))
        failed = failed or rep.verdict == axioms.FAIL
    if args.witness_file and any(r.witness is not None for r in reports):
        with open(args.witness_file, "w", encoding="utf-8") as fh:
            for rep in reports:
                fh.write(f"{rep.axiom}\t{rep.verdict}\tseed={rep.seed}\t{rep.witness!r}\n")
    return 1 if failed else 0


def cmd_maxent(args) -> int:
    spec = build_entropy(args)
    energies = read_energy_file(args.energies)
    problem = thermo.MaxEntProblem(
        spec,
        tuple(energies),
        beta=args.beta,
        target_U=args.target_u,
    )
    sol = thermo.maxent_solve(problem)
    print("#field\tvalue")
    print(tsv_line("alpha", sol.alpha, digits=args.digits))
    print(tsv_line("beta", sol.beta, digits=args.digits))
    print(tsv_line("Z", sol.Z, digits=args.digits))
    print(tsv_line("U", sol.U, digits=args.digits))
    print(tsv_line("S", sol.S, digits=args.digits))
    print(tsv_line("stationarity_residual", sol.stationarity_residual, digits=args.digits))
    try:
        print(tsv_line("legendre_residual", thermo.legendre_residual(sol, spec),
                       digits=args.digits))
    except SpecError:
        pass
    print("#i\tenergy\tp")
    for i, (e, p) in enumerate(zip(energies, sol.distribution.p)):
        print(tsv_line(i, e, p, digits=args.digits))
    return 0


def cmd_occupation(args) -> int:
    spec = build_entropy(args)
    law = thermo.occupation_law(spec, min(args.nmax, 100))
    print(tsv_line("valid", law.valid, law.reason or "-"))
    print("#N\tln_W\tW\tS\tresidual")
    if not law.valid:
        return 1
    report = thermo.extensivity_check(spec, args.nmax)
    for N, lw, s, resid, _ in report.rows:
        W = float(np.exp(lw)) if lw < 700 else float("inf")
        print(tsv_line(N, lw, W, s, resid, digits=args.digits))
    return 0


def cmd_scan(args) -> int:
    specs = {}
    for text in args.spec:
        spec_args = _spec_from_string(text, args)
        specs[text] = spec_args
    rows = thermo.asymptotic_scan(specs, W_max=args.wmax, points=args.points)
    print("#spec\tfamily\texponent")
    for row in rows:
        print(tsv_line(row.label, row.family, row.exponent, digits=args.digits))
    return 0


def _spec_from_string(text: str, args):
    """Parse 'kind:name=value,...' into an entropy instance."""
    kind, _, rest = text.partition(":")
    ns = argparse.Namespace(**vars(args))
    ns.entropy = kind
    for pair in filter(None, rest.split(",")):
        if "=" not in pair:
            raise UsageError(f"bad spec parameter {pair!r} in {text!r}")
        key, value = pair.split("=", 1)
        key = key.strip().replace("-", "_")
        if key == "beta":
            key = "beta_param"
        if key == "d":
            setattr(ns, "d", int(value))
        else:
            setattr(ns, key, _rat(value))
    return build_entropy(ns)


def cmd_catalog(args) -> int:
    print("#kind\tparameters\tdomain\tdefinition")
    for row in CATALOG_ROWS:
        print(tsv_line(*row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentropy",
        description="Generalized entropies, their group laws, and MaxEnt tools.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("eval", help="evaluate an entropy on a distribution")
    _add_spec_flags(p)
    p.add_argument("--dist", required=True, help="'uniform:W' or a file path")
    p.set_defaults(func=cmd_eval)

    p = subs.add_parser("expand", help="elementary-functional expansion coefficients")
    _add_spec_flags(p)
    p.add_argument("--count", type=int, default=8)
    p.set_defaults(func=cmd_expand)

    p = subs.add_parser("group-law", help="triangular c_km table of the group law")
    _add_spec_flags(p)
    p.add_argument("--series", help="normalized series literal '1, -1/2, ...'")
    p.set_defaults(func=cmd_group_law)
    # --entropy is optional when --series is given
    for action in p._actions:
        if action.dest == "entropy":
            action.required = False

    p = subs.add_parser("check", help="run an axiom / property checker")
    _add_spec_flags(p)
    p.add_argument("--axiom", required=True,
                   choices=["sk2", "sk3", "weak-composability",
                            "strict-composability", "concavity",
                            "concavity-condition", "lesche", "all"])
    p.add_argument("--dist")
    p.add_argument("--states", type=int, default=8)
    p.add_argument("--wa", type=int, default=2)
    p.add_argument("--wb", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--perturbation", type=float, default=1e-4)
    p.add_argument("--witness-file")
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("maxent", help="canonical maximum-entropy distribution")
    _add_spec_flags(p)
    p.add_argument("--energies", required=True, help="file with one level per line")
    p.add_argument("--beta", type=float)
    p.add_argument("--target-u", dest="target_u", type=float)
    p.set_defaults(func=cmd_maxent)

    p = subs.add_parser("occupation", help="occupation law and extensivity table")
    _add_spec_flags(p)
    p.add_argument("--nmax", type=int, default=100)
    p.set_defaults(func=cmd_occupation)

    p = subs.add_parser("scan", help="asymptotic growth scan on uniform distributions")
    p.add_argument("--spec", action="append", required=True,
                   help="entropy as 'kind:param=value,...'; repeatable")
    p.add_argument("--wmax", type=float, default=1e12)
    p.add_argument("--points", type=int, default=13)
    p.add_argument("--kb", type=float, default=1.0)
    p.add_argument("--scale", type=_rat, default=None)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--digits", type=int, default=17)
    p.set_defaults(func=cmd_scan)

    p = subs.add_parser("catalog", help="list entropy kinds and parameter domains")
    p.add_argument("--digits", type=int, default=17)
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, InputFormatError, SpecError, SeriesError, GroupLawError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
