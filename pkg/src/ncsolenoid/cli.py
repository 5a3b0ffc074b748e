"""Command line interface.

Results go to stdout as one deterministic JSON document; diagnostics go
to stderr.  Exit codes: 0 on success, 2 on domain or input errors, 3
when a query comes back Unknown.

    ncsolenoid info n5.json
    ncsolenoid symmetrizer n5.json
    ncsolenoid k0 trace --z 1 --x 0/1 a.json
    ncsolenoid iso a.json b.json --bound 32
    ncsolenoid selftest --seed 7
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import classify, ktheory, multiplier, oracle
from .codec import carrier_from_file, dump_json, sequence_from_file
from .nadic import QnRational, as_fraction, format_fraction
from .sequences import AngleSequence

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_UNKNOWN = 3


def _parse_qn(text, modulus):
    """Read a Q_N element given as an ordinary fraction string."""
    return QnRational.from_fraction(as_fraction(text), modulus)


def _emit(obj):
    print(dump_json(obj))


def cmd_info(args):
    seq = sequence_from_file(args.file)
    kind = multiplier.classify_type(seq) if seq.is_exact else None
    out = seq.to_json()
    depth = 8
    if not seq.is_exact:
        depth = min(depth, seq.carrier.length)
    out["values"] = [format_fraction(seq.value(n)) for n in range(depth)]
    out["type"] = kind.value if kind is not None else "Unknown"
    _emit(out)
    return EXIT_OK


def cmd_simple(args):
    seq = sequence_from_file(args.file)
    _emit({"simple": multiplier.is_simple(seq)})
    return EXIT_OK


def cmd_symmetrizer(args):
    seq = sequence_from_file(args.file)
    _emit(multiplier.symmetrizer(seq).to_json())
    return EXIT_OK


def cmd_k0_trace(args):
    seq = sequence_from_file(args.file)
    elem = ktheory.ExtensionElement(seq, args.z, _parse_qn(args.x, seq.modulus))
    _emit({"trace": format_fraction(ktheory.trace(elem))})
    return EXIT_OK


def cmd_k0_member(args):
    seq = sequence_from_file(args.file)
    ok = ktheory.k_member(seq, as_fraction(args.first), _parse_qn(args.second, seq.modulus))
    _emit({"member": ok})
    return EXIT_OK


def cmd_k0_add(args):
    seq = sequence_from_file(args.file)
    a = ktheory.ExtensionElement(seq, args.az, _parse_qn(args.ax, seq.modulus))
    b = ktheory.ExtensionElement(seq, args.bz, _parse_qn(args.bx, seq.modulus))
    _emit((a + b).to_json())
    return EXIT_OK


def cmd_cohomologous(args):
    J = carrier_from_file(args.file_j)
    R = carrier_from_file(args.file_r)
    psi = ktheory.cohomologous(J, R)
    if psi is None:
        _emit({"cohomologous": False})
    else:
        _emit({"cohomologous": True, "witness": psi.to_json()})
    return EXIT_OK


def cmd_iso(args):
    a = sequence_from_file(args.file_a)
    b = sequence_from_file(args.file_b)
    verdict = classify.isomorphic(a, b, bound=args.bound)
    _emit(verdict.to_json())
    return EXIT_UNKNOWN if verdict.is_unknown else EXIT_OK


def cmd_bundle(args):
    seq = sequence_from_file(args.file)
    _emit(classify.bundle_data(seq).to_json())
    return EXIT_OK


def cmd_selftest(args):
    seed = args.seed
    trials = args.trials
    reports = []

    carrier = ktheory.j_seq(AngleSequence.constant(3, Fraction(1, 2)))
    for kind in ("xi", "zeta"):
        rep = oracle.cocycle_fuzz(kind, carrier, trials=trials, seed=seed)
        reports.append(rep.to_json())
        print("selftest %s: %s" % (kind, "ok" if rep.passed else "FAIL"), file=sys.stderr)

    alpha = AngleSequence.constant(3, Fraction(1, 2))
    rep = oracle.cocycle_fuzz("psi_bichar", alpha, trials=max(1, trials // 4), seed=seed)
    reports.append(rep.to_json())
    print("selftest psi_bichar: %s" % ("ok" if rep.passed else "FAIL"), file=sys.stderr)

    from .nadic import NadicInteger

    five = AngleSequence(5, Fraction(1, 62), NadicInteger.from_value(Fraction(-1, 62), 5))
    got = oracle.brute_symmetrizer(
        five, window_num=args.window_p, window_exp=args.window_k, spot_checks=200, seed=seed
    )
    described = multiplier.symmetrizer(five)
    brute_ok = all(described.contains(g) for g in got)
    reports.append({"kind": "brute_symmetrizer", "points": len(got), "passed": brute_ok})
    print("selftest brute_symmetrizer: %s" % ("ok" if brute_ok else "FAIL"), file=sys.stderr)

    colimit_ok = oracle.colimit_compare(alpha, depth=args.depth, num_window=8, int_window=3)
    reports.append({"kind": "colimit", "passed": colimit_ok})
    print("selftest colimit: %s" % ("ok" if colimit_ok else "FAIL"), file=sys.stderr)

    J = NadicInteger.iota(5, 3)
    R = NadicInteger.iota(0, 3)
    witness = oracle.coboundary_solve(J, R, seed=seed)
    direct = ktheory.cohomologous(J, R, seed=seed)
    agree = (witness is None) == (direct is None) and (
        witness is None or witness.psi1() == direct.psi1()
    )
    reports.append({"kind": "coboundary", "passed": agree})
    print("selftest coboundary: %s" % ("ok" if agree else "FAIL"), file=sys.stderr)

    passed = all(r.get("passed", False) for r in reports)
    _emit({"passed": passed, "reports": reports})
    return EXIT_OK if passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ncsolenoid",
        description="Exact invariants of twisted solenoid algebras over Q_N.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="describe an element file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("simple", help="simplicity of the twisted algebra")
    p.add_argument("file")
    p.set_defaults(fn=cmd_simple)

    p = sub.add_parser("symmetrizer", help="symmetrizer subgroup description")
    p.add_argument("file")
    p.set_defaults(fn=cmd_symmetrizer)

    k0 = sub.add_parser("k0", help="K0 queries").add_subparsers(
        dest="k0_command", required=True
    )
    p = k0.add_parser("trace", help="trace of (z, x)")
    p.add_argument("file")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--x", required=True, help="Q_N element as a fraction, e.g. 2/9")
    p.set_defaults(fn=cmd_k0_trace)
    p = k0.add_parser("member", help="membership of (first, second) in K0")
    p.add_argument("file")
    p.add_argument("--first", required=True)
    p.add_argument("--second", required=True)
    p.set_defaults(fn=cmd_k0_member)
    p = k0.add_parser("add", help="twisted sum of (az, ax) and (bz, bx)")
    p.add_argument("file")
    p.add_argument("--az", type=int, required=True)
    p.add_argument("--ax", required=True)
    p.add_argument("--bz", type=int, required=True)
    p.add_argument("--bx", required=True)
    p.set_defaults(fn=cmd_k0_add)

    p = sub.add_parser("cohomologous", help="compare two carrier cocycles")
    p.add_argument("file_j")
    p.add_argument("file_r")
    p.set_defaults(fn=cmd_cohomologous)

    p = sub.add_parser("iso", help="isomorphism classification")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--bound", type=int, default=32)
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("bundle", help="bundle data of a periodic element")
    p.add_argument("file")
    p.set_defaults(fn=cmd_bundle)

    p = sub.add_parser("selftest", help="run the oracle suite at reduced sizes")
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--window-p", type=int, default=40, dest="window_p")
    p.add_argument("--window-k", type=int, default=2, dest="window_k")
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_DOMAIN if err.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
