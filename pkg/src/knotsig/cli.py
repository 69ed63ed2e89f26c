"""Command line interface.

Knots enter as JSON descriptors, either from a file or from stdin via "-":

    {"name": "trefoil", "genus": 1, "seifert": [[-1, 1], [0, -1]]}

Exit codes: 0 success (or PASS for checks), 1 FAIL, 2 malformed input,
3 invalid Seifert matrix, 4 bad command line argument, 5 violated semantic
precondition.  All output is deterministic: the same invocation on the
same input produces byte-identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .family import NonPositive, params_from_primes, twist_seifert
from .genus1 import (
    AlexanderTrivial,
    MetabolizerClass,
    MissingAssignment,
    NotAlgebraicallySlice,
    WrongGenus,
    obstruction_report,
)
from .independence import (
    UnitAlgebraic,
    exhaustive_independence,
    galois_degree_check,
    root_of_unity_check,
)
from .seifert import (
    NonUnimodularSkewPart,
    OddDimension,
    SeifertMatrix,
    alexander,
    arf,
    determinant,
    ordinary_signature,
)
from .signatures import (
    RhoValue,
    SignatureProfile,
    jump_angle_enclosures,
    rho,
    signature_profile,
)


class _CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _CliError(2, f"cannot read {path}: {exc}") from exc


def _parse_json(text: str, what: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError(2, f"malformed JSON in {what}: {exc}") from exc


def _descriptor_to_matrix(obj: object, what: str) -> tuple[str | None, SeifertMatrix]:
    if not isinstance(obj, dict):
        raise _CliError(2, f"{what}: descriptor must be a JSON object")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise _CliError(2, f"{what}: name must be a string")
    genus = obj.get("genus")
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 0:
        raise _CliError(2, f"{what}: genus must be a nonnegative integer")
    rows = obj.get("seifert")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise _CliError(2, f"{what}: seifert must be a list of rows")
    for row in rows:
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise _CliError(2, f"{what}: matrix entries must be integers")
    if len(rows) != 2 * genus:
        raise _CliError(3, f"{what}: genus {genus} needs a {2 * genus}x{2 * genus} matrix")
    try:
        matrix = SeifertMatrix(rows)
    except (OddDimension, NonUnimodularSkewPart, ValueError) as exc:
        raise _CliError(3, f"{what}: {exc}") from exc
    return name, matrix


def _load_knot(path: str) -> tuple[str | None, SeifertMatrix]:
    return _descriptor_to_matrix(_parse_json(_read_text(path), path), path)


def _parse_tol(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(4, f"invalid tolerance {text!r}") from exc
    if tol <= 0:
        raise _CliError(4, "tolerance must be positive")
    return tol


def _rho_json(value: RhoValue) -> dict:
    return {
        "symbolic": value.symbolic(),
        "exact_zero": value.is_exactly_zero(),
        "enclosure": [str(value.lo), str(value.hi)],
        "enclosure_float": [float(value.lo), float(value.hi)],
    }


def cmd_invariants(args: argparse.Namespace) -> int:
    name, matrix = _load_knot(args.input)
    delta = alexander(matrix)
    payload = {
        "name": name,
        "genus": matrix.genus,
        "alexander": str(delta),
        "alexander_coefficients": {str(e): c for e, c in delta.coeffs().items()},
        "determinant": determinant(matrix),
        "arf": arf(matrix),
        "signature": ordinary_signature(matrix),
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for key in ("name", "genus", "alexander", "determinant", "arf", "signature"):
            print(f"{key}: {payload[key]}")
    return 0


def _profile_rows(profile: SignatureProfile) -> tuple[list[str], list[float]]:
    mids = [
        float((lo + hi) / 2) for lo, hi in jump_angle_enclosures(profile, bits=64)
    ]
    bounds = [0.0] + mids + [1.0]
    rows = ["theta_over_pi,sigma"]
    for i, v in enumerate(profile.arc_values):
        rows.append(f"{_fmt(bounds[i])},{v}")
        rows.append(f"{_fmt(bounds[i + 1])},{v}")
    rows.append("# jumps: exact cos(theta), theta/pi to 12 digits, step")
    steps = profile.jump_sizes()
    for k, absc in enumerate(profile.theta_ordered_jumps()):
        rows.append(f"# jump {k}: cos(theta)={absc}, theta/pi={_fmt(mids[k])}, step={steps[k]:+d}")
    rows.append(f"# sigma at theta=pi: {profile.endpoint_value}")
    return rows, mids


def _render_figure(
    profile: SignatureProfile, mids: list[float], path: Path, title: str
) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    bounds = [0.0] + mids + [1.0]
    fig, ax = plt.subplots(figsize=(7.0, 3.2))
    for i, v in enumerate(profile.arc_values):
        ax.hlines(v, bounds[i], bounds[i + 1], color="#1f6fb4", lw=2.2)
    for m in mids:
        ax.axvline(m, color="#888888", ls=":", lw=0.9)
    ax.plot([1.0], [profile.endpoint_value], "o", ms=4.5, color="#1f6fb4")
    lo = min(min(profile.arc_values), 0) - 1
    hi = max(max(profile.arc_values), 0) + 1
    ax.set_ylim(lo, hi)
    ax.set_xlim(0.0, 1.02)
    ax.set_xlabel("theta / pi")
    ax.set_ylabel("signature")
    ax.set_title(title)
    ax.grid(alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_profile(args: argparse.Namespace) -> int:
    name, matrix = _load_knot(args.input)
    profile = signature_profile(matrix)
    rows, mids = _profile_rows(profile)
    text = "\n".join(rows) + "\n"
    plot_path: Path | None = None
    if args.plot is not None:
        plot_path = Path(args.plot)
    if args.csv is None:
        sys.stdout.write(text)
    else:
        out = Path(args.csv)
        out.write_text(text)
        if plot_path is None and not args.no_plot:
            plot_path = out.with_suffix(".png")
        print(f"wrote {out}")
    if plot_path is not None and not args.no_plot:
        _render_figure(profile, mids, plot_path, name or "signature profile")
        print(f"wrote {plot_path}")
    return 0


def cmd_rho(args: argparse.Namespace) -> int:
    name, matrix = _load_knot(args.input)
    tol = _parse_tol(args.tol)
    value = rho(matrix, tol)
    if args.json:
        payload = {"name": name}
        payload.update(_rho_json(value))
        print(json.dumps(payload, indent=2))
        return 0
    if name:
        print(f"name: {name}")
    print(f"rho: {value.symbolic()}")
    if value.is_exactly_zero():
        print("enclosure: [0,0]")
    else:
        print(f"enclosure: [{_fmt(float(value.lo))},{_fmt(float(value.hi))}]")
    return 0


def _twist_descriptor(m: int) -> dict:
    return {
        "name": f"twist-{m}",
        "genus": 1,
        "seifert": twist_seifert(m).rows(),
    }


def cmd_family(args: argparse.Namespace) -> int:
    if args.m is not None:
        if args.m < 1:
            raise _CliError(4, "--m must be a positive integer")
        print(json.dumps(_twist_descriptor(args.m)))
        return 0
    if args.primes is None:
        raise _CliError(4, "need --m M or --primes N")
    if args.primes < 1:
        raise _CliError(4, "--primes must be a positive integer")
    params = params_from_primes(args.primes)
    if args.json:
        payload = [
            {
                "index": p.index,
                "prime": p.prime,
                "m": p.m,
                "theta_cos": str(p.theta_cos),
                "knot": _twist_descriptor(p.m),
            }
            for p in params
        ]
        print(json.dumps(payload, indent=2))
        return 0
    print("# index prime m theta_cos")
    for p in params:
        print(f"{p.index} {p.prime} {p.m} {p.theta_cos}")
    for p in params:
        print(json.dumps(_twist_descriptor(p.m)))
    return 0


def cmd_indep(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise _CliError(4, "--n must be a positive integer")
    if args.bound < 0:
        raise _CliError(4, "--bound must be nonnegative")
    params = params_from_primes(args.n)
    primes = tuple(p.prime for p in params)
    degree_ok = galois_degree_check(params)
    units = [UnitAlgebraic(p, primes) for p in params]
    torsion_ok = [root_of_unity_check(u) for u in units]
    violations = exhaustive_independence(params, args.bound)
    ok = degree_ok and all(torsion_ok) and not violations
    if args.json:
        print(
            json.dumps(
                {
                    "primes": list(primes),
                    "field_degree_check": degree_ok,
                    "root_of_unity_check": torsion_ok,
                    "bound": args.bound,
                    "violations": [list(v) for v in violations],
                    "result": "PASS" if ok else "FAIL",
                },
                indent=2,
            )
        )
        return 0 if ok else 1
    print(f"primes: {' '.join(str(p) for p in primes)}")
    print(f"field degree check: {'PASS' if degree_ok else 'FAIL'}")
    print(
        "root-of-unity check: "
        + " ".join("PASS" if t else "FAIL" for t in torsion_ok)
    )
    print(f"exhaustive search, exponents up to {args.bound}: "
          f"{len(violations)} real power products")
    for v in violations:
        print(f"violation: {v}")
    print(f"result: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_genus1(args: argparse.Namespace) -> int:
    name, matrix = _load_knot(args.input)
    tol = _parse_tol(args.tol)
    curves_obj = _parse_json(_read_text(args.curves), args.curves)
    if not isinstance(curves_obj, dict) or not isinstance(curves_obj.get("classes"), list):
        raise _CliError(2, f"{args.curves}: expected an object with a classes list")
    assignments: dict[MetabolizerClass, SeifertMatrix] = {}
    for i, entry in enumerate(curves_obj["classes"]):
        where = f"{args.curves} classes[{i}]"
        if not isinstance(entry, dict):
            raise _CliError(2, f"{where}: must be an object")
        vec = entry.get("v")
        if (
            not isinstance(vec, list)
            or len(vec) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in vec)
        ):
            raise _CliError(2, f"{where}: v must be a pair of integers")
        try:
            cls = MetabolizerClass.canonical(vec[0], vec[1])
        except ValueError as exc:
            raise _CliError(2, f"{where}: {exc}") from exc
        _, companion = _descriptor_to_matrix(entry.get("knot"), f"{where}.knot")
        assignments[cls] = companion
    report = obstruction_report(matrix, assignments, tol)
    if args.json:
        payload = {
            "name": name,
            "alexander": str(report.delta),
            "classes": [
                {
                    "v": list(cls.as_tuple()),
                    "rho": _rho_json(value),
                    "excludes_zero": value.excludes_zero(),
                }
                for cls, value in report.entries
            ],
            "verdict": report.verdict,
        }
        print(json.dumps(payload, indent=2))
        return 0
    if name:
        print(f"name: {name}")
    print(f"alexander: {report.delta}")
    for cls, value in report.entries:
        if value.is_exactly_zero():
            desc = "exactly 0"
        else:
            desc = f"in [{_fmt(float(value.lo))},{_fmt(float(value.hi))}]"
        flag = "nonzero" if value.excludes_zero() else "not separated from 0"
        print(f"class {cls.as_tuple()}: rho {desc} ({flag})")
    print(f"verdict: {report.verdict}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotsig",
        description="Exact abelian concordance invariants from Seifert matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="Alexander polynomial, determinant, Arf, signature")
    p_inv.add_argument("input", help="knot descriptor JSON file, or - for stdin")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=cmd_invariants)

    p_prof = sub.add_parser("profile", help="signature step function as CSV, plus a rendered figure")
    p_prof.add_argument("input", help="knot descriptor JSON file, or - for stdin")
    p_prof.add_argument("--csv", help="write CSV here instead of stdout")
    p_prof.add_argument("--plot", help="write the figure to this path")
    p_prof.add_argument("--no-plot", action="store_true", help="skip the figure")
    p_prof.set_defaults(func=cmd_profile)

    p_rho = sub.add_parser("rho", help="normalized signature integral with exact enclosure")
    p_rho.add_argument("input", help="knot descriptor JSON file, or - for stdin")
    p_rho.add_argument("--tol", default="1e-9", help="enclosure width bound (default 1e-9)")
    p_rho.add_argument("--json", action="store_true")
    p_rho.set_defaults(func=cmd_rho)

    p_fam = sub.add_parser(
        "family",
        aliases=["jm"],
        help="twist family members and their prime-indexed parameters",
    )
    group = p_fam.add_mutually_exclusive_group(required=True)
    group.add_argument("--m", type=int, help="emit the descriptor of one member")
    group.add_argument("--primes", type=int, help="parameters for the first N admissible primes")
    p_fam.add_argument("--json", action="store_true")
    p_fam.set_defaults(func=cmd_family)

    p_ind = sub.add_parser("indep", help="exact independence certificate for the family")
    p_ind.add_argument("--n", type=int, required=True, help="number of family members")
    p_ind.add_argument("--bound", type=int, default=5, help="exponent height to search (default 5)")
    p_ind.add_argument("--json", action="store_true")
    p_ind.set_defaults(func=cmd_indep)

    p_g1 = sub.add_parser("genus1", help="slice obstruction report for a genus-1 matrix")
    p_g1.add_argument("input", help="knot descriptor JSON file, or - for stdin")
    p_g1.add_argument("--curves", required=True, help="JSON assignment of companion knots")
    p_g1.add_argument("--tol", default="1e-6", help="per-class enclosure width (default 1e-6)")
    p_g1.add_argument("--json", action="store_true")
    p_g1.set_defaults(func=cmd_genus1)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if exc.code is not None else 0
        # argparse reports usage problems with status 2; that slot is taken
        # by parse errors here, so usage problems become 4
        return 4 if code == 2 else int(code)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return exc.code
    except (OddDimension, NonUnimodularSkewPart) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NonPositive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (WrongGenus, NotAlgebraicallySlice, AlexanderTrivial, MissingAssignment) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
