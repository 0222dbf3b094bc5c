"""Command-line front end.

Every command reads a problem (a JSON file with ``"schema": 1`` and/or inline
flags), runs one operation and prints a JSON report.  The report embeds the
normalized problem under ``"input"``, so feeding a report back through
``--input`` reproduces it byte for byte.

Exit codes: 0 success, 2 invalid input (the diagnostic names the violated
invariant), 1 internal assertion failure or a failing casebook claim.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import casebook
from .errors import RigidNewtonError
from .galois import (
    GaloisAction,
    build_action,
    coxeter_action,
    inversion_action,
    relative_weyl_F,
    swap_action,
    trivial_action,
)
from .linalg import solve_rational
from .newton import TorsionCocharacter, alcove_normalize, facet_indices, gamma_centralizer
from .rootdata import RootDatum, Subsystem, base_and_highest, check_subsystem, parse_datum
from .tate_nakayama import band_image_contains, levi_suitable_characters, realize_twisted_levi, tn_group_torus

SCHEMA = 1

COORDINATE_HELP = """\
coordinates:
  --nu / --point are read in fundamental-coweight coordinates by default
  (the i-th entry is the pairing with the i-th simple root).  This needs a
  semisimple datum; for data with a central torus pass --nu-basis lattice to
  give the vector in the basis of X_*.  The X_* basis is
    sc data (e.g. A:2, C4:sc): simple coroots
    ad data (e.g. A:2:ad) and G2: fundamental coweights
    torus:r: the standard basis of Z^r
  so for adjoint data and G2 both readings agree.  --lambda is always an
  integral vector in the X_* basis.

actions: trivial | inversion | swap:i,j (0-based lattice coordinates) |
  coxeter | a JSON list of generator matrices, e.g. '[[[-1,1],[0,1]]]'
"""


class InputError(RigidNewtonError):
    invariant = "well-formed input"


def _fraction(x: Any) -> Fraction:
    try:
        return Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {x!r}") from exc


def _fmt(x: Fraction) -> str:
    return str(Fraction(x))


def _vector_arg(text: str | Sequence) -> list[Fraction]:
    items = text.split(",") if isinstance(text, str) else list(text)
    return [_fraction(x) for x in items if str(x).strip() != ""]


def _int_list(text: str | Sequence) -> list[int]:
    out = []
    for x in _vector_arg(text):
        if x.denominator != 1:
            raise InputError(f"expected an integer, got {x}")
        out.append(int(x))
    return out


def _datum_from(spec: Any) -> RootDatum:
    if isinstance(spec, str):
        return parse_datum(spec)
    if isinstance(spec, dict):
        if "roots" in spec:
            roots = tuple(tuple(int(v) for v in r) for r in spec["roots"])
            coroots = tuple(tuple(int(v) for v in r) for r in spec["coroots"])
            rank = int(spec.get("rank", len(roots[0]) if roots else 0))
            return RootDatum(rank, roots, coroots, spec.get("label", "explicit"))
        text = f"{spec['family']}:{spec['rank']}:{spec.get('isogeny', 'sc')}"
        return parse_datum(text)
    raise InputError("datum must be a shorthand string or an object")


def _action_from(datum: RootDatum, spec: Any) -> GaloisAction:
    if spec is None or spec == "trivial":
        return trivial_action(datum)
    if isinstance(spec, str):
        s = spec.strip()
        if s == "inversion":
            return inversion_action(datum)
        if s == "coxeter":
            return coxeter_action(datum)
        if s.startswith("swap:"):
            i, j = _int_list(s[5:])
            if not (0 <= i < datum.rank and 0 <= j < datum.rank):
                raise InputError(f"swap indices out of range for rank {datum.rank}")
            return swap_action(datum, i, j)
        if s.startswith("["):
            return _action_from(datum, json.loads(s))
        raise InputError(f"unknown action {spec!r}")
    if isinstance(spec, dict):
        spec = spec.get("generators", [])
    gens = [[[int(v) for v in row] for row in g] for g in spec]
    return build_action(datum, gens)


def _nu_to_lattice(datum: RootDatum, coords: list[Fraction], basis: str) -> list[Fraction]:
    if len(coords) != datum.rank:
        raise InputError(f"expected {datum.rank} coordinates, got {len(coords)}")
    if basis == "lattice":
        return coords
    if basis != "coweight":
        raise InputError(f"unknown coordinate basis {basis!r}")
    base = base_and_highest(datum)
    if len(base.simple_roots) != datum.rank:
        raise InputError("fundamental-coweight coordinates need a semisimple datum; use --nu-basis lattice")
    return solve_rational([datum.roots[s] for s in base.simple_roots], coords)


def _subsystem(datum: RootDatum, indices: Optional[Sequence[int]]) -> Subsystem:
    sub = Subsystem.of(indices or ())
    check_subsystem(datum, sub)
    return sub


def _roots_json(datum: RootDatum, sub: Subsystem) -> list[list[int]]:
    return [list(datum.roots[i]) for i in sub.root_indices]


def _report_centralizer(datum, rep) -> dict:
    return {
        "single_centralizer": list(rep.single_centralizer.root_indices),
        "gamma_centralizer": list(rep.gamma_centralizer.root_indices),
        "gamma_centralizer_roots": _roots_json(datum, rep.gamma_centralizer),
        "type_single": rep.type_single.label,
        "type_gamma": rep.type_gamma.label,
        "cyclic_witness": rep.is_cyclic_witness,
        "levi_regular": rep.is_levi_regular,
    }


def _torsion_json(nu: TorsionCocharacter) -> list[str]:
    return [_fmt(x) for x in nu.coordinates]


# --- problem normalization ---------------------------------------------------

FIELDS = ("datum", "action", "nu", "nu_basis", "lambda", "level", "subsystem", "point")


def load_problem(args: argparse.Namespace) -> dict:
    problem: dict = {}
    if getattr(args, "input", None):
        try:
            with open(args.input, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        if isinstance(data, dict) and "input" in data and "result" in data:
            data = data["input"]
        if not isinstance(data, dict) or data.get("schema") != SCHEMA:
            raise InputError(f"input must be a JSON object with \"schema\": {SCHEMA}")
        problem.update({k: data[k] for k in FIELDS if k in data})
    for key in FIELDS:
        val = getattr(args, key.replace("lambda", "lam"), None)
        if val is not None:
            problem[key] = val
    if "datum" not in problem:
        raise InputError("no root datum given (--datum or input file)")
    problem.setdefault("action", "trivial")
    problem.setdefault("nu_basis", "coweight")
    for key in ("nu", "point"):
        if key in problem:
            problem[key] = [_fmt(x) for x in _vector_arg(problem[key])]
    if "lambda" in problem:
        problem["lambda"] = _int_list(problem["lambda"])
    if "subsystem" in problem:
        problem["subsystem"] = _int_list(problem["subsystem"])
    if "level" in problem:
        problem["level"] = int(problem["level"])
    if isinstance(problem["action"], str) and problem["action"].strip().startswith("["):
        problem["action"] = json.loads(problem["action"])
    return {"schema": SCHEMA, **problem}


def _require(problem: dict, key: str):
    if key not in problem:
        raise InputError(f"missing required field {key!r}")
    return problem[key]


# --- commands ----------------------------------------------------------------

def cmd_centralizer(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    action = _action_from(datum, p["action"])
    nu = TorsionCocharacter.from_vector(_nu_to_lattice(datum, _vector_arg(_require(p, "nu")), p["nu_basis"]))
    out = _report_centralizer(datum, gamma_centralizer(datum, nu, action))
    out["nu_lattice"] = _torsion_json(nu)
    return out


def cmd_alcove(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    lift = _nu_to_lattice(datum, _vector_arg(_require(p, "nu")), p["nu_basis"])
    form = alcove_normalize(datum, base_and_highest(datum), lift)
    return {
        "point": [_fmt(x) for x in form.point],
        "affine_word": [list(s) for s in form.affine_word],
        "facet_indices": list(form.facet_indices),
    }


def cmd_facet(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    point = _nu_to_lattice(datum, _vector_arg(_require(p, "point")), p["nu_basis"])
    idx = facet_indices(datum, base_and_highest(datum), point)
    return {"facet_indices": list(idx), "facet_roots": [list(datum.roots[i]) for i in idx]}


def cmd_tn_group(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    action = _action_from(datum, p["action"])
    res = tn_group_torus(datum.rank, action, _require(p, "level"))
    return {
        "invariant_factors": list(res.group.invariant_factors),
        "order": res.group.order,
        "generators": [list(g) for g in (res.group.generators or ())],
        "kernel_basis": [list(v) for v in res.kernel_basis],
    }


def cmd_band_image(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    action = _action_from(datum, p["action"])
    nu = TorsionCocharacter.from_vector(_nu_to_lattice(datum, _vector_arg(_require(p, "nu")), p["nu_basis"]))
    ok, lam = band_image_contains(datum, action, nu, p.get("level"))
    return {"contains": ok, "witness_lambda": list(lam) if lam is not None else None,
            "nu_lattice": _torsion_json(nu)}


def cmd_realize_levi(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    action = _action_from(datum, p["action"])
    r = realize_twisted_levi(datum, action, _require(p, "lambda"))
    return {
        "level": r.level,
        "mu": list(r.mu),
        "nu_lattice": _torsion_json(r.nu),
        "levi": list(r.levi.root_indices),
        "centralizer": _report_centralizer(datum, r.report),
    }


def cmd_levi_suitable(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    action = _action_from(datum, p["action"])
    sub = _subsystem(datum, p.get("subsystem"))
    entries = levi_suitable_characters(datum, sub, action, _require(p, "level"))
    return {
        "count": len(entries),
        "levi_suitable_count": sum(e.levi_suitable for e in entries),
        "entries": [
            {"nu_lattice": _torsion_json(e.nu), "levi_suitable": e.levi_suitable,
             "type_gamma": e.report.type_gamma.label}
            for e in entries
        ],
    }


def cmd_relative_weyl(p: dict) -> dict:
    datum = _datum_from(p["datum"])
    action = _action_from(datum, p["action"])
    sub = _subsystem(datum, p.get("subsystem"))
    r = relative_weyl_F(datum, sub, action)
    return {
        "order": r.order,
        "ambient_weyl_order": r.ambient_weyl_order,
        "normalizer_order": r.stabilizer_order,
        "sub_weyl_order": r.sub_weyl_order,
        "representatives": [m.to_rows() for m in r.f_rational_elements],
    }


COMMANDS = {
    "centralizer": (cmd_centralizer, "Γ-centralizer of a torsion cocharacter ν"),
    "alcove": (cmd_alcove, "move ν into the fundamental alcove, recording the affine word"),
    "facet": (cmd_facet, "walls of the alcove containing a normalized point"),
    "tn-group": (cmd_tn_group, "finite-level Tate-Nakayama group of the torus"),
    "band-image": (cmd_band_image, "is ν = λ/n for a norm-killed λ?"),
    "realize-levi": (cmd_realize_levi, "torsion ν whose Γ-centralizer is Z(λ)"),
    "levi-suitable": (cmd_levi_suitable, "enumerate n-torsion characters central in M"),
    "relative-weyl": (cmd_relative_weyl, "F-points of the relative Weyl group of M"),
}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


def read_report(text: str) -> dict:
    return json.loads(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rigid-newton",
        description="Root data, torsion cocharacters and their Galois-twisted centralizers.",
        epilog=COORDINATE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text, description=help_text, epilog=COORDINATE_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--input", help="JSON problem file with \"schema\": 1")
        sp.add_argument("--datum", help="e.g. G2:sc, A:2:ad, C4, torus:1, A1+T1")
        sp.add_argument("--action", help="trivial | inversion | swap:i,j | coxeter | JSON generators")
        sp.add_argument("--nu", help='comma-separated rationals, e.g. "1/2,0"')
        sp.add_argument("--point", help="alcove point (same coordinates as --nu)")
        sp.add_argument("--nu-basis", dest="nu_basis", choices=("coweight", "lattice"))
        sp.add_argument("--lambda", dest="lam", help="integral cocharacter in the X_* basis")
        sp.add_argument("--level", type=int, help="torsion level n")
        sp.add_argument("--sub", dest="subsystem", help="comma-separated root indices")
    cb = sub.add_parser("casebook", help="run the worked examples")
    cb_sub = cb.add_subparsers(dest="casebook_command", required=True)
    run = cb_sub.add_parser("run", help="run one case or --all")
    run.add_argument("case_id", nargs="?")
    run.add_argument("--all", action="store_true")
    cb_sub.add_parser("list", help="list case identifiers")
    return parser


def _casebook(args) -> tuple[int, dict]:
    if args.casebook_command == "list":
        return 0, {"cases": list(casebook.CASES)}
    if args.all == bool(args.case_id):
        raise InputError("give exactly one of a case id or --all")
    reports = casebook.run_all() if args.all else [casebook.run_case(args.case_id)]
    failing = [r.case_id for r in reports if not r.passed]
    out = {
        "cases": [r.to_dict() for r in reports],
        "summary": {"total": len(reports), "passed": len(reports) - len(failing), "failed": failing},
    }
    return (1 if failing else 0), out


def _error(code: int, invariant: str, message: str) -> int:
    print(dumps({"error": {"invariant": invariant, "message": message}}))
    print(f"error [{invariant}]: {message}", file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "casebook":
            code, report = _casebook(args)
        else:
            problem = load_problem(args)
            result = COMMANDS[args.command][0](problem)
            code, report = 0, {"schema": SCHEMA, "command": args.command, "input": problem, "result": result}
    except RigidNewtonError as exc:
        return _error(2, exc.invariant, str(exc))
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        return _error(2, "well-formed input", f"{type(exc).__name__}: {exc}")
    except AssertionError as exc:
        return _error(1, "internal assertion", str(exc) or "assertion failed")
    print(dumps(report))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
