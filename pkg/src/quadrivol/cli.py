"""Batch command-line driver.

Exit codes: 0 when every executed check passes, 1 when some check fails,
2 on usage or descriptor errors.  ``--json`` switches to the stable JSON
schemas of the producing modules; ``--seed`` (or QUADRIVOL_SEED) controls
every randomized construction.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .forms import VarBlocks, poly_from_string
from .gallery import (CaseResult, ScrollInvolutionSpec, genus4_case,
                      quintic_case, rnc_case, run_case, run_gallery,
                      scroll_case, trigonal_case, veronese_case)
from .geom import (ci_ideal_piece, ideal_piece, rational_normal_curve,
                   variety_from_descriptor)
from .invol import decompose_system, from_matrix
from .joinf import verify_base_count_identity
from .qfield import RatMatrix, rat


class DescriptorError(Exception):
    """A descriptor file failed to parse or validate; exit code 2."""


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise DescriptorError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise DescriptorError(
            f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")


def _matrix_from_descriptor(data, field: str) -> RatMatrix:
    if (not isinstance(data, list) or not data
            or any(not isinstance(r, list) for r in data)):
        raise DescriptorError(f"{field}: expected a list of rows")
    width = len(data[0])
    if any(len(r) != width for r in data):
        raise DescriptorError(f"{field}: ragged rows")
    if len(data) != width:
        raise DescriptorError(f"{field}: matrix is not square")
    try:
        return RatMatrix.from_rows([[rat(e) for e in row] for row in data])
    except (TypeError, ValueError) as e:
        raise DescriptorError(f"{field}: {e}")


def load_descriptor(path: str) -> dict:
    """Load and validate a {variety, involution[, eta]} descriptor file."""
    raw = _load_json(path)
    if not isinstance(raw, dict):
        raise DescriptorError(f"{path}: top level must be an object")
    out = {}
    if "variety" not in raw:
        raise DescriptorError(f"{path}: missing field 'variety'")
    try:
        out["variety"] = variety_from_descriptor(raw["variety"])
    except (KeyError, TypeError, ValueError) as e:
        raise DescriptorError(f"{path}: variety: {e}")
    if "involution" not in raw:
        raise DescriptorError(f"{path}: missing field 'involution'")
    inv_data = raw["involution"]
    if not isinstance(inv_data, dict) or "matrix" not in inv_data:
        raise DescriptorError(f"{path}: involution must carry a 'matrix' field")
    m = _matrix_from_descriptor(inv_data["matrix"], f"{path}: involution.matrix")
    try:
        out["involution"] = from_matrix(m)
    except ValueError as e:
        raise DescriptorError(f"{path}: involution.matrix: {e}")
    if "eta" in raw:
        eta_data = raw["eta"]
        if not isinstance(eta_data, dict):
            raise DescriptorError(f"{path}: eta must map block names to matrices")
        out["eta"] = {name: _matrix_from_descriptor(mat, f"{path}: eta.{name}")
                      for name, mat in eta_data.items()}
    return out


def _emit_case(result: CaseResult, as_json: bool, out) -> bool:
    if as_json:
        print(json.dumps(result.to_json(), indent=2), file=out)
    else:
        rep = result.computed
        extra = ""
        if "formula" in result.details:
            extra = f" [{result.details['formula']}]"
        if "case_label" in result.details:
            extra += f" case {result.details['case_label']}"
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name}: total={rep.sigma_dim} expected_total="
              f"{result.expected_total} base={rep.base_count} expected_base="
              f"{result.expected_base_count} harmonic={rep.harmonic_count} "
              f"base_harmonic={'yes' if rep.is_base_harmonic else 'no'}"
              f"{extra} -> {status}", file=out)
    return result.passed


def _cmd_gallery(args, as_json: bool, seed: int) -> int:
    manifest = None
    if args.manifest:
        manifest = _load_json(args.manifest)
        if not isinstance(manifest, list):
            raise DescriptorError(f"{args.manifest}: manifest must be a JSON list")
    results = run_gallery(seed=seed, manifest=manifest)
    n_pass = sum(r.passed for r in results)
    if as_json:
        print(json.dumps([r.to_json() for r in results], indent=2))
        print(f"passed {n_pass}/{len(results)}", file=sys.stderr)
    else:
        for r in results:
            _emit_case(r, False, sys.stdout)
        print(f"passed {n_pass}/{len(results)}")
    return 0 if n_pass == len(results) else 1


def _cmd_joinf(args, as_json: bool) -> int:
    if args.descriptor:
        data = load_descriptor(args.descriptor)
        if "eta" not in data:
            raise DescriptorError(
                f"{args.descriptor}: joinf needs an 'eta' parameter involution")
        report = verify_base_count_identity(
            data["variety"], data["involution"], data["eta"])
        label = args.descriptor
    else:
        n = args.rnc
        x = rational_normal_curve(n)
        inv = from_matrix(RatMatrix.diagonal([(-1) ** i for i in range(n + 1)]))
        eta = {"t": RatMatrix.diagonal([1, -1])}
        report = verify_base_count_identity(x, inv, eta)
        label = f"rnc-n{n}"
    if as_json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"{label}: base quadrics lhs={report.lhs} "
              f"rhs={report.rhs_f}-{report.rhs_s1}-{report.rhs_s2}={report.rhs} "
              f"-> {'AGREE' if report.agrees else 'DISAGREE'}")
    return 0 if report.agrees else 1


def _cmd_decompose(args, as_json: bool) -> int:
    data = load_descriptor(args.descriptor)
    sigma = ideal_piece(data["variety"], 2)
    rep = decompose_system(data["involution"], sigma)
    if as_json:
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(f"sigma_dim={rep.sigma_dim} base={rep.base_count} "
              f"harmonic={rep.harmonic_count} "
              f"base_harmonic={'yes' if rep.is_base_harmonic else 'no'}")
    return 0 if rep.is_base_harmonic else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadrivol",
        description="Exact quadric decompositions for varieties with involutions")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON reports")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized constructions "
                             "(default: QUADRIVOL_SEED or 0)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rnc", help="rational normal curve case")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("scroll", help="rational normal scroll case")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--mode", default="all-fixed",
                   choices=["all-fixed", "pair-straight", "pair-swapped"])

    sub.add_parser("veronese", help="Veronese surface case")

    p = sub.add_parser("quintic", help="plane quintic canonical model case")
    p.add_argument("--f", default="1,1,1,1,1,1",
                   help="six comma-separated coefficients of the binary quintic")
    p.add_argument("--curve", default=None,
                   help="explicit plane quintic (polynomial string; "
                        "overrides --f, invariance is then not expected)")

    p = sub.add_parser("trigonal", help="trigonal canonical model case")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--curve", default=None,
                   help="explicit bidegree (n,3) curve (polynomial string)")

    sub.add_parser("genus4", help="genus-4 complete intersection case")

    p = sub.add_parser("joinf", help="base-count identity through the join variety")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rnc", type=int,
                       help="rational normal curve of this degree")
    group.add_argument("--descriptor",
                       help="JSON descriptor with variety, involution and eta")

    p = sub.add_parser("decompose", help="decompose the quadrics through a variety")
    p.add_argument("--descriptor", required=True,
                   help="JSON descriptor with variety and involution")

    p = sub.add_parser("gallery", help="run every built-in case")
    p.add_argument("--manifest", default=None,
                   help="JSON list of case descriptors replacing the default run")
    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("QUADRIVOL_SEED", "0"))
    as_json = args.json
    try:
        if args.command == "rnc":
            result = rnc_case(args.n)
        elif args.command == "scroll":
            result = scroll_case(ScrollInvolutionSpec(args.k, args.l, args.mode))
        elif args.command == "veronese":
            result = veronese_case()
        elif args.command == "quintic":
            if args.curve is not None:
                curve = poly_from_string(VarBlocks.single("x", 3), args.curve)
                result = quintic_case(curve=curve, expected_invariant=False,
                                      name="quintic-custom")
            else:
                coeffs = [rat(c.strip()) for c in args.f.split(",")]
                result = quintic_case(f_coeffs=coeffs)
        elif args.command == "trigonal":
            curve = None
            if args.curve is not None:
                curve = poly_from_string(
                    VarBlocks.make(("x", 2), ("y", 2)), args.curve)
            result = trigonal_case(args.n, curve=curve)
        elif args.command == "genus4":
            result = genus4_case()
        elif args.command == "joinf":
            return _cmd_joinf(args, as_json)
        elif args.command == "decompose":
            return _cmd_decompose(args, as_json)
        elif args.command == "gallery":
            return _cmd_gallery(args, as_json, seed)
        else:
            parser.error(f"unknown command {args.command!r}")
            return 2
    except DescriptorError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (TypeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    ok = _emit_case(result, as_json, sys.stdout)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
