"""Command-line front end.

Exit codes: 0 when every check passed, 1 when a checked property failed,
2 for invalid input or flags.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .complex import read_facet_list, write_facet_list
from .constructions import (
    boundary_simplex,
    cyclic_boundary,
    nontrivial_cut_polytope,
    random_plane_triangulation,
    stacked_chain,
)
from .errors import InvalidInputError, PolycutError
from .verifier import FAMILIES, CampaignConfig, analyze, campaign, verify_links

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2
KINDS = ("simplex", "cyclic", "stacked-chain", "nontrivial", "triangulation")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def sidecar_path(path) -> Path:
    return Path(f"{path}.labels.json")


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_construct(args) -> int:
    labeled = None
    if args.kind == "simplex":
        cx = boundary_simplex(args.d)
    elif args.kind == "cyclic":
        if args.n is None:
            raise InvalidInputError("--n is required for cyclic polytopes")
        cx = cyclic_boundary(args.d, args.n)
    elif args.kind == "stacked-chain":
        labeled = stacked_chain(args.d)
    elif args.kind == "nontrivial":
        labeled = nontrivial_cut_polytope(args.d)
    else:
        if args.d != 3:
            raise InvalidInputError("triangulations are 2-spheres: use --d 3")
        if args.n is None:
            raise InvalidInputError("--n is required for triangulations")
        cx = random_plane_triangulation(args.n, args.flips, args.seed)
    if labeled is not None:
        cx = labeled.complex
    header = [f"polycut construct --kind {args.kind} --d {args.d}"
              + (f" --n {args.n}" if args.n is not None else "")
              + (f" --flips {args.flips} --seed {args.seed}" if args.kind == "triangulation" else "")]
    write_facet_list(cx, args.out, header=header)
    if labeled is not None:
        sidecar_path(args.out).write_text(json.dumps(labeled.to_sidecar(), sort_keys=True, indent=2) + "\n")
    print(f"wrote {args.out}: d={cx.dim_d}, {cx.n_vertices} vertices, {len(cx)} facets")
    return EXIT_OK


def cmd_validate(args) -> int:
    report = read_facet_list(args.path).report
    _dump(report.to_dict())
    return EXIT_OK if report.valid else EXIT_FAILED


def cmd_analyze(args) -> int:
    cx = read_facet_list(args.path)
    provenance = {"path": str(args.path)}
    polytopal = True if args.polytopal else None
    sidecar = sidecar_path(args.path)
    if sidecar.exists():
        provenance.update(json.loads(sidecar.read_text()).get("provenance", {}))
        # sidecars are only written for our own polytopal constructions
        polytopal = True
    report = analyze(cx, provenance=provenance, polytopal=polytopal, force_oracle=args.oracle)
    _dump(report.to_dict())
    if report.contradiction:
        out = Path(f"{args.path}.contradiction.json")
        out.write_text(report.to_json() + "\n")
        print(f"CONTRADICTION persisted to {out}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_links(args) -> int:
    report = verify_links(read_facet_list(args.path))
    _dump(report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_campaign(args) -> int:
    config = CampaignConfig(
        family=args.family,
        count=args.count,
        seed=args.seed,
        n_min=args.n_min,
        n_max=args.n_max,
        d=args.d,
        d_min=args.d_min,
        d_max=args.d_max,
        out_dir=args.out,
        workers=args.workers,
    )
    summary = campaign(config)
    _dump({"family": summary.family, "counts": summary.counts(), "persisted": summary.persisted})
    return EXIT_OK if summary.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polycut", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a complex and write it as a facet list")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--flips", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("validate", help="check the boundary-complex conditions")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="minimum-cut report as JSON")
    p.add_argument("path")
    p.add_argument("--oracle", action="store_true", help="require the exhaustive cross-check (n <= 22)")
    p.add_argument("--polytopal", action="store_true", help="treat the input as a polytope boundary")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("links", help="check every vertex link")
    p.add_argument("path")
    p.set_defaults(func=cmd_links)

    p = sub.add_parser("campaign", help="randomized verification run")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=8)
    p.add_argument("--workers", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (PolycutError, OSError, json.JSONDecodeError) as exc:
        print(f"polycut: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
