"""Command-line front end.

Verbs: check-lattice, check-algebra, homs, dualize, roundtrip, vietoris,
coalg-roundtrip, modelcheck, battery, generate.  Machine mode emits one
`CHECK <name> PASS|FAIL [witness]` line per assertion; `--json` mirrors the
same content.  Exit codes: 0 all checks pass, 1 some check failed, 2 input
parse error, 3 cap exceeded, 4 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .battery import run_battery
from .bitopology import PRBSObject, check_pbs_object, check_prbs_object, set_str
from .duality import counit_zeta, dual_space, unit_gamma, verify_space_duality
from .errors import (
    BitopdualError,
    CapExceeded,
    ParseError,
    SizeOverflow,
    UnknownVerb,
)
from .formats import load_algebra, load_lattice, load_model, load_space, space_to_object
from .generators import GENERATOR_KINDS, generate_instance
from .lattice import check_lattice_laws
from .logic import evaluate, parse_formula
from .mvalgebra import check_lml_axioms, check_lvl_axioms, enumerate_homs
from .report import Report
from .vietoris import verify_category_iso, vietoris_space

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_CAP_EXCEEDED = 3
EXIT_USAGE = 4

VERBS = (
    "check-lattice",
    "check-algebra",
    "homs",
    "dualize",
    "roundtrip",
    "vietoris",
    "coalg-roundtrip",
    "modelcheck",
    "battery",
    "generate",
)


@dataclass
class RunConfig:
    """One CLI invocation: verb, inputs, caps, seed, output mode."""

    verb: str
    inputs: list[str] = field(default_factory=list)
    lattice_path: str | None = None
    formula: str | None = None
    world: int | None = None
    seed: int = 0
    kind: str | None = None
    target: int | None = None
    oracle_budget: int = 2**33
    vietoris_count: int = 100
    machine: bool = False
    as_json: bool = False


def _emit(config: RunConfig, report: Report, info: list[str] | None = None) -> int:
    info = info or []
    if config.as_json:
        payload = {
            "info": info,
            "checks": [
                {"name": l.name, "passed": l.passed, "witness": l.witness}
                for l in report.lines
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif config.machine:
        for line in info:
            print(f"INFO {line}")
        out = report.machine()
        if out:
            print(out)
    else:
        for line in info:
            print(line)
        print(report.human())
    return EXIT_PASS if report.passed else EXIT_CHECK_FAILED


def _run_check_lattice(config: RunConfig) -> int:
    lat = load_lattice(config.inputs[0])
    return _emit(config, check_lattice_laws(lat))


def _run_check_algebra(config: RunConfig) -> int:
    alg = load_algebra(config.inputs[0])
    rep = Report(title="algebra axioms")
    rep.extend(check_lvl_axioms(alg))
    if alg.has_box:
        rep.extend(check_lml_axioms(alg))
    return _emit(config, rep)


def _run_homs(config: RunConfig) -> int:
    alg = load_algebra(config.inputs[0])
    from .lattice import subalgebra_family

    family = subalgebra_family(alg.lattice)
    target = None
    if config.target is not None:
        if not 0 <= config.target < len(family):
            raise UnknownVerb(f"subalgebra index {config.target} out of range")
        target = family.members[config.target]
    homs = enumerate_homs(alg, target=target)
    info = [f"hom {i}: ({','.join(str(int(v)) for v in h)})" for i, h in enumerate(homs)]
    info.append(f"count {len(homs)}")
    return _emit(config, Report(), info)


def _run_dualize(config: RunConfig) -> int:
    alg = load_algebra(config.inputs[0])
    ds = dual_space(alg)
    info = [
        f"points {len(ds.point_index)}",
        *(f"point {i}: ({','.join(str(v) for v in h)})" for i, h in enumerate(ds.point_index)),
    ]
    if isinstance(ds.object, PRBSObject):
        info.extend(f"rel {p}: {set_str(row)}" for p, row in enumerate(ds.object.rel))
        rep = check_prbs_object(ds.object)
    else:
        rep = check_pbs_object(ds.base)
    return _emit(config, rep, info)


def _looks_like_space(path: str) -> bool:
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                return line.startswith("points:")
    return False


def _run_roundtrip(config: RunConfig) -> int:
    path = config.inputs[0]
    rep = Report(title="duality round trip")
    if _looks_like_space(path):
        if config.lattice_path is None:
            raise UnknownVerb("roundtrip on a space file needs --lattice")
        lat = load_lattice(config.lattice_path)
        space, rel, alpha = load_space(path)
        obj = space_to_object(space, lat, alpha, rel)
        sub = verify_space_duality(obj)
        rep.extend(sub)
        rep.add("zeta_iso", sub.passed)
    else:
        alg = load_algebra(path)
        _, gamma_rep = unit_gamma(alg)
        rep.extend(gamma_rep)
        rep.add("gamma_iso", gamma_rep.passed)
    return _emit(config, rep)


def _run_vietoris(config: RunConfig) -> int:
    space, _, _ = load_space(config.inputs[0])
    vs = vietoris_space(space)
    from .bitopology import is_pairwise_boolean

    info = [
        f"members {len(vs.members)}",
        f"tau1_opens {vs.space.tau1.count_opens()}",
        f"tau2_opens {vs.space.tau2.count_opens()}",
        *(f"warning {w}" for w in vs.warnings),
    ]
    rep = Report(title="hyperspace")
    rep.add("pairwise_boolean", is_pairwise_boolean(vs.space))
    return _emit(config, rep, info)


def _run_coalg_roundtrip(config: RunConfig) -> int:
    if config.lattice_path is None:
        raise UnknownVerb("coalg-roundtrip needs --lattice")
    lat = load_lattice(config.lattice_path)
    space, rel, alpha = load_space(config.inputs[0])
    if rel is None:
        raise ParseError("coalg-roundtrip needs an R: block in the space file")
    obj = space_to_object(space, lat, alpha, rel)
    rep = verify_category_iso([obj])
    return _emit(config, rep)


def _run_modelcheck(config: RunConfig) -> int:
    lat = load_lattice(config.inputs[0])
    model = load_model(config.inputs[1])
    formula = parse_formula(config.formula, levels=lat.n)
    worlds = [config.world] if config.world is not None else list(range(model.n_worlds))
    info = []
    for w in worlds:
        value = evaluate(model, lat, w, formula)
        info.append(f"world {w}: {value} ({lat.labels[value]})")
    return _emit(config, Report(), info)


def _run_battery(config: RunConfig) -> int:
    rep = run_battery(
        seed=config.seed,
        oracle_budget=config.oracle_budget,
        vietoris_count=config.vietoris_count,
    )
    return _emit(config, rep)


def _run_generate(config: RunConfig) -> int:
    text = generate_instance(config.seed, config.kind)
    sys.stdout.write(text)
    return EXIT_PASS


_HANDLERS = {
    "check-lattice": _run_check_lattice,
    "check-algebra": _run_check_algebra,
    "homs": _run_homs,
    "dualize": _run_dualize,
    "roundtrip": _run_roundtrip,
    "vietoris": _run_vietoris,
    "coalg-roundtrip": _run_coalg_roundtrip,
    "modelcheck": _run_modelcheck,
    "battery": _run_battery,
    "generate": _run_generate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bitopdual",
        description="workbench for truth-level modal algebras and their dual spaces",
    )
    parser.add_argument("--machine", action="store_true", help="one CHECK line per assertion")
    parser.add_argument("--json", action="store_true", help="JSON mirror of the report")
    parser.add_argument("--max-carrier", type=int, help="largest algebra carrier")
    parser.add_argument("--max-candidates", type=int, help="candidate-function cap")
    sub = parser.add_subparsers(dest="verb")

    for verb in ("check-lattice", "check-algebra", "homs", "dualize", "roundtrip"):
        p = sub.add_parser(verb)
        p.add_argument("input")
        if verb == "homs":
            p.add_argument("--target", type=int, help="subalgebra index for the image")
        if verb == "roundtrip":
            p.add_argument("--lattice", help="truth lattice file (space inputs)")
    p = sub.add_parser("vietoris")
    p.add_argument("input")
    p = sub.add_parser("coalg-roundtrip")
    p.add_argument("input")
    p.add_argument("--lattice", required=True)
    p = sub.add_parser("modelcheck")
    p.add_argument("lattice_file")
    p.add_argument("model_file")
    p.add_argument("formula")
    p.add_argument("--world", type=int)
    p = sub.add_parser("battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle-budget", type=int, default=2**33)
    p.add_argument("--vietoris-count", type=int, default=100)
    p = sub.add_parser("generate")
    p.add_argument("kind", choices=GENERATOR_KINDS)
    p.add_argument("--seed", type=int, default=0)
    return parser


def config_from_args(args) -> RunConfig:
    config = RunConfig(verb=args.verb, machine=args.machine, as_json=args.json)
    if args.verb in ("check-lattice", "check-algebra", "homs", "dualize", "roundtrip",
                     "vietoris", "coalg-roundtrip"):
        config.inputs = [args.input]
    if args.verb == "homs":
        config.target = args.target
    if args.verb in ("roundtrip", "coalg-roundtrip"):
        config.lattice_path = getattr(args, "lattice", None)
    if args.verb == "modelcheck":
        config.inputs = [args.lattice_file, args.model_file]
        config.formula = args.formula
        config.world = args.world
    if args.verb == "battery":
        config.seed = args.seed
        config.oracle_budget = args.oracle_budget
        config.vietoris_count = args.vietoris_count
    if args.verb == "generate":
        config.seed = args.seed
        config.kind = args.kind
    return config


def run(config: RunConfig) -> int:
    handler = _HANDLERS.get(config.verb)
    if handler is None:
        raise UnknownVerb(f"unknown verb {config.verb!r}")
    return handler(config)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    if args.verb is None:
        parser.print_help()
        return EXIT_USAGE
    if args.max_carrier is not None:
        os.environ["BITOPDUAL_MAX_CARRIER"] = str(args.max_carrier)
    if args.max_candidates is not None:
        os.environ["BITOPDUAL_MAX_CANDIDATES"] = str(args.max_candidates)
    try:
        return run(config_from_args(args))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (CapExceeded, SizeOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except UnknownVerb as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except BitopdualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
