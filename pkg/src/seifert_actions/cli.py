"""Command-line front end.

Exit statuses: 0 for success or a positive decision, 3 for a negative
decision (not equivalent, obstruction unsatisfied, invalid data), 2 for
parse or usage errors.  Output is plain text and byte-for-byte
deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from . import action as action_mod
from . import obstruction as obstruction_mod
from . import orbifold as orbifold_mod
from . import seifert
from . import structure as structure_mod

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NEGATIVE = 3

_INPUT_ERRORS = (
    ValueError,
    OSError,
)


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"bad {what} list: {text!r}") from None


def _parse_partition(text: str) -> list[list[int]]:
    """Classes separated by ';', 1-based slots separated by ','."""
    classes = []
    for part in text.split(";"):
        slots = _parse_int_list(part, "partition")
        classes.append([slot - 1 for slot in slots])
    return classes


def _load_verified_action(path: str) -> action_mod.ExtendedActionData:
    data = action_mod.parse_action_file(path)
    problems = action_mod.verify_action(data)
    if problems:
        raise ValueError(
            f"{path} is not a valid action: {problems[0]}"
            + (f" (+{len(problems) - 1} more)" if len(problems) > 1 else "")
        )
    return data


def _cmd_validate(args) -> int:
    pres = seifert.parse_presentation(args.presentation)
    problems = seifert.validate(pres)
    if problems:
        for problem in problems:
            print(problem)
        return EXIT_NEGATIVE
    print("ok")
    return EXIT_OK


def _cmd_normalize(args) -> int:
    pres = seifert.parse_presentation(args.presentation)
    print(seifert.format_normalized(seifert.normalize(pres)))
    return EXIT_OK


def _cmd_equiv(args) -> int:
    a = seifert.parse_presentation(args.presentation_a)
    b = seifert.parse_presentation(args.presentation_b)
    if seifert.equivalent(a, b):
        print("equivalent")
        return EXIT_OK
    print("not equivalent")
    return EXIT_NEGATIVE


def _cmd_euler(args) -> int:
    pres = seifert.parse_presentation(args.presentation)
    print(seifert.euler_number(pres))
    return EXIT_OK


def _cmd_glue_pair(args) -> int:
    pair = seifert.parse_pair(args.pair)
    gp = seifert.gluing_pair(pair)
    fq, fy = seifert.induced_fibration(gp)
    print(f"x={gp.x} y={gp.y}")
    print(f"fibration: ({fq},{fy})")
    return EXIT_OK


def _cmd_orbifold_chi(args) -> int:
    orb = orbifold_mod.parse_orbifold(args.orbifold)
    print(orbifold_mod.euler_characteristic(orb))
    if args.sign:
        print(orbifold_mod.geometry_sign(orb))
    return EXIT_OK


def _cmd_orbit_numbers(args) -> int:
    orb = orbifold_mod.parse_orbifold(args.orbifold)
    numbers = orbifold_mod.possible_orbit_numbers(args.order, orb)
    print(" ".join(str(n) for n in sorted(numbers)))
    return EXIT_OK


def _cmd_check_obstruction(args) -> int:
    orb = orbifold_mod.parse_orbifold(args.orbifold)
    divisor = obstruction_mod.obstruction_divisor(args.order, orb)
    print(f"divisor: {divisor}")
    if obstruction_mod.satisfies_obstruction_divisibility(args.b, args.order, orb):
        print("satisfied")
        return EXIT_OK
    print("not satisfied")
    return EXIT_NEGATIVE


def _cmd_decompose(args) -> int:
    orbits = _parse_int_list(args.orbits, "orbit")
    witness = obstruction_mod.decompose(args.b, orbits)
    if witness is None:
        print("impossible")
        return EXIT_NEGATIVE
    print(obstruction_mod.format_witness(args.b, witness))
    return EXIT_OK


def _cmd_rewrite(args) -> int:
    pres = seifert.parse_presentation(args.presentation)
    norm = seifert.normalize(pres)
    h = obstruction_mod.HFunction(tuple(_parse_int_list(args.h, "h")))
    partition = _parse_partition(args.partition) if args.partition else None
    print(seifert.format_presentation(
        obstruction_mod.rewrite_presentation(norm, h, partition)
    ))
    return EXIT_OK


def _cmd_verify_action(args) -> int:
    data = action_mod.parse_action_file(args.action_file)
    problems = action_mod.verify_action(data)
    if problems:
        for problem in problems:
            print(problem)
        return EXIT_NEGATIVE
    print("ok")
    return EXIT_OK


def _boundary_index(args, data) -> int:
    i = args.index - 1
    if not 0 <= i < data.n_boundary:
        raise ValueError(f"boundary index {args.index} out of range 1..{data.n_boundary}")
    return i


def _element_index(args, data) -> int:
    if not 0 <= args.element < data.group.order:
        raise ValueError(
            f"element {args.element} out of range 0..{data.group.order - 1}"
        )
    return args.element


def _cmd_boundary_action(args) -> int:
    data = _load_verified_action(args.action_file)
    target, auto = action_mod.boundary_action(
        data, _element_index(args, data), _boundary_index(args, data)
    )
    print(f"target: {target + 1}")
    print(f"map: {auto}")
    return EXIT_OK


def _cmd_filling_action(args) -> int:
    data = _load_verified_action(args.action_file)
    target, auto = action_mod.induced_filling_action(
        data, _element_index(args, data), _boundary_index(args, data)
    )
    print(f"target: {target + 1}")
    print(f"map: {auto}")
    return EXIT_OK


def _cmd_orbits(args) -> int:
    data = _load_verified_action(args.action_file)
    sizes = action_mod.boundary_orbit_numbers(data)
    for i in range(data.n_boundary):
        print(f"{i + 1}: {sizes[i]}")
    return EXIT_OK


def _cmd_structure(args) -> int:
    data = _load_verified_action(args.action_file)
    report = structure_mod.structure_report(data)
    sys.stdout.write(structure_mod.format_report(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert-actions",
        description=(
            "Compute with Seifert presentations, gluing data, and finite "
            "fiber-preserving group actions."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"seifert-actions {__version__}"
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check presentation invariants")
    p.add_argument("presentation")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("normalize", help="canonical form of a presentation")
    p.add_argument("presentation")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("equiv", help="fiber-preserving equivalence of presentations")
    p.add_argument("presentation_a")
    p.add_argument("presentation_b")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("euler", help="Euler number of a presentation")
    p.add_argument("presentation")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("glue-pair", help="gluing exponents of a filling pair")
    p.add_argument("pair", help="a pair written (q,p)")
    p.set_defaults(func=_cmd_glue_pair)

    p = sub.add_parser("orbifold-chi", help="orbifold Euler characteristic")
    p.add_argument("orbifold", help="genus:g cone:(...) corner:(...)")
    p.add_argument("--sign", action="store_true", help="also print the geometry sign")
    p.set_defaults(func=_cmd_orbifold_chi)

    p = sub.add_parser("orbit-numbers", help="possible orbit sizes over a quotient")
    p.add_argument("orbifold")
    p.add_argument("--order", type=int, required=True, help="effective group order")
    p.set_defaults(func=_cmd_orbit_numbers)

    p = sub.add_parser("check-obstruction", help="divisibility form of the condition")
    p.add_argument("orbifold")
    p.add_argument("--b", type=int, required=True, help="obstruction class")
    p.add_argument("--order", type=int, required=True, help="effective group order")
    p.set_defaults(func=_cmd_check_obstruction)

    p = sub.add_parser("decompose", help="witness b as a combination of orbit sizes")
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--orbits", required=True, help="comma-separated orbit sizes")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("rewrite", help="spread the class b over fiber slots")
    p.add_argument("presentation")
    p.add_argument("--h", required=True, help="comma-separated slot values")
    p.add_argument(
        "--partition",
        help="orbit classes of slots, e.g. '1,2;3' (1-based, ';'-separated)",
    )
    p.set_defaults(func=_cmd_rewrite)

    p = sub.add_parser("verify-action", help="check the action compatibility laws")
    p.add_argument("action_file")
    p.set_defaults(func=_cmd_verify_action)

    p = sub.add_parser("boundary-action", help="action on a boundary torus")
    p.add_argument("action_file")
    p.add_argument("--element", type=int, required=True, help="element index")
    p.add_argument("--index", type=int, required=True, help="boundary index (1-based)")
    p.set_defaults(func=_cmd_boundary_action)

    p = sub.add_parser("filling-action", help="induced action on a filled torus")
    p.add_argument("action_file")
    p.add_argument("--element", type=int, required=True, help="element index")
    p.add_argument("--index", type=int, required=True, help="boundary index (1-based)")
    p.set_defaults(func=_cmd_filling_action)

    p = sub.add_parser("orbits", help="boundary orbit numbers of an action")
    p.add_argument("action_file")
    p.set_defaults(func=_cmd_orbits)

    p = sub.add_parser("structure", help="group-structure report of an action")
    p.add_argument("action_file")
    p.set_defaults(func=_cmd_structure)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
