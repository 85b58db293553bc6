#!/usr/bin/env python3
"""
Command-line front end

Usage:
    python run.py decompose a31b --a 14 --b 9
    python run.py core --lambda "2,2" --l 2
    python run.py special --r 3 --b 1 --p 2
    python run.py verify core-identity [--m M --a A --b B]

Every leaf command accepts --json, --verbose and --workers.

Exit codes:
    0: success, or a verification that matches
    1: usage, parse or validity error
    2: precondition, domain or unsupported-base-case error
    3: verification mismatch or internal inconsistency
"""

import argparse
import json
import logging
import re
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from combinatorics.characters import (  # noqa: E402
    a31b_weight_mult,
    gl2_weight_mult,
    gl3_simple_character_oracle,
    sl2_simple_character,
    staircase_weight_mult,
)
from combinatorics.errors import (  # noqa: E402
    ConsistencyError,
    DomainError,
    ParseError,
    PreconditionError,
    UnsupportedBaseCaseError,
    ValidityError,
)
from combinatorics.partitions import (  # noqa: E402
    Composition,
    Partition,
    l_core,
    parse_composition,
    parse_partition,
)
from combinatorics.schur import product_character, truncate_adapted, truncate_core  # noqa: E402
from combinatorics.special import (  # noqa: E402
    SpecialParams,
    enumerate_special_two_part,
    is_lp_special,
    is_p_special,
)
from config.settings import get_settings  # noqa: E402
from theorems import theorem_registry  # noqa: E402
from theorems import verification  # noqa: E402

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3

_INTEGER = re.compile(r"^\s*-?\d+\s*$")

INT_FLAGS = {"m", "a", "b", "k", "l", "p", "r", "u", "v", "workers"}
PARTITION_FLAGS = {"lambda", "core"}
COMPOSITION_FLAGS = {"rows", "cols"}


class Subcommand(str, Enum):
    DECOMPOSE = "decompose"
    BLOCKCOMP = "blockcomp"
    SCHUR = "schur"
    CORE = "core"
    CHAR = "char"
    SPECIAL = "special"
    VERIFY = "verify"


class OutputMode(str, Enum):
    TEXT = "text"
    JSON = "json"


class CommandRequest(BaseModel):
    """A parsed command line; flag values stay raw strings until validated"""
    subcommand: Subcommand
    action: Optional[str] = Field(None, description="second-level command")
    flags: Dict[str, str] = Field(default_factory=dict)
    output_mode: OutputMode = OutputMode.TEXT
    lp: bool = Field(default=False, description="use (l, p)-special pairs")

    def validate_flags(self) -> None:
        """
        Parse every flag under its grammar.

        Raises:
            ParseError: malformed value
            ValidityError: well-formed but not a partition
        """
        for name, value in self.flags.items():
            if name in INT_FLAGS:
                self.int_flag(name)
            elif name in PARTITION_FLAGS:
                parse_partition(value)
            elif name in COMPOSITION_FLAGS:
                parse_composition(value)

    def has(self, name: str) -> bool:
        return name in self.flags

    def int_flag(self, name: str, default: Optional[int] = None) -> int:
        value = self.flags.get(name)
        if value is None:
            if default is None:
                raise ParseError(f"missing required flag --{name}")
            return default
        if not _INTEGER.match(value):
            raise ParseError(f"--{name} expects an integer, got {value!r}")
        return int(value)

    def partition_flag(self, name: str) -> Partition:
        if name not in self.flags:
            raise ParseError(f"missing required flag --{name}")
        return parse_partition(self.flags[name])

    def composition_flag(self, name: str) -> Composition:
        return parse_composition(self.flags.get(name, ""))

    def special_params(self) -> SpecialParams:
        settings = get_settings()
        return SpecialParams(l=self.int_flag("l", settings.default_l), p=self.int_flag("p", settings.default_p))

    @property
    def p(self) -> int:
        return self.int_flag("p", get_settings().default_p)

    @property
    def workers(self) -> Optional[int]:
        return self.int_flag("workers") if self.has("workers") else None


# Handlers return (JSON payload, text, exit code).
Outcome = Tuple[Any, str, int]


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors raise instead of exiting"""

    def error(self, message):
        raise ParseError(f"{self.prog}: {message}")


DECOMPOSE_ACTIONS = {
    "staircase": "staircase",
    "hook": "hook",
    "a31b": "a31b",
    "dual-a31b": "dual-a31b",
    "powers": "power-hook",
    "example63": "power-hook",
}

VERIFY_ALIASES = {
    "cor5-7": "core-identity",
    "prop7-2-2": "a31b-consistency",
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--verbose", action="store_true", help="log progress to standard error")
    common.add_argument("--workers", help="threads for grid verifications")
    return common


def _add_flags(parser: argparse.ArgumentParser, *names: str) -> None:
    helps = {
        "m": "staircase size m",
        "a": "first parameter a",
        "b": "second parameter b",
        "k": "power of two exponent",
        "l": "quantum order l (default 2)",
        "p": "characteristic p, 0 or prime (default 2)",
        "r": "highest weight / first entry of the pair",
        "u": "u of the two-part enumeration",
        "v": "v of the two-part enumeration",
        "lambda": "partition, e.g. \"14,3,1^8\"",
        "core": "l-core partition",
        "rows": "row lengths of s(a) factors, e.g. \"3,2\"",
        "cols": "column lengths of s(1^r) factors",
    }
    for name in names:
        parser.add_argument(f"--{name}", dest=name, help=helps[name])


def build_parser() -> CliParser:
    common = _common_flags()
    parser = CliParser(prog="specht", description="Specht module decompositions at q = -1")
    commands = parser.add_subparsers(dest="subcommand", parser_class=CliParser)
    commands.required = True

    decompose = commands.add_parser("decompose", help="Young module summands of a Specht module")
    decompose_actions = decompose.add_subparsers(dest="action", parser_class=CliParser)
    decompose_actions.required = True
    _add_flags(decompose_actions.add_parser("staircase", parents=[common]), "m", "a", "b", "p")
    _add_flags(decompose_actions.add_parser("hook", parents=[common]), "a", "b", "p")
    _add_flags(decompose_actions.add_parser("a31b", parents=[common]), "a", "b", "p")
    _add_flags(decompose_actions.add_parser("dual-a31b", parents=[common]), "a", "b", "p")
    _add_flags(decompose_actions.add_parser("powers", aliases=["example63"], parents=[common]), "k")

    blockcomp = commands.add_parser("blockcomp", parents=[common], help="σ_m block component of M(a,b,...)")
    _add_flags(blockcomp, "m", "a", "b", "l", "p")

    schur_cmd = commands.add_parser("schur", help="Schur function products and truncations")
    schur_actions = schur_cmd.add_subparsers(dest="action", parser_class=CliParser)
    schur_actions.required = True
    _add_flags(schur_actions.add_parser("prod", parents=[common]), "rows", "cols")
    _add_flags(schur_actions.add_parser("corefilter", parents=[common]), "rows", "cols", "core", "l")
    _add_flags(schur_actions.add_parser("adaptfilter", parents=[common]), "rows", "cols", "m")

    core = commands.add_parser("core", parents=[common], help="l-core of a partition")
    _add_flags(core, "lambda", "l")

    char = commands.add_parser("char", help="simple module characters and weight multiplicities")
    char_actions = char.add_subparsers(dest="action", parser_class=CliParser)
    char_actions.required = True
    _add_flags(char_actions.add_parser("sl2", parents=[common]), "r", "l", "p")
    _add_flags(char_actions.add_parser("gl2", parents=[common]), "lambda", "a", "b", "l", "p")
    _add_flags(char_actions.add_parser("gl3-oracle", parents=[common]), "lambda", "p")
    _add_flags(char_actions.add_parser("staircase", parents=[common]), "m", "a", "b", "lambda", "l", "p")
    _add_flags(char_actions.add_parser("a31b-weight", parents=[common]), "a", "b", "lambda")

    special = commands.add_parser("special", parents=[common], help="p-special and (l,p)-special pairs")
    _add_flags(special, "r", "b", "p", "l", "u", "v")
    special.add_argument("--lp", action="store_true", help="test (l,p)-specialness of (r, b)")

    verify = commands.add_parser("verify", help="character identities and grid verifications")
    verify_actions = verify.add_subparsers(dest="action", parser_class=CliParser)
    verify_actions.required = True
    _add_flags(verify_actions.add_parser("core-identity", aliases=["cor5-7"], parents=[common]), "m", "a", "b")
    _add_flags(verify_actions.add_parser("a31b-consistency", aliases=["prop7-2-2"], parents=[common]), "a", "b")
    _add_flags(verify_actions.add_parser("a31b-weight", parents=[common]), "a", "b")
    verify_actions.add_parser("examples", parents=[common])
    verify_actions.add_parser("powers", parents=[common])
    verify_actions.add_parser("rank-two", parents=[common])
    verify_actions.add_parser("special-oracle", parents=[common])

    return parser


def parse_request(argv: List[str]) -> Tuple[CommandRequest, bool]:
    """
    Returns:
        Tuple[CommandRequest, bool]: validated request and the --verbose flag
    """
    args = build_parser().parse_args(argv)
    raw = vars(args)
    reserved = {"subcommand", "action", "json", "verbose", "lp"}
    flags = {k: v for k, v in raw.items() if k not in reserved and v is not None}
    request = CommandRequest(
        subcommand=Subcommand(args.subcommand),
        action=raw.get("action"),
        flags=flags,
        output_mode=OutputMode.JSON if raw.get("json") else OutputMode.TEXT,
        lp=bool(raw.get("lp")),
    )
    request.validate_flags()
    return request, bool(raw.get("verbose"))


def _decompose(request: CommandRequest) -> Outcome:
    name = DECOMPOSE_ACTIONS[request.action]
    theorem = theorem_registry.require_theorem(name)
    if name == "power-hook":
        params = {"k": request.int_flag("k")}
    else:
        params = {key: request.int_flag(key) for key in theorem.metadata.parameters}
        if "p" in theorem.metadata.defaults:
            params["p"] = request.p
        for key in theorem.metadata.fixed:
            if request.has(key):
                params[key] = request.int_flag(key)
    result = theorem.decompose(**params)
    return result.to_dict(), result.render(), EXIT_OK


def _blockcomp(request: CommandRequest) -> Outcome:
    params = request.special_params()
    result = theorem_registry.require_theorem("block-component").decompose(
        m=request.int_flag("m"), a=request.int_flag("a"), b=request.int_flag("b"), l=params.l, p=params.p
    )
    return result.to_dict(), result.render(), EXIT_OK


def _schur(request: CommandRequest) -> Outcome:
    product = product_character(request.composition_flag("rows").parts, request.composition_flag("cols").parts)
    if request.action == "corefilter":
        product = truncate_core(product, request.partition_flag("core"), request.int_flag("l", get_settings().default_l))
    elif request.action == "adaptfilter":
        product = truncate_adapted(product, request.int_flag("m"))
    return product.to_records(), product.render(), EXIT_OK


def _core(request: CommandRequest) -> Outcome:
    lam = request.partition_flag("lambda")
    l = request.int_flag("l", get_settings().default_l)
    core = l_core(lam, l)
    payload = {"partition": list(lam.parts), "l": l, "core": list(core.parts)}
    return payload, str(core), EXIT_OK


def _char(request: CommandRequest) -> Outcome:
    action = request.action
    if action == "sl2":
        character = sl2_simple_character(request.int_flag("r"), request.special_params())
        return character.to_records(), character.render(), EXIT_OK
    if action == "gl3-oracle":
        character = gl3_simple_character_oracle(request.partition_flag("lambda"), request.p)
        return character.to_records(), character.render(), EXIT_OK

    if action == "gl2":
        lam = request.partition_flag("lambda")
        if lam.length > 2:
            raise ValidityError(f"{lam} has more than two parts")
        c, d = lam.padded(2)
        value = gl2_weight_mult(c, d, request.int_flag("a"), request.int_flag("b"), request.special_params())
    elif action == "staircase":
        value = staircase_weight_mult(
            request.int_flag("m"),
            request.int_flag("a"),
            request.int_flag("b"),
            request.partition_flag("lambda"),
            request.special_params(),
        )
    else:
        value = a31b_weight_mult(request.int_flag("a"), request.int_flag("b"), request.partition_flag("lambda"))
    payload = {"flags": {k: v for k, v in sorted(request.flags.items())}, "multiplicity": value}
    return payload, str(value), EXIT_OK


def _special(request: CommandRequest) -> Outcome:
    if request.has("u") or request.has("v"):
        u, v, p = request.int_flag("u"), request.int_flag("v"), request.p
        found = enumerate_special_two_part(u, v, p)
        payload = {"u": u, "v": v, "p": p, "partitions": [list(mu.padded(2)) for mu in found]}
        text = " ".join(f"({c},{d})" for c, d in (mu.padded(2) for mu in found))
        return payload, text, EXIT_OK

    r, b = request.int_flag("r"), request.int_flag("b")
    if request.lp:
        params = request.special_params()
        answer = is_lp_special(r, b, params)
        payload = {"s": r, "a": b, "l": params.l, "p": params.p, "special": answer}
    else:
        p = request.p
        answer = is_p_special(r, b, p)
        payload = {"r": r, "b": b, "p": p, "special": answer}
    return payload, "true" if answer else "false", EXIT_OK


def _grid_outcome(report) -> Outcome:
    payload = {**report.model_dump(), "ok": report.ok}
    return payload, report.render(), EXIT_OK if report.ok else EXIT_MISMATCH


def _single_case(request: CommandRequest, names: Tuple[str, ...]) -> bool:
    """True when every case flag is given, False when none is; anything else is a usage error"""
    given = [name for name in names if request.has(name)]
    if given and len(given) < len(names):
        wanted = ", ".join(f"--{name}" for name in names)
        got = ", ".join(f"--{name}" for name in given)
        raise ParseError(f"verify {request.action} needs all of {wanted} or none (got {got})")
    return bool(given)


def _verify(request: CommandRequest) -> Outcome:
    action = VERIFY_ALIASES.get(request.action, request.action)
    workers = request.workers

    if action == "core-identity":
        if _single_case(request, ("m", "a", "b")):
            verdict = verification.verify_core_identity(
                request.int_flag("m"), request.int_flag("a"), request.int_flag("b")
            )
            code = EXIT_OK if verdict.matched else EXIT_MISMATCH
            return verdict.model_dump(mode="json"), verdict.render(), code
        return _grid_outcome(verification.core_identity_grid(workers=workers))

    if action == "a31b-consistency":
        if _single_case(request, ("a", "b")):
            verdict = verification.verify_a31b_consistency(request.int_flag("a"), request.int_flag("b"))
            code = EXIT_OK if verdict.consistent else EXIT_MISMATCH
            return verdict.model_dump(mode="json"), verdict.render(), code
        return _grid_outcome(verification.a31b_consistency_grid(workers=workers))

    grids: Dict[str, Callable[..., Any]] = {
        "a31b-weight": lambda: verification.a31b_weight_grid(
            max_a=request.int_flag("a") if request.has("a") else None,
            max_b=request.int_flag("b") if request.has("b") else None,
            workers=workers,
        ),
        "examples": lambda: verification.verify_examples(workers=workers),
        "powers": lambda: verification.power_hook_grid(workers=workers),
        "rank-two": lambda: verification.rank_two_equivalence_grid(workers=workers),
        "special-oracle": lambda: verification.special_oracle_grid(workers=workers),
    }
    return _grid_outcome(grids[action]())


HANDLERS: Dict[Subcommand, Callable[[CommandRequest], Outcome]] = {
    Subcommand.DECOMPOSE: _decompose,
    Subcommand.BLOCKCOMP: _blockcomp,
    Subcommand.SCHUR: _schur,
    Subcommand.CORE: _core,
    Subcommand.CHAR: _char,
    Subcommand.SPECIAL: _special,
    Subcommand.VERIFY: _verify,
}


def configure_logging(verbose: bool) -> None:
    level = logging.INFO if verbose else getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logging.getLogger().setLevel(level)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse, dispatch and render one command.

    Args:
        argv: arguments without the program name; sys.argv[1:] when None

    Returns:
        int: exit code
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        request, verbose = parse_request(argv)
    except SystemExit as e:
        # --help
        return int(e.code or 0)
    except (ParseError, ValidityError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(verbose)
    logger.debug(f"dispatching {request.subcommand.value} {request.action or ''} {request.flags}")

    try:
        payload, text, code = HANDLERS[request.subcommand](request)
    except (ParseError, ValidityError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, DomainError, UnsupportedBaseCaseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return EXIT_MISMATCH

    if request.output_mode == OutputMode.JSON:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
