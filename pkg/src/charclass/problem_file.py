"""Line-oriented problem files describing a homogeneous ideal.

Format::

    # comment (anywhere)
    name twisted cubic            (optional)
    char 32749                    (optional, defaults to 32749)
    vars x0 x1 x2 x3
    gen x1*x3 - x2^2
    gen x2*x0 - x3^2
    gen x1*x0 - x2*x3

The order of directives does not matter except that ``vars`` must precede
``gen`` lines.  Every generator must be homogeneous and nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import PolyParseError, ProblemFileError, UnsupportedInputError
from .ideals import IdealSpec
from .parser import parse_polynomial
from .ring import DEFAULT_PRIME, PolyRing, is_prime


@dataclass(frozen=True)
class ProblemFile:
    p: int
    variables: tuple
    generators: tuple  # expression strings
    name: str | None = None
    gen_lines: tuple = ()  # source line numbers, parallel to generators


def parse_problem_text(text: str, path: str = "<input>") -> ProblemFile:
    p = None
    variables = None
    name = None
    generators = []
    gen_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "char":
            try:
                p = int(rest)
            except ValueError:
                raise ProblemFileError(f"bad characteristic {rest!r}", path, lineno)
        elif head == "vars":
            if variables is not None:
                raise ProblemFileError("duplicate vars line", path, lineno)
            variables = tuple(rest.split())
            if not variables:
                raise ProblemFileError("vars line needs at least one name", path, lineno)
        elif head == "gen":
            if not rest:
                raise ProblemFileError("empty generator", path, lineno)
            generators.append(rest)
            gen_lines.append(lineno)
        elif head == "name":
            name = rest or None
        else:
            raise ProblemFileError(f"unknown directive {head!r}", path, lineno)
    if variables is None:
        raise ProblemFileError("missing vars line", path)
    if not generators:
        raise ProblemFileError("no generators given", path)
    return ProblemFile(
        p=p if p is not None else DEFAULT_PRIME,
        variables=variables,
        generators=tuple(generators),
        name=name,
        gen_lines=tuple(gen_lines),
    )


def load_problem(path) -> ProblemFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ProblemFileError(f"cannot read problem file: {exc}", str(path))
    return parse_problem_text(text, str(path))


def build_ideal(problem: ProblemFile, char_override: int | None = None) -> IdealSpec:
    """Validated homogeneous IdealSpec from a parsed problem description."""
    p = char_override if char_override is not None else problem.p
    if p == 2 or not is_prime(p):
        raise UnsupportedInputError(f"characteristic must be an odd prime, got {p}")
    ring = PolyRing(problem.variables, p)
    gens = []
    for idx, text in enumerate(problem.generators):
        line = problem.gen_lines[idx] if idx < len(problem.gen_lines) else None
        try:
            g = parse_polynomial(text, ring)
        except PolyParseError as exc:
            raise ProblemFileError(
                f"generator {idx + 1} ({text!r}): {exc.args[0]}", "<generators>", line
            )
        if g.is_zero():
            raise UnsupportedInputError(
                f"generator {idx + 1} ({text!r}) is the zero polynomial"
            )
        if not g.is_homogeneous():
            raise UnsupportedInputError(
                f"generator {idx + 1} ({text!r}) is not homogeneous"
            )
        gens.append(g)
    return IdealSpec(ring, gens)


def load_ideal(path, char_override: int | None = None) -> IdealSpec:
    """Load and validate a problem file as an IdealSpec."""
    return build_ideal(load_problem(path), char_override)
