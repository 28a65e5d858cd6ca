"""Reading and writing the line-oriented ``.dnf`` format.

::

    # optional comments
    vars: 3
    1 2
    1 3
    2 3

The header must be the first non-comment line; every other non-empty,
non-comment line is one implicant as ascending 1-based indices.
"""

from __future__ import annotations

import itertools
import logging
import re
from pathlib import Path
from typing import IO, List, Tuple, Union

from src.errors import DnfSyntaxError, IndexOutOfRangeError, NotAntichainError
from src.logic.dnf import Implicant, MonotoneDNF, minimize_implicants

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r"vars: (\d+)")


def _content_lines(text: str) -> List[Tuple[int, str]]:
    """Return ``(line_number, stripped_line)`` for lines that carry data."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((number, line))
    return lines


def _parse_header(number: int, line: str) -> int:
    match = HEADER_RE.fullmatch(line)
    if match is None:
        raise DnfSyntaxError(f"line {number}: expected 'vars: <n>' header, got {line!r}")
    n = int(match.group(1))
    if n < 1:
        raise DnfSyntaxError(f"line {number}: variable count must be positive")
    return n


def _parse_implicant(number: int, line: str, n: int) -> Implicant:
    try:
        indices = [int(tok) for tok in line.split()]
    except ValueError:
        raise DnfSyntaxError(f"line {number}: non-integer token in {line!r}") from None
    for i in indices:
        if not 1 <= i <= n:
            raise IndexOutOfRangeError(f"line {number}: index {i} outside 1..{n}")
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise DnfSyntaxError(f"line {number}: indices must be strictly ascending")
    return tuple(indices)


def _first_containment(implicants: List[Implicant]) -> Tuple[Implicant, Implicant]:
    for a, b in itertools.permutations(implicants, 2):
        if set(a) <= set(b):
            return a, b
    raise AssertionError("no containment found")


def parse_dnf(text: Union[str, IO[str]], minimize: bool = False) -> MonotoneDNF:
    """Parse ``.dnf`` text into a validated :class:`MonotoneDNF`.

    With ``minimize`` superset (and duplicate) implicants are dropped instead
    of raising :class:`NotAntichainError`.
    """
    if not isinstance(text, str):
        text = text.read()
    lines = _content_lines(text)
    if not lines:
        raise DnfSyntaxError("missing 'vars: <n>' header")
    n = _parse_header(*lines[0])
    implicants = [_parse_implicant(number, line, n) for number, line in lines[1:]]

    reduced = minimize_implicants(implicants)
    if len(reduced) != len(implicants):
        if not minimize:
            sub, sup = _first_containment(implicants)
            raise NotAntichainError(f"implicant {list(sub)} is contained in {list(sup)}")
        logger.debug("Stripped %d redundant implicants", len(implicants) - len(reduced))
        implicants = reduced
    return MonotoneDNF(n, tuple(implicants))


def serialize_dnf(f: MonotoneDNF) -> str:
    lines = [f"vars: {f.num_vars}"]
    lines += [" ".join(str(i) for i in imp) for imp in f.implicants]
    return "\n".join(lines) + "\n"


def load_dnf(path: Union[str, Path], minimize: bool = False) -> MonotoneDNF:
    """Read and parse the ``.dnf`` file at ``path``."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise DnfSyntaxError(f"{path}: not valid UTF-8 (byte {exc.start})") from None
    f = parse_dnf(text, minimize=minimize)
    logger.info("Loaded %s: %d variables, %d implicants", path, f.num_vars, len(f))
    return f


def write_dnf(f: MonotoneDNF, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_dnf(f), encoding="utf-8")
    logger.info("Wrote %s: %d variables, %d implicants", path, f.num_vars, len(f))
