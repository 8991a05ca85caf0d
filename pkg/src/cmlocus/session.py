"""Session files: one ring, named objects, and a list of commands.

Line-oriented grammar; ``#`` starts a comment, blank lines are skipped, and
every name must be defined before it is used::

    ring QQ[x,y,z,w] grevlex
    ideal I = x*z, x*w, y*z, y*w
    module M = quotient I
    module N = coker [[x, y], [0, x]]
    prime P = x, y
    prime Q = x + w, y, z assert-prime
    assert-equidimensional M
    report M

Commands: gb, dim, ext, deficiency, psupp, psd, ncm, serre, at-prime,
shallow, report.  The ring line accepts ``QQ`` or ``F<p>`` and an optional
order tag (grevlex, the default, or lex).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .errors import ParseError, SessionError
from .fields import Field, PrimeField, QQ
from .groebner import Ideal
from .locus import PrimeIdeal
from .modules import PolyMatrix, PresentedModule
from .parser import parse_polynomial
from .polynomials import Polynomial
from .rings import ORDERS, PolyRing

_RING_RE = re.compile(
    r"^ring\s+(?P<field>[A-Za-z0-9]+)\s*\[(?P<vars>[^\]]*)\]\s*(?P<order>\w+)?\s*$"
)

COMMANDS = {
    "gb": 1,
    "dim": 1,
    "ext": 2,
    "deficiency": 1,
    "psupp": 2,
    "psd": 2,
    "ncm": 1,
    "serre": 2,
    "at-prime": 2,
    "shallow": 2,
    "report": 1,
}


@dataclass(frozen=True)
class Command:
    line: int
    name: str
    args: tuple


@dataclass
class Session:
    ring: PolyRing
    ideals: dict = dc_field(default_factory=dict)
    modules: dict = dc_field(default_factory=dict)
    primes: dict = dc_field(default_factory=dict)
    equidim_asserts: set = dc_field(default_factory=set)
    commands: list = dc_field(default_factory=list)


def _split_top_level(text: str):
    """Split on commas outside brackets; yields (piece, offset) pairs."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append((text[start:i], start))
            start = i + 1
    parts.append((text[start:], start))
    return parts


def _parse_field(tag: str, line: int) -> Field:
    if tag == "QQ":
        return QQ
    m = re.fullmatch(r"F(\d+)", tag)
    if m:
        try:
            return PrimeField(int(m.group(1)))
        except ValueError as exc:
            raise ParseError(str(exc), line=line) from None
    raise ParseError(f"unknown field {tag!r} (use QQ or F<p>)", line=line)


class _SessionParser:
    def __init__(self, text: str, field_override: Field | None = None):
        self.lines = text.splitlines()
        self.field_override = field_override
        self.session: Session | None = None

    def error(self, message, line, column=None):
        raise SessionError(message, line=line, column=column)

    def poly(self, expr: str, line: int, offset_in_line: int) -> Polynomial:
        try:
            return parse_polynomial(expr, self.session.ring)
        except ParseError as exc:
            column = offset_in_line + (exc.position or 0) + 1
            raise ParseError(exc.message, line=line, column=column) from None

    def check_fresh(self, name: str, line: int):
        s = self.session
        if name in s.ideals or name in s.modules or name in s.primes:
            self.error(f"name {name!r} is already defined", line)
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            self.error(f"bad name {name!r}", line)

    def parse(self) -> Session:
        for idx, raw in enumerate(self.lines, start=1):
            line = raw.split("#", 1)[0].rstrip()
            if not line.strip():
                continue
            self.statement(line, idx)
        if self.session is None:
            raise SessionError("session defines no ring", line=len(self.lines) or 1)
        return self.session

    def statement(self, line: str, idx: int):
        stripped = line.strip()
        head = stripped.split(None, 1)[0]
        if head == "ring":
            self.ring_stmt(stripped, idx)
            return
        if self.session is None:
            self.error("the ring must be declared first", idx)
        if head == "ideal":
            self.ideal_stmt(line, idx)
        elif head == "module":
            self.module_stmt(line, idx)
        elif head == "prime":
            self.prime_stmt(line, idx)
        elif head == "assert-equidimensional":
            self.assert_equidim_stmt(stripped, idx)
        elif head in COMMANDS:
            self.command_stmt(stripped, idx)
        else:
            self.error(f"unknown statement {head!r}", idx)

    def ring_stmt(self, stripped: str, idx: int):
        if self.session is not None:
            self.error("only one ring per session", idx)
        m = _RING_RE.match(stripped)
        if m is None:
            self.error("malformed ring declaration", idx)
        field = _parse_field(m.group("field"), idx)
        if self.field_override is not None:
            field = self.field_override
        variables = tuple(v.strip() for v in m.group("vars").split(",") if v.strip())
        order_tag = m.group("order") or "grevlex"
        if order_tag not in ORDERS:
            self.error(f"unknown order {order_tag!r}", idx)
        try:
            ring = PolyRing(field, variables, ORDERS[order_tag])
        except ValueError as exc:
            self.error(str(exc), idx)
        self.session = Session(ring=ring)

    def _name_and_rhs(self, line: str, idx: int, keyword: str):
        if "=" not in line:
            self.error(f"{keyword} statement needs '='", idx)
        lhs, rhs = line.split("=", 1)
        parts = lhs.split()
        if len(parts) != 2:
            self.error(f"malformed {keyword} statement", idx)
        name = parts[1]
        self.check_fresh(name, idx)
        rhs_offset = len(lhs) + 1
        return name, rhs, rhs_offset

    def _parse_gens(self, rhs: str, rhs_offset: int, idx: int):
        gens = []
        for piece, off in _split_top_level(rhs):
            if not piece.strip():
                self.error("empty generator (trailing comma?)", idx)
            gens.append(self.poly(piece, idx, rhs_offset + off))
        return gens

    def ideal_stmt(self, line: str, idx: int):
        name, rhs, rhs_offset = self._name_and_rhs(line, idx, "ideal")
        gens = self._parse_gens(rhs, rhs_offset, idx)
        self.session.ideals[name] = Ideal(self.session.ring, gens)

    def module_stmt(self, line: str, idx: int):
        name, rhs, rhs_offset = self._name_and_rhs(line, idx, "module")
        rhs_stripped = rhs.strip()
        if rhs_stripped.startswith("quotient"):
            target = rhs_stripped[len("quotient") :].strip()
            if target not in self.session.ideals:
                self.error(f"undefined ideal {target!r}", idx)
            self.session.modules[name] = PresentedModule.from_quotient(
                self.session.ideals[target]
            )
        elif rhs_stripped.startswith("coker"):
            matrix_text = rhs_stripped[len("coker") :].strip()
            offset = rhs_offset + rhs.index(matrix_text[0] if matrix_text else " ")
            matrix = self.matrix_literal(matrix_text, idx, offset)
            self.session.modules[name] = PresentedModule(self.session.ring, matrix)
        else:
            self.error("module must be 'quotient I' or 'coker [[...]]'", idx)

    def matrix_literal(self, text: str, idx: int, offset: int) -> PolyMatrix:
        if not (text.startswith("[") and text.endswith("]")):
            self.error("matrix literal must look like [[a, b], [c, d]]", idx)
        inner = text[1:-1]
        rows = []
        width = None
        for piece, off in _split_top_level(inner):
            piece_stripped = piece.strip()
            if not piece_stripped:
                self.error("empty matrix row (trailing comma?)", idx)
            if not (piece_stripped.startswith("[") and piece_stripped.endswith("]")):
                self.error("matrix rows must be bracketed", idx)
            lead = piece.index("[")
            row_inner = piece_stripped[1:-1]
            row = []
            for entry, entry_off in _split_top_level(row_inner):
                if not entry.strip():
                    self.error("empty matrix entry (trailing comma?)", idx)
                row.append(
                    self.poly(entry, idx, offset + 1 + off + lead + 1 + entry_off)
                )
            if width is None:
                width = len(row)
            elif len(row) != width:
                self.error("ragged matrix rows", idx)
            rows.append(row)
        return PolyMatrix.from_rows(self.session.ring, rows)

    def prime_stmt(self, line: str, idx: int):
        name, rhs, rhs_offset = self._name_and_rhs(line, idx, "prime")
        asserted = False
        if rhs.rstrip().endswith("assert-prime"):
            asserted = True
            rhs = rhs.rstrip()[: -len("assert-prime")]
        pieces = _split_top_level(rhs)
        names = [p.strip() for p, _ in pieces]
        ring = self.session.ring
        if all(n in ring.variables for n in names):
            try:
                prime = PrimeIdeal.from_variables(ring, names)
            except ValueError as exc:
                self.error(str(exc), idx)
        elif asserted:
            gens = self._parse_gens(rhs, rhs_offset, idx)
            try:
                prime = PrimeIdeal.asserted(Ideal(ring, gens))
            except Exception as exc:
                self.error(str(exc), idx)
        else:
            self.error(
                "prime generators are not plain variables; "
                "append assert-prime to take responsibility for primality",
                idx,
            )
        self.session.primes[name] = prime

    def assert_equidim_stmt(self, stripped: str, idx: int):
        parts = stripped.split()
        if len(parts) != 2:
            self.error("assert-equidimensional takes one module name", idx)
        target = parts[1]
        if target not in self.session.modules:
            self.error(f"undefined module {target!r}", idx)
        self.session.equidim_asserts.add(target)

    def command_stmt(self, stripped: str, idx: int):
        parts = stripped.split()
        name, args = parts[0], tuple(parts[1:])
        if len(args) != COMMANDS[name]:
            self.error(
                f"{name} takes {COMMANDS[name]} argument(s), got {len(args)}", idx
            )
        s = self.session
        target = args[0]
        if name == "gb":
            if target not in s.ideals:
                self.error(f"undefined ideal {target!r}", idx)
        elif name == "dim":
            if target not in s.ideals and target not in s.modules:
                self.error(f"undefined ideal or module {target!r}", idx)
        else:
            if target not in s.modules:
                self.error(f"undefined module {target!r}", idx)
        if name in ("ext", "psupp", "psd", "serre", "shallow"):
            if not re.fullmatch(r"\d+", args[1]):
                self.error(f"{name} needs a non-negative integer argument", idx)
        if name == "at-prime" and args[1] not in s.primes:
            self.error(f"undefined prime {args[1]!r}", idx)
        s.commands.append(Command(line=idx, name=name, args=args))


def parse_session(text: str, field_override: Field | None = None) -> Session:
    """Parse a session file; raises ParseError/SessionError with positions."""
    return _SessionParser(text, field_override).parse()
