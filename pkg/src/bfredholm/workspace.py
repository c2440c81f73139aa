"""Workspace files and the sequence/set description mini-language.

A workspace is a JSON document with four optional sections::

    {
      "algebras":          {name: {"ambient_dim": n, "basis": [matrix, ...]}},
      "homomorphisms":     {name: {"source": a, "target": b, "matrix": m}},
      "elements":          {name: {"algebra": a, "coords": [literal, ...]}},
      "diagonal_elements": {name: "tail 1/n -> 0 ; const 2"}
    }

Scalars are exact literals: strings like "3", "-1/2", "3/2-2/5*i", or
plain JSON integers.  Decimal floats are rejected.  Every diagnostic
carries the path of the offending node (or a character offset inside a
mini-language expression), and everything that parses is verified by the
underlying constructors: algebra bases must be closed, homomorphism
matrices must be multiplicative, and so on.

The mini-language describes diagonal elements and spectral sets as
semicolon-separated clauses::

    finite [3, 5/2, 3]      explicit values, repetition = multiplicity
    const 2                  an infinite constant block / the point 2
    tail 1/n -> 0            a sequence rule with its declared limit
    tail 3*(1/2)^n + 1 -> 1  geometric rules work the same way
    family (1/m + 1/n)       a two-index rule with its full limit structure
    disk(0, 2)               region primitives (spectral sets only)
    segment(-1, 1)
    circle(i, 1/2)

Rule expressions are polynomials in one vanishing generator per index
letter: 1/n (and powers) or (r)^n with 0 < |r| < 1.  The declared tail
limit is checked against the rule, so a description can never lie about
its closure.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Element, FiniteAlgebra, Homomorphism
from .errors import BFredholmError, WorkspaceError
from .exact import ExactMatrix, ExactPolynomial, GR, GaussianRational, MultiPoly
from .spectral import (
    Constant,
    DiagFamily,
    DiagTail,
    DiagonalElement,
    Finite,
    Geometric,
    Harmonic,
    SpectralSet,
    TailRule,
    circle,
    diag,
    disk,
    empty_set,
    family,
    finite,
    segment,
    tail,
)

# ---------------------------------------------------------------------------
# scalar literals
# ---------------------------------------------------------------------------


def parse_scalar(node, path: str) -> GaussianRational:
    """Exact literal (string or int) to a Gaussian rational, or a
    positioned diagnostic."""
    if isinstance(node, bool):
        raise WorkspaceError(f"{path}: expected an exact scalar, got a boolean")
    if isinstance(node, int):
        return GR.coerce(node)
    if isinstance(node, float):
        raise WorkspaceError(
            f"{path}: decimal floats are not accepted; write the exact "
            f"literal as a string"
        )
    if isinstance(node, str):
        try:
            return GaussianRational.parse(node)
        except ValueError as e:
            raise WorkspaceError(f"{path}: {e}") from None
    raise WorkspaceError(
        f"{path}: expected an exact scalar literal, got {type(node).__name__}"
    )


# ---------------------------------------------------------------------------
# mini-language: tokens
# ---------------------------------------------------------------------------

_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<int>\d+)"
    r"|(?P<name>[A-Za-z_]+)"
    r"|(?P<arrow>->)"
    r"|(?P<op>[-+*/^()\[\],;])"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # "int" | "name" | "arrow" | "op" | "end"
    text: str
    pos: int


def _lex(src: str, label: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            hint = ""
            if src[pos] == ".":
                hint = " (decimal floats are not accepted)"
            raise WorkspaceError(
                f"{label}:{pos}: unexpected character {src[pos]!r}{hint}"
            )
        pos = m.end()
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), m.start()))
    toks.append(_Tok("end", "", len(src)))
    return toks


class _Stream:
    def __init__(self, toks: list[_Tok], label: str):
        self.toks = toks
        self.label = label
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.cur
        if t.kind != "end":
            self.i += 1
        return t

    def take(self, text: str) -> _Tok:
        t = self.cur
        if t.text != text:
            self.fail(f"expected {text!r}", t)
        return self.next()

    def at(self, text: str) -> bool:
        return self.cur.text == text

    def fail(self, msg: str, tok: _Tok | None = None):
        t = tok if tok is not None else self.cur
        shown = t.text or "end of input"
        raise WorkspaceError(f"{self.label}:{t.pos}: {msg}, got {shown!r}")


# ---------------------------------------------------------------------------
# mini-language: symbolic sequence values
# ---------------------------------------------------------------------------

# A value during expression evaluation: a polynomial in up to two
# vanishing generators, one per index letter.  Keys are (m power, n power).


@dataclass
class _SeqValue:
    terms: dict[tuple[int, int], GaussianRational] = field(default_factory=dict)
    kinds: list = field(default_factory=lambda: [None, None])  # m axis, n axis

    @staticmethod
    def of_scalar(c: GaussianRational) -> "_SeqValue":
        return _SeqValue({(0, 0): c} if not c.is_zero() else {})

    @staticmethod
    def of_generator(axis: int, kind) -> "_SeqValue":
        key = (1, 0) if axis == 0 else (0, 1)
        kinds = [None, None]
        kinds[axis] = kind
        return _SeqValue({key: GR.coerce(1)}, kinds)

    def axes(self) -> tuple[bool, bool]:
        return (
            any(e[0] for e in self.terms),
            any(e[1] for e in self.terms),
        )

    def scalar_value(self) -> GaussianRational | None:
        if any(self.axes()):
            return None
        return self.terms.get((0, 0), GR.zero())


def _merge_kinds(a: _SeqValue, b: _SeqValue, stream: _Stream, at: _Tok) -> list:
    kinds = [None, None]
    for axis, letter in ((0, "m"), (1, "n")):
        ka, kb = a.kinds[axis], b.kinds[axis]
        if ka is not None and kb is not None and ka != kb:
            raise WorkspaceError(
                f"{stream.label}:{at.pos}: the {letter} index mixes two "
                f"different generators ({ka} and {kb})"
            )
        kinds[axis] = ka if ka is not None else kb
    return kinds


def _sv_add(a: _SeqValue, b: _SeqValue, stream, at, sign=1) -> _SeqValue:
    terms = dict(a.terms)
    for e, c in b.terms.items():
        s = terms.get(e, GR.zero()) + sign * c
        if s.is_zero():
            terms.pop(e, None)
        else:
            terms[e] = s
    return _SeqValue(terms, _merge_kinds(a, b, stream, at))


def _sv_mul(a: _SeqValue, b: _SeqValue, stream, at) -> _SeqValue:
    terms: dict[tuple[int, int], GaussianRational] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            e = (ea[0] + eb[0], ea[1] + eb[1])
            s = terms.get(e, GR.zero()) + ca * cb
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
    return _SeqValue(terms, _merge_kinds(a, b, stream, at))


def _sv_pow(a: _SeqValue, k: int, stream, at) -> _SeqValue:
    out = _SeqValue.of_scalar(GR.coerce(1))
    for _ in range(k):
        out = _sv_mul(out, a, stream, at)
    return out


# ---------------------------------------------------------------------------
# mini-language: expression parsing
# ---------------------------------------------------------------------------

_AXIS = {"m": 0, "n": 1}


def _parse_expr(s: _Stream) -> _SeqValue:
    value = _parse_term(s)
    while s.cur.text in ("+", "-"):
        op = s.next()
        rhs = _parse_term(s)
        value = _sv_add(value, rhs, s, op, sign=1 if op.text == "+" else -1)
    return value


def _parse_term(s: _Stream) -> _SeqValue:
    value = _parse_factor(s)
    while s.cur.text in ("*", "/"):
        op = s.next()
        if op.text == "*":
            value = _sv_mul(value, _parse_factor(s), s, op)
            continue
        if s.cur.kind == "name" and s.cur.text in _AXIS:
            value = _sv_mul(value, _parse_index_power(s), s, op)
            continue
        rhs = _parse_factor(s)
        den = rhs.scalar_value()
        if den is None:
            s.fail("division is only defined by a scalar or an index power", op)
        if den.is_zero():
            raise WorkspaceError(f"{s.label}:{op.pos}: division by zero")
        inv = _SeqValue.of_scalar(den.inverse())
        value = _sv_mul(value, inv, s, op)
    return value


def _parse_index_power(s: _Stream) -> _SeqValue:
    """The reciprocal-index generator: the n of 1/n or 1/n^2."""
    name = s.next()
    axis = _AXIS[name.text]
    k = 1
    if s.at("^"):
        s.next()
        exp = s.cur
        if exp.kind != "int":
            s.fail("expected an integer exponent")
        k = int(s.next().text)
    gen = _SeqValue.of_generator(axis, Harmonic())
    return _sv_pow(gen, k, s, name)


def _parse_factor(s: _Stream) -> _SeqValue:
    value = _parse_atom(s)
    while s.at("^"):
        op = s.next()
        exp = s.cur
        if exp.kind == "int":
            s.next()
            value = _sv_pow(value, int(exp.text), s, op)
            continue
        if exp.kind == "name" and exp.text in _AXIS:
            s.next()
            base = value.scalar_value()
            if base is None:
                s.fail("a geometric base must be a scalar", op)
            axis = _AXIS[exp.text]
            try:
                kind = Geometric(base)
            except ValueError as e:
                raise WorkspaceError(f"{s.label}:{op.pos}: {e}") from None
            value = _SeqValue.of_generator(axis, kind)
            continue
        s.fail("expected an integer exponent or an index letter")
    return value


def _parse_atom(s: _Stream) -> _SeqValue:
    t = s.cur
    if t.text == "-":
        s.next()
        return _sv_mul(
            _SeqValue.of_scalar(GR.coerce(-1)), _parse_atom(s), s, t
        )
    if t.kind == "int":
        s.next()
        return _SeqValue.of_scalar(GR.coerce(int(t.text)))
    if t.kind == "name" and t.text == "i":
        s.next()
        return _SeqValue.of_scalar(GaussianRational(0, 1))
    if t.kind == "name" and t.text in _AXIS:
        s.fail(
            f"a bare index has no value; write 1/{t.text} (harmonic) "
            f"or (r)^{t.text} (geometric)"
        )
    if t.text == "(":
        s.next()
        value = _parse_expr(s)
        s.take(")")
        return value
    s.fail("expected a scalar, i, 1/n, (r)^n or a parenthesized expression")


def _expr_scalar(s: _Stream) -> GaussianRational:
    at = s.cur
    value = _parse_expr(s)
    c = value.scalar_value()
    if c is None:
        s.fail("expected a scalar here, not a sequence rule", at)
    return c


# ---------------------------------------------------------------------------
# mini-language: clauses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Clause:
    head: str
    pos: int
    values: tuple[GaussianRational, ...] = ()
    rule: TailRule | None = None
    family_poly: MultiPoly | None = None
    family_kinds: tuple = ()


def _parse_tail_clause(s: _Stream, pos: int) -> _Clause:
    at = s.cur
    value = _parse_expr(s)
    s.take("->")
    declared = _expr_scalar(s)
    used_m, used_n = value.axes()
    if used_m and used_n:
        raise WorkspaceError(
            f"{s.label}:{at.pos}: a tail rule uses one index; "
            f"two-index rules belong to family(...)"
        )
    if not (used_m or used_n):
        raise WorkspaceError(
            f"{s.label}:{at.pos}: the tail rule is constant; use const"
        )
    axis = 0 if used_m else 1
    degree = max(e[axis] for e in value.terms)
    coeffs = [GR.zero()] * (degree + 1)
    for e, c in value.terms.items():
        coeffs[e[axis]] = c
    rule = TailRule(value.kinds[axis], ExactPolynomial(coeffs))
    if rule.limit() != declared:
        raise WorkspaceError(
            f"{s.label}:{at.pos}: the rule tends to {rule.limit().literal()}, "
            f"not the declared {declared.literal()}"
        )
    return _Clause("tail", pos, rule=rule)


def _parse_family_clause(s: _Stream, pos: int) -> _Clause:
    s.take("(")
    at = s.cur
    value = _parse_expr(s)
    s.take(")")
    poly = MultiPoly(2, dict(value.terms))
    kinds = (
        value.kinds[0] if value.kinds[0] is not None else Harmonic(),
        value.kinds[1] if value.kinds[1] is not None else Harmonic(),
    )
    return _Clause("family", at.pos, family_poly=poly, family_kinds=kinds)


def _parse_clauses(text: str, label: str) -> list[_Clause]:
    s = _Stream(_lex(text, label), label)
    clauses: list[_Clause] = []
    while True:
        t = s.cur
        if t.kind == "end":
            break
        if t.kind != "name":
            s.fail("expected a clause keyword (finite/const/tail/family/"
                   "disk/segment/circle)")
        head = s.next().text
        if head == "finite":
            s.take("[")
            values = [_expr_scalar(s)]
            while s.at(","):
                s.next()
                values.append(_expr_scalar(s))
            s.take("]")
            clauses.append(_Clause("finite", t.pos, values=tuple(values)))
        elif head == "const":
            clauses.append(_Clause("const", t.pos, values=(_expr_scalar(s),)))
        elif head == "tail":
            clauses.append(_parse_tail_clause(s, t.pos))
        elif head == "family":
            clauses.append(_parse_family_clause(s, t.pos))
        elif head in ("disk", "circle", "segment"):
            s.take("(")
            first = _expr_scalar(s)
            s.take(",")
            second = _expr_scalar(s)
            s.take(")")
            clauses.append(_Clause(head, t.pos, values=(first, second)))
        else:
            s.fail(f"unknown clause keyword {head!r}", t)
        if s.at(";"):
            s.next()
        elif s.cur.kind != "end":
            s.fail("expected ';' between clauses or end of input")
    if not clauses:
        raise WorkspaceError(f"{label}:0: empty description")
    return clauses


def parse_diagonal(text: str, label: str = "expr") -> DiagonalElement:
    """Mini-language description to a diagonal element."""
    atoms = []
    for c in _parse_clauses(text, label):
        if c.head == "finite":
            atoms.extend(Finite(v) for v in c.values)
        elif c.head == "const":
            atoms.append(Constant(c.values[0]))
        elif c.head == "tail":
            atoms.append(DiagTail(c.rule))
        elif c.head == "family":
            try:
                atoms.append(DiagFamily(c.family_poly, *c.family_kinds))
            except ValueError:
                raise WorkspaceError(
                    f"{label}:{c.pos}: the family rule must involve both "
                    f"m and n; write a tail or const instead"
                ) from None
        else:
            raise WorkspaceError(
                f"{label}:{c.pos}: {c.head} is a region primitive; diagonal "
                f"elements take finite/const/tail/family"
            )
    return diag(*atoms)


def parse_spectral_set(text: str, label: str = "expr") -> SpectralSet:
    """Mini-language description to a closed spectral set."""
    out = empty_set()
    for c in _parse_clauses(text, label):
        if c.head == "finite":
            out = out | finite(*c.values)
        elif c.head == "const":
            out = out | finite(c.values[0])
        elif c.head == "tail":
            out = out | tail(c.rule)
        elif c.head == "family":
            out = out | family(c.family_poly, *c.family_kinds)
        elif c.head == "segment":
            try:
                out = out | segment(c.values[0], c.values[1])
            except ValueError as e:
                raise WorkspaceError(f"{label}:{c.pos}: {e}") from None
        else:
            center, radius = c.values
            if radius.im != 0 or radius.re <= 0:
                raise WorkspaceError(
                    f"{label}:{c.pos}: the radius must be a positive rational"
                )
            maker = disk if c.head == "disk" else circle
            out = out | maker(center, Fraction(radius.re))
    return out


# ---------------------------------------------------------------------------
# mini-language: canonical rendering
# ---------------------------------------------------------------------------


def _scalar_expr(c: GaussianRational) -> str:
    """Scalar as mini-language expression text."""
    if c.im == 0:
        return str(c.re)
    imag = "i" if c.im == 1 else ("-i" if c.im == -1 else f"{c.im}*i")
    if c.re == 0:
        return imag
    return f"{c.re}+{imag}" if c.im > 0 else f"{c.re}{imag}"


def _coeff_prefix(c: GaussianRational) -> str:
    """Coefficient text ready to sit in front of '*generator'."""
    text = _scalar_expr(c)
    compound = any(ch in text[1:] for ch in "+-")
    return f"({text})" if compound else text


def _gen_text(kind, letter: str) -> str:
    if isinstance(kind, Harmonic):
        return f"1/{letter}"
    return f"({_coeff_prefix(kind.ratio)})^{letter}"


def _term_text(c: GaussianRational, gens: list[tuple[str, int]]) -> str:
    bits = []
    for g, k in gens:
        if k == 1:
            bits.append(g)
        elif k > 1:
            bits.append(f"({g})^{k}")
    if not bits:
        return _coeff_prefix(c)
    if not c.is_one():
        bits.insert(0, _coeff_prefix(c))
    return "*".join(bits)


def _join_terms(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += f" - {t[1:]}"
        else:
            out += f" + {t}"
    return out


def render_rule(rule: TailRule, letter: str = "n") -> str:
    """Canonical expression text for a one-index rule."""
    gen = _gen_text(rule.kind, letter)
    terms = []
    for k in range(rule.poly.degree, -1, -1):
        c = rule.poly.coeffs[k] if k < len(rule.poly.coeffs) else GR.zero()
        if not c.is_zero():
            terms.append(_term_text(c, [(gen, k)]))
    return _join_terms(terms) if terms else "0"


def render_family(poly: MultiPoly, kinds) -> str:
    gm, gn = _gen_text(kinds[0], "m"), _gen_text(kinds[1], "n")
    keys = sorted(poly.terms, key=lambda e: (-(e[0] + e[1]), -e[0]))
    terms = [
        _term_text(poly.terms[e], [(gm, e[0]), (gn, e[1])]) for e in keys
    ]
    return _join_terms(terms) if terms else "0"


def render_diagonal(d: DiagonalElement) -> str:
    """Canonical mini-language text; parsing it back yields the same text."""
    parts: list[str] = []
    pending: list[str] = []  # consecutive explicit values become one clause

    def flush():
        if pending:
            parts.append(f"finite [{', '.join(pending)}]")
            pending.clear()

    for a in d.atoms:
        if isinstance(a, Finite):
            pending.extend([_scalar_expr(a.value)] * a.multiplicity)
            continue
        flush()
        if isinstance(a, Constant):
            parts.append(f"const {_scalar_expr(a.value)}")
        elif isinstance(a, DiagTail):
            limit = _scalar_expr(a.rule.limit())
            parts.append(f"tail {render_rule(a.rule)} -> {limit}")
        else:
            body = render_family(a.poly, (a.kind_m, a.kind_n))
            parts.append(f"family ({body})")
    flush()
    return " ; ".join(parts)


# ---------------------------------------------------------------------------
# workspace documents
# ---------------------------------------------------------------------------

_SECTIONS = ("algebras", "homomorphisms", "elements", "diagonal_elements")


@dataclass
class Workspace:
    algebras: dict[str, FiniteAlgebra] = field(default_factory=dict)
    homomorphisms: dict[str, Homomorphism] = field(default_factory=dict)
    elements: dict[str, Element] = field(default_factory=dict)
    diagonal_elements: dict[str, DiagonalElement] = field(default_factory=dict)

    def algebra_name(self, algebra: FiniteAlgebra) -> str:
        for name, a in self.algebras.items():
            if a is algebra:
                return name
        raise WorkspaceError(
            "an element's algebra is not part of this workspace"
        )


def _expect_object(node, path: str) -> dict:
    if not isinstance(node, dict):
        raise WorkspaceError(
            f"{path}: expected an object, got {type(node).__name__}"
        )
    return node


def _expect_list(node, path: str) -> list:
    if not isinstance(node, list):
        raise WorkspaceError(
            f"{path}: expected an array, got {type(node).__name__}"
        )
    return node


def _parse_matrix(node, path: str) -> ExactMatrix:
    rows = _expect_list(node, path)
    grid = []
    for i, row in enumerate(rows):
        cells = _expect_list(row, f"{path}[{i}]")
        grid.append(
            [parse_scalar(v, f"{path}[{i}][{j}]") for j, v in enumerate(cells)]
        )
    try:
        return ExactMatrix(grid)
    except ValueError as e:
        raise WorkspaceError(f"{path}: {e}") from None


def _parse_algebra(name: str, node, path: str) -> FiniteAlgebra:
    body = _expect_object(node, path)
    for key in body:
        if key not in ("ambient_dim", "basis"):
            raise WorkspaceError(f"{path}.{key}: unknown algebra field")
    if "basis" not in body:
        raise WorkspaceError(f"{path}: missing required field 'basis'")
    basis = [
        _parse_matrix(b, f"{path}.basis[{k}]")
        for k, b in enumerate(_expect_list(body["basis"], f"{path}.basis"))
    ]
    try:
        algebra = FiniteAlgebra(basis, name=name)
    except ValueError as e:
        raise WorkspaceError(f"{path}: {e}") from None
    if "ambient_dim" in body:
        declared = body["ambient_dim"]
        if not isinstance(declared, int) or isinstance(declared, bool):
            raise WorkspaceError(f"{path}.ambient_dim: expected an integer")
        if declared != algebra.ambient_dim:
            raise WorkspaceError(
                f"{path}.ambient_dim: declared {declared}, but the basis "
                f"matrices are {algebra.ambient_dim}x{algebra.ambient_dim}"
            )
    return algebra


def parse_workspace(text: str, label: str = "workspace") -> Workspace:
    """Parse and verify a workspace document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceError(
            f"{label}:{e.lineno}:{e.colno}: {e.msg}"
        ) from None
    doc = _expect_object(doc, label)
    for key in doc:
        if key not in _SECTIONS:
            raise WorkspaceError(
                f"{label}.{key}: unknown section (expected one of "
                f"{', '.join(_SECTIONS)})"
            )
    ws = Workspace()

    for name, node in _expect_object(
        doc.get("algebras", {}), f"{label}.algebras"
    ).items():
        ws.algebras[name] = _parse_algebra(
            name, node, f"{label}.algebras.{name}"
        )

    for name, node in _expect_object(
        doc.get("homomorphisms", {}), f"{label}.homomorphisms"
    ).items():
        path = f"{label}.homomorphisms.{name}"
        body = _expect_object(node, path)
        for key in body:
            if key not in ("source", "target", "matrix"):
                raise WorkspaceError(f"{path}.{key}: unknown field")
        for key in ("source", "target", "matrix"):
            if key not in body:
                raise WorkspaceError(f"{path}: missing required field {key!r}")
        refs = {}
        for key in ("source", "target"):
            ref = body[key]
            if not isinstance(ref, str) or ref not in ws.algebras:
                raise WorkspaceError(
                    f"{path}.{key}: unknown algebra {ref!r}"
                )
            refs[key] = ws.algebras[ref]
        matrix = _parse_matrix(body["matrix"], f"{path}.matrix")
        try:
            ws.homomorphisms[name] = Homomorphism(
                refs["source"], refs["target"], matrix, name=name
            )
        except (ValueError, BFredholmError) as e:
            raise WorkspaceError(f"{path}: {e}") from None

    for name, node in _expect_object(
        doc.get("elements", {}), f"{label}.elements"
    ).items():
        path = f"{label}.elements.{name}"
        body = _expect_object(node, path)
        for key in body:
            if key not in ("algebra", "coords"):
                raise WorkspaceError(f"{path}.{key}: unknown field")
        for key in ("algebra", "coords"):
            if key not in body:
                raise WorkspaceError(f"{path}: missing required field {key!r}")
        ref = body["algebra"]
        if not isinstance(ref, str) or ref not in ws.algebras:
            raise WorkspaceError(f"{path}.algebra: unknown algebra {ref!r}")
        algebra = ws.algebras[ref]
        coords = [
            parse_scalar(v, f"{path}.coords[{j}]")
            for j, v in enumerate(_expect_list(body["coords"], f"{path}.coords"))
        ]
        if len(coords) != algebra.dim:
            raise WorkspaceError(
                f"{path}.coords: {ref} has dimension {algebra.dim}, "
                f"got {len(coords)} coordinates"
            )
        ws.elements[name] = algebra.element(coords)

    for name, node in _expect_object(
        doc.get("diagonal_elements", {}), f"{label}.diagonal_elements"
    ).items():
        path = f"{label}.diagonal_elements.{name}"
        if not isinstance(node, str):
            raise WorkspaceError(f"{path}: expected a description string")
        ws.diagonal_elements[name] = parse_diagonal(node, label=path)

    return ws


def load_workspace(path: str) -> Workspace:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_workspace(text, label=path)


def serialize_workspace(ws: Workspace) -> str:
    """Canonical JSON text; parse-serialize round-trips are idempotent."""

    def matrix_doc(m: ExactMatrix):
        return [[v.literal() for v in row] for row in m.entries]

    doc: dict = {}
    if ws.algebras:
        doc["algebras"] = {
            name: {
                "ambient_dim": a.ambient_dim,
                "basis": [matrix_doc(b) for b in a.basis],
            }
            for name, a in ws.algebras.items()
        }
    if ws.homomorphisms:
        doc["homomorphisms"] = {
            name: {
                "source": ws.algebra_name(h.source),
                "target": ws.algebra_name(h.target),
                "matrix": matrix_doc(h.matrix),
            }
            for name, h in ws.homomorphisms.items()
        }
    if ws.elements:
        doc["elements"] = {
            name: {
                "algebra": ws.algebra_name(e.algebra),
                "coords": [c.literal() for c in e.coords],
            }
            for name, e in ws.elements.items()
        }
    if ws.diagonal_elements:
        doc["diagonal_elements"] = {
            name: render_diagonal(d) for name, d in ws.diagonal_elements.items()
        }
    return _emit(doc, 0) + "\n"


def _emit(node, depth: int) -> str:
    """JSON with scalar-only arrays inline, so matrices read row by row."""
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(node, dict):
        if not node:
            return "{}"
        rows = [
            f"{inner}{json.dumps(k)}: {_emit(v, depth + 1)}"
            for k, v in node.items()
        ]
        return "{\n" + ",\n".join(rows) + f"\n{pad}}}"
    if isinstance(node, list):
        if all(not isinstance(v, (dict, list)) for v in node):
            return json.dumps(node)
        rows = [f"{inner}{_emit(v, depth + 1)}" for v in node]
        return "[\n" + ",\n".join(rows) + f"\n{pad}]"
    return json.dumps(node)
