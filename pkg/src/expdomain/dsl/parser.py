"""Recursive-descent parsers for expressions, ``.exd`` documents and scenarios.

Operator precedence, tightest first: ``!``, ``&``, ``|``, ``->``.  ``&`` and
``|`` associate to the left, ``->`` to the right.
"""

from __future__ import annotations

from ..errors import DuplicateAtomDeclaration, DuplicateSection, SpecError, SpecSyntaxError, UndeclaredAtom
from .ast import And, Atom, Const, ContextSpec, Expr, Implies, Loc, Not, Or, Scenario, TestDecl, atoms_of
from .lexer import EOF_KIND, IDENT, INT, Token, tokenize

MAX_NESTING = 100

KEYWORDS = frozenset({"context", "atoms", "constraints", "basis", "actual", "true", "false"})
SECTIONS = ("atoms", "constraints", "basis", "actual")
_EXPR_START = frozenset({"!", "(", IDENT})


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def fail(self, expected: set[str] | frozenset[str], tok: Token | None = None):
        tok = tok or self.tok
        found = tok.kind if tok.kind in (EOF_KIND,) else repr(tok.text)
        raise SpecSyntaxError(f"unexpected {found}", tok.line, tok.column, frozenset(expected))

    def expect(self, kind: str, text: str | None = None) -> Token:
        tok = self.tok
        if tok.kind != kind or (text is not None and tok.text != text):
            self.fail({text if text is not None else kind})
        self.pos += 1
        return tok

    def accept(self, kind: str) -> Token | None:
        if self.tok.kind == kind:
            tok = self.tok
            self.pos += 1
            return tok
        return None

    def ident(self) -> Token:
        tok = self.expect(IDENT)
        if tok.text in KEYWORDS:
            raise SpecSyntaxError(f"reserved word {tok.text!r} used as a name", tok.line, tok.column,
                                  frozenset({IDENT}))
        return tok

    def _enter(self, tok: Token):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise SpecSyntaxError(f"expression nested deeper than {MAX_NESTING}", tok.line, tok.column)

    # expr := or ("->" expr)?
    def expr(self) -> Expr:
        start = self.tok
        self._enter(start)
        left = self.disjunction()
        if self.tok.kind == "->":
            arrow = self.tok
            self.pos += 1
            left = Implies(left, self.expr(), Loc(arrow.line, arrow.column))
        self.depth -= 1
        return left

    def disjunction(self) -> Expr:
        left = self.conjunction()
        while self.tok.kind == "|":
            op = self.tok
            self.pos += 1
            left = Or(left, self.conjunction(), Loc(op.line, op.column))
        return left

    def conjunction(self) -> Expr:
        left = self.unary()
        while self.tok.kind == "&":
            op = self.tok
            self.pos += 1
            left = And(left, self.unary(), Loc(op.line, op.column))
        return left

    def unary(self) -> Expr:
        tok = self.tok
        if tok.kind == "!":
            self.pos += 1
            self._enter(tok)
            child = self.unary()
            self.depth -= 1
            return Not(child, Loc(tok.line, tok.column))
        if tok.kind == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == IDENT:
            self.pos += 1
            loc = Loc(tok.line, tok.column)
            if tok.text == "true":
                return Const(True, loc)
            if tok.text == "false":
                return Const(False, loc)
            if tok.text in KEYWORDS:
                raise SpecSyntaxError(f"reserved word {tok.text!r} in expression", tok.line, tok.column,
                                      frozenset({IDENT, "true", "false", "!", "("}))
            return Atom(tok.text, loc)
        self.fail({IDENT, "true", "false", "!", "("})

    # document
    def document(self) -> ContextSpec:
        self.expect(IDENT, "context")
        name = self.ident().text
        self.expect("{")
        seen: dict[str, Token] = {}
        atoms: list[Token] = []
        constraints: list[Expr] = []
        basis: list[Expr] = []
        actual: list[tuple[Token, bool]] = []
        while self.tok.kind != "}":
            head = self.tok
            if head.kind != IDENT or head.text not in SECTIONS:
                self.fail(set(SECTIONS) | {"}"})
            if head.text in seen:
                raise DuplicateSection(f"section {head.text!r} appears twice", head.line, head.column)
            seen[head.text] = head
            self.pos += 1
            self.expect(":")
            if head.text == "atoms":
                atoms.append(self.ident())
                while self.accept(","):
                    atoms.append(self.ident())
                self.expect(";")
            elif head.text == "constraints":
                constraints.append(self.expr())
                self.expect(";")
                while self.tok.kind in _EXPR_START and not self._at_section():
                    constraints.append(self.expr())
                    self.expect(";")
            elif head.text == "basis":
                basis.append(self.expr())
                while self.accept(","):
                    basis.append(self.expr())
                self.expect(";")
            else:
                actual.append(self._binding())
                while self.accept(","):
                    actual.append(self._binding())
                self.expect(";")
        close = self.expect("}")
        self.expect(EOF_KIND)
        if "atoms" not in seen:
            raise SpecSyntaxError("missing atoms section", close.line, close.column, frozenset({"atoms"}))

        declared: set[str] = set()
        for tok in atoms:
            if tok.text in declared:
                raise DuplicateAtomDeclaration(f"atom {tok.text!r} declared twice", tok.line, tok.column)
            declared.add(tok.text)
        for tree in constraints + basis:
            for atom in atoms_of(tree):
                if atom.name not in declared:
                    raise UndeclaredAtom(atom.name, atom.loc.line, atom.loc.column)
        bound: set[str] = set()
        for tok, _ in actual:
            if tok.text not in declared:
                raise UndeclaredAtom(tok.text, tok.line, tok.column)
            if tok.text in bound:
                raise SpecError(f"atom {tok.text!r} assigned twice", tok.line, tok.column)
            bound.add(tok.text)
        return ContextSpec(
            name=name,
            atoms=tuple(t.text for t in atoms),
            constraints=tuple(constraints),
            basis=tuple(basis),
            actual=tuple((t.text, v) for t, v in actual),
        )

    def _at_section(self) -> bool:
        return self.tok.kind == IDENT and self.tok.text in SECTIONS and self.peek().kind == ":"

    def _binding(self) -> tuple[Token, bool]:
        name = self.ident()
        self.expect("=")
        value = self.tok
        if value.kind != IDENT or value.text not in ("T", "F"):
            self.fail({"T", "F"})
        self.pos += 1
        return name, value.text == "T"

    # scenario
    def scenario(self) -> Scenario:
        tests: list[TestDecl] = []
        names: dict[str, Token] = {}
        goal: tuple[Token, list[Token]] | None = None
        budget: int | None = None
        while self.tok.kind != EOF_KIND:
            head = self.tok
            if head.kind != IDENT or head.text not in ("test", "goal", "budget"):
                self.fail({"test", "goal", "budget", EOF_KIND})
            self.pos += 1
            if head.text == "test":
                name = self.expect(IDENT)
                if name.text in names:
                    raise SpecError(f"test {name.text!r} declared twice", name.line, name.column)
                names[name.text] = name
                kind = self.tok
                if kind.kind == IDENT and kind.text == "diverges":
                    self.pos += 1
                    tests.append(TestDecl(name.text, None))
                elif kind.kind == IDENT and kind.text == "terminates_at":
                    self.pos += 1
                    steps = self.expect(INT)
                    if int(steps.text) < 1:
                        raise SpecError("terminates_at needs a positive step count", steps.line, steps.column)
                    tests.append(TestDecl(name.text, int(steps.text)))
                else:
                    self.fail({"diverges", "terminates_at"})
                self.expect(";")
            elif head.text == "goal":
                if goal is not None:
                    raise DuplicateSection("goal declared twice", head.line, head.column)
                combinator = self.tok
                if combinator.kind != IDENT or combinator.text not in ("conj", "dovetail"):
                    self.fail({"conj", "dovetail"})
                self.pos += 1
                self.expect("(")
                operands = []
                if self.tok.kind != ")":
                    operands.append(self.expect(IDENT))
                    while self.accept(","):
                        operands.append(self.expect(IDENT))
                self.expect(")")
                self.expect(";")
                goal = (combinator, operands)
            else:
                if budget is not None:
                    raise DuplicateSection("budget declared twice", head.line, head.column)
                budget = int(self.expect(INT).text)
                self.expect(";")
        if goal is None:
            raise SpecSyntaxError("missing goal", self.tok.line, self.tok.column, frozenset({"goal"}))
        for op in goal[1]:
            if op.text not in names:
                raise SpecError(f"unknown test {op.text!r}", op.line, op.column)
        return Scenario(
            tests=tuple(tests),
            goal=goal[0].text,
            operands=tuple(op.text for op in goal[1]),
            budget=1_000_000 if budget is None else budget,
        )


def _decode(data: str | bytes) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        prefix = data[: exc.start]
        line = prefix.count(b"\n") + 1
        column = exc.start - (prefix.rfind(b"\n") + 1) + 1
        raise SpecSyntaxError("input is not valid UTF-8", line, column) from None


def parse_expr(text: str | bytes) -> Expr:
    """Parse a single statement expression such as ``"a -> b | c"``."""
    parser = _Parser(_decode(text))
    tree = parser.expr()
    parser.expect(EOF_KIND)
    return tree


def parse_spec(text: str | bytes) -> ContextSpec:
    """Parse a ``.exd`` document.

    Raises :class:`SpecSyntaxError`, :class:`UndeclaredAtom` or
    :class:`DuplicateSection`; all of them carry ``line`` and ``column``.
    """
    return _Parser(_decode(text)).document()


def parse_scenario(text: str | bytes) -> Scenario:
    return _Parser(_decode(text)).scenario()
