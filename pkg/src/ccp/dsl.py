"""The .ccp module language: parser, resolver, and canonical printer.

A module is a flat list of declarations:

    alphabet A = {a,b}
    process P : A = {a} -> STOP | {b} -> ({a} -> STOP)
    process CLK = mu X . {tick} -> X
    spec OK = tr in A* and #tr <= 4
    check P sat OK depth 6
    check CLK eq CLK depth 4

Whitespace is insignificant between tokens.  A `#` followed by whitespace or
end of line opens a comment; `#` glued to a trace expression is the length
operator.  References to other processes are inlined at resolution time;
reference cycles become guarded recursion binders, so mutual recursion is
expressible.  A process without an alphabet annotation gets the union of all
guard sets reachable through its references.

Parsing recovers at declaration keywords, so one pass reports every broken
declaration.  `parse_module` raises `DslParseError` carrying the full list.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Union

from . import predicates as pr
from .errors import CcpError, DomainError, ShapeError
from .process import (
    Menu,
    Mu,
    Par,
    Prefix,
    Process,
    Run,
    Stop,
    Var,
    validate,
)
from .traces import (
    TICK,
    Alphabet,
    EventSet,
    Trace,
    TraceElement,
)

# ---------------------------------------------------------------------------
# errors


@dataclass(frozen=True, slots=True)
class ParseError:
    line: int
    col: int
    expected: str
    found: str

    def __str__(self) -> str:
        return f"{self.line}:{self.col}: expected {self.expected}, found {self.found}"


class DslParseError(CcpError):
    def __init__(self, errors: Iterable[ParseError]):
        self.errors = list(errors)
        super().__init__("\n".join(str(e) for e in self.errors))


# ---------------------------------------------------------------------------
# lexer

KEYWORDS = {
    "alphabet", "process", "spec", "check", "sat", "eq", "depth", "mu",
    "STOP", "RUN", "true", "false", "not", "and", "or", "in", "tr", "tail",
    "head",
}

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<comment>\#(?=\s|\Z)[^\n]*)
    | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    | (?P<nat>[0-9]+)
    | (?P<tick>✓|\^OK)
    | (?P<op>\|\||->|=>|<=|>=|[{}<>()\[\],.=|*:\#])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # NAME | NAT | KEYWORD | TICK | OP | EOF
    text: str
    line: int
    col: int

    def describe(self) -> str:
        if self.kind == "EOF":
            return "end of input"
        return f"'{self.text}'"


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            snippet = text[pos]
            raise DslParseError([ParseError(line, col, "a token", f"'{snippet}'")])
        lexeme = m.group(0)
        kind = m.lastgroup
        if kind == "name":
            tok_kind = "KEYWORD" if lexeme in KEYWORDS else "NAME"
            tokens.append(Token(tok_kind, lexeme, line, col))
        elif kind == "nat":
            tokens.append(Token("NAT", lexeme, line, col))
        elif kind == "tick":
            tokens.append(Token("TICK", TICK, line, col))
        elif kind == "op":
            tokens.append(Token("OP", lexeme, line, col))
        newlines = lexeme.count("\n")
        if newlines:
            line += newlines
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# surface syntax trees (positions never participate in equality)


@dataclass(frozen=True, slots=True)
class Pos:
    line: int = field(compare=False, default=1)
    col: int = field(compare=False, default=1)


@dataclass(frozen=True, slots=True)
class PStop:
    pass


@dataclass(frozen=True, slots=True)
class PRun:
    pass


@dataclass(frozen=True, slots=True)
class PRef:
    name: str


@dataclass(frozen=True, slots=True)
class PPrefix:
    guard: tuple[str, ...]
    body: "PExpr"


@dataclass(frozen=True, slots=True)
class PChoice:
    branches: tuple[tuple[tuple[str, ...], "PExpr"], ...]


@dataclass(frozen=True, slots=True)
class PMu:
    name: str
    body: "PExpr"


@dataclass(frozen=True, slots=True)
class PPar:
    left: "PExpr"
    right: "PExpr"


PExpr = Union[PStop, PRun, PRef, PPrefix, PChoice, PMu, PPar]


@dataclass(frozen=True, slots=True)
class SetRef:
    name: str


@dataclass(frozen=True, slots=True)
class SetLit:
    events: tuple[str, ...]


SetExpr = Union[SetRef, SetLit]


@dataclass(frozen=True, slots=True)
class STraceVar:
    pass


@dataclass(frozen=True, slots=True)
class SLit:
    value: Trace


@dataclass(frozen=True, slots=True)
class STail:
    inner: "STraceExpr"


@dataclass(frozen=True, slots=True)
class SRestrict:
    inner: "STraceExpr"
    alphabet: SetExpr


STraceExpr = Union[STraceVar, SLit, STail, SRestrict]


@dataclass(frozen=True, slots=True)
class SConst:
    value: bool


@dataclass(frozen=True, slots=True)
class SNot:
    inner: "SPred"


@dataclass(frozen=True, slots=True)
class SAnd:
    left: "SPred"
    right: "SPred"


@dataclass(frozen=True, slots=True)
class SOr:
    left: "SPred"
    right: "SPred"


@dataclass(frozen=True, slots=True)
class SImplies:
    left: "SPred"
    right: "SPred"


@dataclass(frozen=True, slots=True)
class STraceEquals:
    left: STraceExpr
    right: STraceExpr


@dataclass(frozen=True, slots=True)
class SPrefixOf:
    left: STraceExpr
    right: STraceExpr


@dataclass(frozen=True, slots=True)
class SInStar:
    expr: STraceExpr
    alphabet: SetExpr


@dataclass(frozen=True, slots=True)
class SHeadIs:
    expr: STraceExpr
    value: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class SSubscriptIs:
    expr: STraceExpr
    index: int
    value: tuple[str, ...]


@dataclass(frozen=True, slots=True)
class SLengthCmp:
    expr: STraceExpr
    op: str
    bound: int


SPred = Union[
    SConst, SNot, SAnd, SOr, SImplies, STraceEquals, SPrefixOf, SInStar,
    SHeadIs, SSubscriptIs, SLengthCmp,
]


@dataclass(frozen=True, slots=True)
class AlphaDecl:
    name: str
    events: tuple[str, ...]
    pos: Pos = field(compare=False, default=Pos())


@dataclass(frozen=True, slots=True)
class ProcDecl:
    name: str
    alphabet_name: str | None
    expr: PExpr
    pos: Pos = field(compare=False, default=Pos())


@dataclass(frozen=True, slots=True)
class SpecDecl:
    name: str
    expr: SPred
    pos: Pos = field(compare=False, default=Pos())


@dataclass(frozen=True, slots=True)
class CheckDecl:
    kind: str  # "sat" | "eq"
    left: str
    right: str
    depth: int | None
    pos: Pos = field(compare=False, default=Pos())


Decl = Union[AlphaDecl, ProcDecl, SpecDecl, CheckDecl]


@dataclass
class ModuleSource:
    """Parsed declarations plus their resolved, validated artifacts."""

    decls: tuple[Decl, ...]
    alphabets: dict[str, Alphabet] = field(default_factory=dict, compare=False)
    processes: dict[str, Process] = field(default_factory=dict, compare=False)
    specs: dict[str, "pr.TracePredicate"] = field(default_factory=dict, compare=False)
    checks: tuple[CheckDecl, ...] = field(default=(), compare=False)


# ---------------------------------------------------------------------------
# parser


class _Fail(Exception):
    def __init__(self, error: ParseError):
        self.error = error


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    # -- token plumbing

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def at_op(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text == text

    def at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "KEYWORD" and tok.text == word

    def fail(self, expected: str) -> "_Fail":
        tok = self.peek()
        return _Fail(ParseError(tok.line, tok.col, expected, tok.describe()))

    def expect_op(self, text: str) -> Token:
        if not self.at_op(text):
            raise self.fail(f"'{text}'")
        return self.advance()

    def expect_keyword(self, word: str) -> Token:
        if not self.at_keyword(word):
            raise self.fail(f"'{word}'")
        return self.advance()

    def expect_name(self, what: str = "a name") -> Token:
        tok = self.peek()
        if tok.kind != "NAME":
            raise self.fail(what)
        return self.advance()

    def expect_nat(self) -> int:
        tok = self.peek()
        if tok.kind != "NAT":
            raise self.fail("a number")
        self.advance()
        return int(tok.text)

    # -- shared literals

    def parse_event_set(self, allow_tick: bool) -> tuple[str, ...]:
        self.expect_op("{")
        names: list[str] = []
        while True:
            tok = self.peek()
            if tok.kind == "NAME":
                names.append(tok.text)
                self.advance()
            elif tok.kind == "TICK":
                if not allow_tick:
                    raise self.fail("an event name (the ✓ mark is reserved for traces)")
                names.append(TICK)
                self.advance()
            else:
                raise self.fail("an event name")
            if self.at_op(","):
                self.advance()
                continue
            break
        self.expect_op("}")
        return tuple(sorted(set(names)))

    def parse_trace_literal(self) -> Trace:
        opening = self.peek()
        self.expect_op("<")
        elements: list[TraceElement] = []
        if self.at_op(">"):
            self.advance()
            return Trace(())
        while True:
            labels = EventSet(self.parse_event_set(allow_tick=True))
            payload = None
            if self.at_op("."):
                self.advance()
                payload = EventSet(self.parse_event_set(allow_tick=True))
            elements.append(TraceElement(labels, payload))
            if self.at_op(","):
                self.advance()
                continue
            break
        self.expect_op(">")
        try:
            return Trace(tuple(elements))
        except (ShapeError, DomainError) as exc:
            raise _Fail(
                ParseError(opening.line, opening.col, "a well-formed trace", str(exc))
            ) from None

    # -- process expressions
    # precedence: '->' binds tighter than '|' binds tighter than '||';
    # a bare 'mu' consumes everything to its right.

    def parse_pexpr(self) -> PExpr:
        return self.parse_par()

    def parse_par(self) -> PExpr:
        left = self.parse_choice()
        while self.at_op("||"):
            self.advance()
            right = self.parse_choice()
            left = PPar(left, right)
        return left

    def parse_choice(self) -> PExpr:
        first_tok = self.peek()
        first = self.parse_prefix()
        if not self.at_op("|"):
            return first
        branches = [self.as_branch(first, first_tok)]
        while self.at_op("|"):
            self.advance()
            tok = self.peek()
            nxt = self.parse_prefix()
            branches.append(self.as_branch(nxt, tok))
        flat: list[tuple[tuple[str, ...], PExpr]] = []
        for chunk in branches:
            flat.extend(chunk)
        return PChoice(tuple(flat))

    def as_branch(
        self, expr: PExpr, tok: Token
    ) -> list[tuple[tuple[str, ...], PExpr]]:
        if isinstance(expr, PPrefix):
            return [(expr.guard, expr.body)]
        if isinstance(expr, PChoice):
            return list(expr.branches)
        raise _Fail(
            ParseError(
                tok.line,
                tok.col,
                "a guarded branch (eventset -> process)",
                tok.describe(),
            )
        )

    def parse_prefix(self) -> PExpr:
        if self.at_op("{"):
            guard = self.parse_event_set(allow_tick=False)
            self.expect_op("->")
            return PPrefix(guard, self.parse_prefix())
        return self.parse_primary()

    def parse_primary(self) -> PExpr:
        if self.at_keyword("STOP"):
            self.advance()
            return PStop()
        if self.at_keyword("RUN"):
            self.advance()
            return PRun()
        if self.at_keyword("mu"):
            self.advance()
            name = self.expect_name("a recursion variable").text
            self.expect_op(".")
            return PMu(name, self.parse_pexpr())
        if self.peek().kind == "NAME":
            return PRef(self.advance().text)
        if self.at_op("("):
            self.advance()
            inner = self.parse_pexpr()
            self.expect_op(")")
            return inner
        raise self.fail("a process expression")

    # -- spec expressions

    def parse_spred(self) -> SPred:
        left = self.parse_sor()
        if self.at_op("=>"):
            self.advance()
            return SImplies(left, self.parse_spred())
        return left

    def parse_sor(self) -> SPred:
        left = self.parse_sand()
        while self.at_keyword("or"):
            self.advance()
            left = SOr(left, self.parse_sand())
        return left

    def parse_sand(self) -> SPred:
        left = self.parse_sunary()
        while self.at_keyword("and"):
            self.advance()
            left = SAnd(left, self.parse_sunary())
        return left

    def parse_sunary(self) -> SPred:
        if self.at_keyword("not"):
            self.advance()
            return SNot(self.parse_sunary())
        if self.at_op("("):
            self.advance()
            inner = self.parse_spred()
            self.expect_op(")")
            return inner
        return self.parse_satom()

    def parse_satom(self) -> SPred:
        if self.at_keyword("true"):
            self.advance()
            return SConst(True)
        if self.at_keyword("false"):
            self.advance()
            return SConst(False)
        if self.at_op("#"):
            self.advance()
            expr = self.parse_stexpr()
            op_tok = self.peek()
            if op_tok.kind == "OP" and op_tok.text in ("=", "<=", ">=", "<", ">"):
                self.advance()
                return SLengthCmp(expr, op_tok.text, self.expect_nat())
            raise self.fail("a length comparison (=, <=, >=, < or >)")
        if self.at_keyword("head"):
            self.advance()
            self.expect_op("(")
            expr = self.parse_stexpr()
            self.expect_op(")")
            self.expect_op("=")
            return SHeadIs(expr, self.parse_event_set(allow_tick=True))
        expr = self.parse_stexpr()
        if self.at_op("["):
            self.advance()
            index = self.expect_nat()
            self.expect_op("]")
            self.expect_op("=")
            return SSubscriptIs(expr, index, self.parse_event_set(allow_tick=True))
        if self.at_op("="):
            self.advance()
            return STraceEquals(expr, self.parse_stexpr())
        if self.at_op("<="):
            self.advance()
            return SPrefixOf(expr, self.parse_stexpr())
        if self.at_op(">="):
            self.advance()
            return SPrefixOf(self.parse_stexpr(), expr)
        if self.at_keyword("in"):
            self.advance()
            setexpr = self.parse_setexpr()
            self.expect_op("*")
            return SInStar(expr, setexpr)
        raise self.fail("a comparison (=, <=, >=, in or [i] =)")

    def parse_stexpr(self) -> STraceExpr:
        expr = self.parse_stprimary()
        while self.at_op("|"):
            self.advance()
            expr = SRestrict(expr, self.parse_setexpr())
        return expr

    def parse_stprimary(self) -> STraceExpr:
        if self.at_keyword("tr"):
            self.advance()
            return STraceVar()
        if self.at_keyword("tail"):
            self.advance()
            self.expect_op("(")
            inner = self.parse_stexpr()
            self.expect_op(")")
            return STail(inner)
        if self.at_op("<"):
            return SLit(self.parse_trace_literal())
        raise self.fail("a trace expression (tr, tail(...) or a trace literal)")

    def parse_setexpr(self) -> SetExpr:
        if self.peek().kind == "NAME":
            return SetRef(self.advance().text)
        if self.at_op("{"):
            return SetLit(self.parse_event_set(allow_tick=False))
        raise self.fail("an alphabet name or event-set literal")

    # -- declarations

    def parse_decl(self) -> Decl:
        tok = self.peek()
        pos = Pos(tok.line, tok.col)
        if self.at_keyword("alphabet"):
            self.advance()
            name = self.expect_name("an alphabet name").text
            self.expect_op("=")
            return AlphaDecl(name, self.parse_event_set(allow_tick=False), pos)
        if self.at_keyword("process"):
            self.advance()
            name = self.expect_name("a process name").text
            alpha = None
            if self.at_op(":"):
                self.advance()
                alpha = self.expect_name("an alphabet name").text
            self.expect_op("=")
            return ProcDecl(name, alpha, self.parse_pexpr(), pos)
        if self.at_keyword("spec"):
            self.advance()
            name = self.expect_name("a spec name").text
            self.expect_op("=")
            return SpecDecl(name, self.parse_spred(), pos)
        if self.at_keyword("check"):
            self.advance()
            left = self.expect_name("a process name").text
            if self.at_keyword("sat"):
                kind = "sat"
            elif self.at_keyword("eq"):
                kind = "eq"
            else:
                raise self.fail("'sat' or 'eq'")
            self.advance()
            right = self.expect_name(
                "a spec name" if kind == "sat" else "a process name"
            ).text
            depth = None
            if self.at_keyword("depth"):
                self.advance()
                depth = self.expect_nat()
            return CheckDecl(kind, left, right, depth, pos)
        raise self.fail("a declaration (alphabet, process, spec or check)")

    def synchronize(self, progressed: bool) -> None:
        """Panic-mode recovery: skip to the next declaration keyword.  When the
        failing token already is one, resume there (the previous declaration
        was truncated)."""
        if not progressed:
            self.advance()
        while True:
            tok = self.peek()
            if tok.kind == "EOF":
                return
            if tok.kind == "KEYWORD" and tok.text in (
                "alphabet",
                "process",
                "spec",
                "check",
            ):
                return
            self.advance()

    def parse_module(self) -> tuple[list[Decl], list[ParseError]]:
        decls: list[Decl] = []
        errors: list[ParseError] = []
        while self.peek().kind != "EOF":
            start = self.i
            try:
                decls.append(self.parse_decl())
            except _Fail as fail:
                errors.append(fail.error)
                self.synchronize(progressed=self.i > start)
        return decls, errors


# ---------------------------------------------------------------------------
# resolution


class _Resolver:
    def __init__(self, decls: list[Decl]):
        self.decls = decls
        self.errors: list[ParseError] = []
        self.alpha_decls: dict[str, AlphaDecl] = {}
        self.proc_decls: dict[str, ProcDecl] = {}
        self.spec_decls: dict[str, SpecDecl] = {}
        self.alphabets: dict[str, Alphabet] = {}
        self.proc_alpha: dict[str, Alphabet] = {}
        self.processes: dict[str, Process] = {}
        self.specs: dict[str, pr.TracePredicate] = {}
        self.checks: list[CheckDecl] = []

    def error(self, pos: Pos, expected: str, found: str) -> None:
        self.errors.append(ParseError(pos.line, pos.col, expected, found))

    def run(self) -> None:
        self.collect_names()
        self.infer_alphabets()
        for decl in self.decls:
            if isinstance(decl, ProcDecl) and decl.name in self.proc_alpha:
                self.resolve_process_decl(decl)
        for decl in self.decls:
            if isinstance(decl, SpecDecl) and decl.name in self.spec_decls:
                resolved = self.resolve_spred(decl.expr, decl.pos)
                if resolved is not None:
                    self.specs[decl.name] = resolved
        for decl in self.decls:
            if isinstance(decl, CheckDecl):
                self.resolve_check(decl)

    def collect_names(self) -> None:
        for decl in self.decls:
            if isinstance(decl, AlphaDecl):
                if decl.name in self.alpha_decls:
                    self.error(decl.pos, "a fresh alphabet name", f"duplicate '{decl.name}'")
                    continue
                self.alpha_decls[decl.name] = decl
                self.alphabets[decl.name] = Alphabet.of(*decl.events)
            elif isinstance(decl, ProcDecl):
                if decl.name in self.proc_decls:
                    self.error(decl.pos, "a fresh process name", f"duplicate '{decl.name}'")
                    continue
                self.proc_decls[decl.name] = decl
            elif isinstance(decl, SpecDecl):
                if decl.name in self.spec_decls:
                    self.error(decl.pos, "a fresh spec name", f"duplicate '{decl.name}'")
                    continue
                self.spec_decls[decl.name] = decl

    # -- alphabets: declared annotation wins; otherwise the union of all
    # guard sets reachable through references, computed as a fixpoint.

    def infer_alphabets(self) -> None:
        own: dict[str, set[str]] = {}
        refs: dict[str, set[str]] = {}
        for name, decl in self.proc_decls.items():
            guards: set[str] = set()
            seen_refs: set[str] = set()
            self.scan_expr(decl.expr, set(), guards, seen_refs)
            own[name] = guards
            refs[name] = {r for r in seen_refs if r in self.proc_decls}
        declared: dict[str, Alphabet] = {}
        for name, decl in self.proc_decls.items():
            if decl.alphabet_name is not None:
                alpha = self.alphabets.get(decl.alphabet_name)
                if alpha is None:
                    self.error(
                        decl.pos,
                        "a declared alphabet name",
                        f"unknown '{decl.alphabet_name}'",
                    )
                    continue
                declared[name] = alpha
        current: dict[str, set[str]] = {
            name: set(declared[name].events) if name in declared else set(own[name])
            for name in self.proc_decls
        }
        for _ in range(len(self.proc_decls) + 1):
            changed = False
            for name in self.proc_decls:
                if name in declared:
                    continue
                union = set(own[name])
                for ref in refs[name]:
                    union |= current.get(ref, set())
                if union != current[name]:
                    current[name] = union
                    changed = True
            if not changed:
                break
        for name, decl in self.proc_decls.items():
            if decl.alphabet_name is not None and name not in declared:
                continue  # unknown annotation already reported
            self.proc_alpha[name] = (
                declared[name]
                if name in declared
                else Alphabet.from_iterable(current[name])
            )

    def scan_expr(
        self, expr: PExpr, mu_scope: set[str], guards: set[str], refs: set[str]
    ) -> None:
        match expr:
            case PStop() | PRun():
                return
            case PRef(name):
                if name not in mu_scope:
                    refs.add(name)
            case PPrefix(guard, body):
                guards.update(guard)
                self.scan_expr(body, mu_scope, guards, refs)
            case PChoice(branches):
                for guard, body in branches:
                    guards.update(guard)
                    self.scan_expr(body, mu_scope, guards, refs)
            case PMu(name, body):
                self.scan_expr(body, mu_scope | {name}, guards, refs)
            case PPar(left, right):
                self.scan_expr(left, mu_scope, guards, refs)
                self.scan_expr(right, mu_scope, guards, refs)

    # -- processes: references inline; reference cycles become recursion
    # binders named after the declaration they close.  A reference to an
    # annotated process keeps its declared alphabet; a reference to an
    # unannotated one is a textual abbreviation expanded in the host's
    # alphabet context.

    def resolve_process_decl(self, decl: ProcDecl) -> None:
        needs_mu: set[str] = set()
        try:
            resolved = self.resolve_ref(decl.name, [], needs_mu, decl.pos)
        except _Fail as fail:
            self.errors.append(fail.error)
            return
        violations = validate(resolved)
        if violations:
            for v in violations:
                self.error(decl.pos, f"a valid process '{decl.name}'", str(v))
            return
        self.processes[decl.name] = resolved

    def resolve_ref(
        self, name: str, stack: list[str], needs_mu: set[str], pos: Pos
    ) -> Process:
        decl = self.proc_decls[name]
        alpha = self.proc_alpha[name]
        resolved = self.resolve_expr(
            alpha, decl.expr, set(), stack + [name], needs_mu, pos
        )
        if name in needs_mu:
            needs_mu.discard(name)
            resolved = Mu(name, alpha, resolved)
        return resolved

    def resolve_expr(
        self,
        host_alpha: Alphabet,
        expr: PExpr,
        mu_scope: set[str],
        stack: list[str],
        needs_mu: set[str],
        pos: Pos,
    ) -> Process:
        match expr:
            case PStop():
                return Stop(host_alpha)
            case PRun():
                return Run(host_alpha)
            case PRef(name):
                if name in mu_scope:
                    return Var(name)
                if name in stack:
                    needs_mu.add(name)
                    return Var(name)
                refdecl = self.proc_decls.get(name)
                if refdecl is None:
                    raise _Fail(
                        ParseError(pos.line, pos.col, "a known process name", f"'{name}'")
                    )
                if refdecl.alphabet_name is not None:
                    return self.resolve_ref(name, stack, needs_mu, pos)
                body = self.resolve_expr(
                    host_alpha, refdecl.expr, set(), stack + [name], needs_mu, pos
                )
                if name in needs_mu:
                    needs_mu.discard(name)
                    body = Mu(name, host_alpha, body)
                return body
            case PPrefix(guard, body):
                return Prefix(
                    EventSet(guard),
                    self.resolve_expr(host_alpha, body, mu_scope, stack, needs_mu, pos),
                )
            case PChoice(branches):
                return Menu(
                    tuple(
                        (
                            EventSet(guard),
                            self.resolve_expr(
                                host_alpha, body, mu_scope, stack, needs_mu, pos
                            ),
                        )
                        for guard, body in branches
                    )
                )
            case PMu(name, body):
                return Mu(
                    name,
                    host_alpha,
                    self.resolve_expr(
                        host_alpha, body, mu_scope | {name}, stack, needs_mu, pos
                    ),
                )
            case PPar(left, right):
                return Par(
                    self.resolve_expr(host_alpha, left, mu_scope, stack, needs_mu, pos),
                    self.resolve_expr(host_alpha, right, mu_scope, stack, needs_mu, pos),
                )
        raise TypeError(f"not a surface process expression: {expr!r}")

    # -- specs

    def resolve_set(self, setexpr: SetExpr, pos: Pos) -> Alphabet | None:
        if isinstance(setexpr, SetRef):
            alpha = self.alphabets.get(setexpr.name)
            if alpha is None:
                self.error(pos, "a declared alphabet name", f"unknown '{setexpr.name}'")
                return None
            return alpha
        return Alphabet.of(*setexpr.events)

    def resolve_stexpr(self, expr: STraceExpr, pos: Pos) -> pr.TraceExpr | None:
        match expr:
            case STraceVar():
                return pr.TraceVar()
            case SLit(value):
                return pr.Lit(value)
            case STail(inner):
                resolved = self.resolve_stexpr(inner, pos)
                return None if resolved is None else pr.Tail(resolved)
            case SRestrict(inner, setexpr):
                resolved = self.resolve_stexpr(inner, pos)
                alpha = self.resolve_set(setexpr, pos)
                if resolved is None or alpha is None:
                    return None
                return pr.Restrict(resolved, alpha)
        raise TypeError(f"not a surface trace expression: {expr!r}")

    def resolve_spred(self, expr: SPred, pos: Pos) -> pr.TracePredicate | None:
        match expr:
            case SConst(value):
                return pr.Const(value)
            case SNot(inner):
                resolved = self.resolve_spred(inner, pos)
                return None if resolved is None else pr.Not(resolved)
            case SAnd(left, right):
                lhs, rhs = self.resolve_spred(left, pos), self.resolve_spred(right, pos)
                return None if lhs is None or rhs is None else pr.And(lhs, rhs)
            case SOr(left, right):
                lhs, rhs = self.resolve_spred(left, pos), self.resolve_spred(right, pos)
                return None if lhs is None or rhs is None else pr.Or(lhs, rhs)
            case SImplies(left, right):
                lhs, rhs = self.resolve_spred(left, pos), self.resolve_spred(right, pos)
                return None if lhs is None or rhs is None else pr.Implies(lhs, rhs)
            case STraceEquals(left, right):
                lhs, rhs = self.resolve_stexpr(left, pos), self.resolve_stexpr(right, pos)
                return None if lhs is None or rhs is None else pr.TraceEquals(lhs, rhs)
            case SPrefixOf(left, right):
                lhs, rhs = self.resolve_stexpr(left, pos), self.resolve_stexpr(right, pos)
                return None if lhs is None or rhs is None else pr.PrefixOf(lhs, rhs)
            case SInStar(inner, setexpr):
                resolved = self.resolve_stexpr(inner, pos)
                alpha = self.resolve_set(setexpr, pos)
                if resolved is None or alpha is None:
                    return None
                return pr.InStar(resolved, alpha)
            case SHeadIs(inner, value):
                resolved = self.resolve_stexpr(inner, pos)
                return None if resolved is None else pr.HeadIs(resolved, EventSet(value))
            case SSubscriptIs(inner, index, value):
                resolved = self.resolve_stexpr(inner, pos)
                if resolved is None:
                    return None
                return pr.SubscriptIs(resolved, index, EventSet(value))
            case SLengthCmp(inner, op, bound):
                resolved = self.resolve_stexpr(inner, pos)
                return None if resolved is None else pr.LengthCmp(resolved, op, bound)
        raise TypeError(f"not a surface predicate: {expr!r}")

    # -- checks

    def resolve_check(self, decl: CheckDecl) -> None:
        ok = True
        if decl.left not in self.proc_decls:
            self.error(decl.pos, "a known process name", f"'{decl.left}'")
            ok = False
        if decl.kind == "sat":
            if decl.right not in self.spec_decls:
                self.error(decl.pos, "a known spec name", f"'{decl.right}'")
                ok = False
        elif decl.right not in self.proc_decls:
            self.error(decl.pos, "a known process name", f"'{decl.right}'")
            ok = False
        if ok:
            self.checks.append(decl)


# ---------------------------------------------------------------------------
# public API


def parse_module(text: str) -> ModuleSource:
    """Parse and resolve a module; raise DslParseError with every recovered
    error if anything is wrong."""
    tokens = tokenize(text)
    parser = _Parser(tokens)
    decls, errors = parser.parse_module()
    resolver = _Resolver(decls)
    resolver.run()
    errors.extend(resolver.errors)
    if errors:
        raise DslParseError(sorted(errors, key=lambda e: (e.line, e.col)))
    return ModuleSource(
        decls=tuple(decls),
        alphabets=resolver.alphabets,
        processes=resolver.processes,
        specs=resolver.specs,
        checks=tuple(resolver.checks),
    )


def _parse_single(text: str, what: str):
    tokens = tokenize(text)
    parser = _Parser(tokens)
    try:
        if what == "eventset":
            value = EventSet(parser.parse_event_set(allow_tick=True))
        else:
            value = parser.parse_trace_literal()
    except _Fail as fail:
        raise DslParseError([fail.error]) from None
    tok = parser.peek()
    if tok.kind != "EOF":
        raise DslParseError(
            [ParseError(tok.line, tok.col, "end of input", tok.describe())]
        )
    return value


def parse_event_set(text: str) -> EventSet:
    """Parse a single event-set literal such as '{a,b}'."""
    return _parse_single(text, "eventset")


def parse_trace(text: str) -> Trace:
    """Parse a single trace literal such as '<{a},{b,c}>' or '<>'."""
    return _parse_single(text, "trace")


# ---------------------------------------------------------------------------
# printing (canonical form; parse . print is the identity up to positions)

_PREC_PAR = 1
_PREC_CHOICE = 2
_PREC_PREFIX = 3


def _fmt_guard(guard: tuple[str, ...]) -> str:
    return "{" + ",".join(guard) + "}"


def _fmt_pexpr(expr: PExpr, prec: int) -> str:
    match expr:
        case PStop():
            return "STOP"
        case PRun():
            return "RUN"
        case PRef(name):
            return name
        case PMu(name, body):
            text = f"mu {name} . {_fmt_pexpr(body, 0)}"
            return f"({text})" if prec > 0 else text
        case PPrefix(guard, body):
            text = f"{_fmt_guard(guard)} -> {_fmt_pexpr(body, _PREC_PREFIX)}"
            return f"({text})" if prec > _PREC_PREFIX else text
        case PChoice(branches):
            text = " | ".join(
                f"{_fmt_guard(guard)} -> {_fmt_pexpr(body, _PREC_PREFIX)}"
                for guard, body in branches
            )
            return f"({text})" if prec > _PREC_CHOICE else text
        case PPar(left, right):
            text = f"{_fmt_pexpr(left, _PREC_PAR)} || {_fmt_pexpr(right, _PREC_PAR + 1)}"
            return f"({text})" if prec > _PREC_PAR else text
    raise TypeError(f"not a surface process expression: {expr!r}")


def _fmt_set(setexpr: SetExpr) -> str:
    if isinstance(setexpr, SetRef):
        return setexpr.name
    return _fmt_guard(setexpr.events)


def _fmt_stexpr(expr: STraceExpr) -> str:
    from .traces import format_trace

    match expr:
        case STraceVar():
            return "tr"
        case SLit(value):
            return format_trace(value)
        case STail(inner):
            return f"tail({_fmt_stexpr(inner)})"
        case SRestrict(inner, setexpr):
            return f"{_fmt_stexpr(inner)} | {_fmt_set(setexpr)}"
    raise TypeError(f"not a surface trace expression: {expr!r}")


_SPREC_OR = 1
_SPREC_AND = 2
_SPREC_NOT = 3


def _fmt_spred(expr: SPred, prec: int) -> str:
    match expr:
        case SConst(value):
            return "true" if value else "false"
        case SImplies(left, right):
            text = f"{_fmt_spred(left, 1)} => {_fmt_spred(right, 0)}"
            return f"({text})" if prec > 0 else text
        case SOr(left, right):
            text = f"{_fmt_spred(left, _SPREC_OR)} or {_fmt_spred(right, _SPREC_OR + 1)}"
            return f"({text})" if prec > _SPREC_OR else text
        case SAnd(left, right):
            text = f"{_fmt_spred(left, _SPREC_AND)} and {_fmt_spred(right, _SPREC_AND + 1)}"
            return f"({text})" if prec > _SPREC_AND else text
        case SNot(inner):
            return f"not {_fmt_spred(inner, _SPREC_NOT + 1)}"
        case STraceEquals(left, right):
            return f"{_fmt_stexpr(left)} = {_fmt_stexpr(right)}"
        case SPrefixOf(left, right):
            return f"{_fmt_stexpr(left)} <= {_fmt_stexpr(right)}"
        case SInStar(inner, setexpr):
            return f"{_fmt_stexpr(inner)} in {_fmt_set(setexpr)}*"
        case SHeadIs(inner, value):
            return f"head({_fmt_stexpr(inner)}) = {_fmt_guard(value)}"
        case SSubscriptIs(inner, index, value):
            return f"{_fmt_stexpr(inner)}[{index}] = {_fmt_guard(value)}"
        case SLengthCmp(inner, op, bound):
            return f"#{_fmt_stexpr(inner)} {op} {bound}"
    raise TypeError(f"not a surface predicate: {expr!r}")


def print_module(module: ModuleSource) -> str:
    lines: list[str] = []
    for decl in module.decls:
        if isinstance(decl, AlphaDecl):
            lines.append(f"alphabet {decl.name} = {_fmt_guard(decl.events)}")
        elif isinstance(decl, ProcDecl):
            note = f" : {decl.alphabet_name}" if decl.alphabet_name else ""
            lines.append(f"process {decl.name}{note} = {_fmt_pexpr(decl.expr, 0)}")
        elif isinstance(decl, SpecDecl):
            lines.append(f"spec {decl.name} = {_fmt_spred(decl.expr, 0)}")
        elif isinstance(decl, CheckDecl):
            clause = f" depth {decl.depth}" if decl.depth is not None else ""
            lines.append(f"check {decl.left} {decl.kind} {decl.right}{clause}")
    return "\n".join(lines) + ("\n" if lines else "")
