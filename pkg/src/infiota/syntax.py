"""Terms, formulas and the object languages they live in.

Everything here is an immutable value.  Binders (``Forall``, ``Exists``,
``IotaQ``, ``Abst`` and the term former ``IotaTerm``) each bind a single
variable; ``IotaQ(x, F, G)`` binds ``x`` in both ``F`` and ``G`` while
``Abst(x, B, t)`` binds ``x`` in ``B`` only.

Substitution never renames: if the term would be captured a
:class:`CaptureError` is raised instead.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Union


class CaptureError(ValueError):
    """Raised when a substitution would capture a free variable of the term."""


class ParseError(SyntaxError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"{msg} (line {line}, column {col})")
        self.msg = msg
        self.lineno = line
        self.offset = col


# --------------------------------------------------------------------------
# terms

@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Const:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class IotaTerm:
    bound: str
    body: "Formula"

    def __str__(self):
        return print_term(self)


Term = Union[Var, Const, IotaTerm]


# --------------------------------------------------------------------------
# formulas

@dataclass(frozen=True)
class Pred:
    symbol: str
    args: tuple = ()


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class ExistsBang:
    arg: Term


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class IotaQ:
    var: str
    restrictor: "Formula"
    matrix: "Formula"


@dataclass(frozen=True)
class Abst:
    var: str
    body: "Formula"
    arg: Term


Formula = Union[Pred, Eq, ExistsBang, Bot, And, Or, Imp, Iff, Forall, Exists, IotaQ, Abst]

BOT = Bot()
BINARY = (And, Or, Imp, Iff)
QUANTIFIERS = (Forall, Exists)
ATOMIC = (Pred, Eq, ExistsBang, Bot)


def Not(f: Formula) -> Formula:
    return Imp(f, BOT)


def is_atomic(f: Formula) -> bool:
    return isinstance(f, ATOMIC)


def atom_terms(f: Formula) -> tuple:
    """The argument terms of an atomic formula, in order."""
    if isinstance(f, Pred):
        return f.args
    if isinstance(f, Eq):
        return (f.left, f.right)
    if isinstance(f, ExistsBang):
        return (f.arg,)
    return ()


class Language(str, Enum):
    INF = "L_INF"
    IOTA = "L_IOTA"
    TLL = "L_TLL"
    DELTA = "L_DELTA"


# --------------------------------------------------------------------------
# free variables

def free_vars(e) -> frozenset:
    """Variables with a free occurrence in a term or formula."""
    return frozenset(_fv(e))


def _fv(e) -> Iterator[str]:
    if isinstance(e, Var):
        yield e.name
    elif isinstance(e, Const):
        return
    elif isinstance(e, IotaTerm):
        yield from (v for v in _fv(e.body) if v != e.bound)
    elif isinstance(e, (Pred, Eq, ExistsBang)):
        for t in atom_terms(e):
            yield from _fv(t)
    elif isinstance(e, Bot):
        return
    elif isinstance(e, BINARY):
        yield from _fv(e.left)
        yield from _fv(e.right)
    elif isinstance(e, QUANTIFIERS):
        yield from (v for v in _fv(e.body) if v != e.var)
    elif isinstance(e, IotaQ):
        yield from (v for v in _fv(e.restrictor) if v != e.var)
        yield from (v for v in _fv(e.matrix) if v != e.var)
    elif isinstance(e, Abst):
        yield from (v for v in _fv(e.body) if v != e.var)
        yield from _fv(e.arg)
    else:
        raise TypeError(f"not a term or formula: {e!r}")


def all_vars(e) -> frozenset:
    """Every variable name occurring in ``e``, free or bound (binder names included)."""
    out = set()

    def walk(x):
        if isinstance(x, Var):
            out.add(x.name)
        elif isinstance(x, IotaTerm):
            out.add(x.bound)
            walk(x.body)
        elif isinstance(x, (Pred, Eq, ExistsBang)):
            for t in atom_terms(x):
                walk(t)
        elif isinstance(x, BINARY):
            walk(x.left)
            walk(x.right)
        elif isinstance(x, QUANTIFIERS):
            out.add(x.var)
            walk(x.body)
        elif isinstance(x, IotaQ):
            out.add(x.var)
            walk(x.restrictor)
            walk(x.matrix)
        elif isinstance(x, Abst):
            out.add(x.var)
            walk(x.body)
            walk(x.arg)

    walk(e)
    return frozenset(out)


def constants(e) -> frozenset:
    out = set()

    def walk(x):
        if isinstance(x, Const):
            out.add(x.name)
        elif isinstance(x, IotaTerm):
            walk(x.body)
        elif isinstance(x, (Pred, Eq, ExistsBang)):
            for t in atom_terms(x):
                walk(t)
        elif isinstance(x, BINARY):
            walk(x.left)
            walk(x.right)
        elif isinstance(x, QUANTIFIERS):
            walk(x.body)
        elif isinstance(x, IotaQ):
            walk(x.restrictor)
            walk(x.matrix)
        elif isinstance(x, Abst):
            walk(x.body)
            walk(x.arg)

    walk(e)
    return frozenset(out)


def predicates(e) -> dict:
    """Map of predicate symbol -> arity for every ``Pred`` in ``e``."""
    out: dict = {}

    def walk(x):
        if isinstance(x, Pred):
            if out.setdefault(x.symbol, len(x.args)) != len(x.args):
                raise ValueError(f"predicate {x.symbol} used at two arities")
        for child in children(x):
            walk(child)

    walk(e)
    return out


def children(e) -> tuple:
    """Immediate subterms/subformulas, in printing order."""
    if isinstance(e, IotaTerm):
        return (e.body,)
    if isinstance(e, (Pred, Eq, ExistsBang)):
        return atom_terms(e)
    if isinstance(e, BINARY):
        return (e.left, e.right)
    if isinstance(e, QUANTIFIERS):
        return (e.body,)
    if isinstance(e, IotaQ):
        return (e.restrictor, e.matrix)
    if isinstance(e, Abst):
        return (e.body, e.arg)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformulas of ``f`` including ``f`` (not descending into terms)."""
    yield f
    if isinstance(f, BINARY):
        yield from subformulas(f.left)
        yield from subformulas(f.right)
    elif isinstance(f, QUANTIFIERS):
        yield from subformulas(f.body)
    elif isinstance(f, IotaQ):
        yield from subformulas(f.restrictor)
        yield from subformulas(f.matrix)
    elif isinstance(f, Abst):
        yield from subformulas(f.body)


# --------------------------------------------------------------------------
# substitution

def is_free_for(t: Term, x: str, a) -> bool:
    """True iff no free occurrence of ``x`` in ``a`` sits under a binder of a variable of ``t``."""
    danger = free_vars(t)
    if not danger:
        return True
    return _free_for(a, x, danger, frozenset())


def _free_for(e, x, danger, bound) -> bool:
    if isinstance(e, Var):
        return not (e.name == x and x not in bound and bound & danger)
    if isinstance(e, Const) or isinstance(e, Bot):
        return True
    if isinstance(e, IotaTerm):
        return _free_for(e.body, x, danger, bound | {e.bound})
    if isinstance(e, (Pred, Eq, ExistsBang)):
        return all(_free_for(t, x, danger, bound) for t in atom_terms(e))
    if isinstance(e, BINARY):
        return _free_for(e.left, x, danger, bound) and _free_for(e.right, x, danger, bound)
    if isinstance(e, QUANTIFIERS):
        return _free_for(e.body, x, danger, bound | {e.var})
    if isinstance(e, IotaQ):
        inner = bound | {e.var}
        return _free_for(e.restrictor, x, danger, inner) and _free_for(e.matrix, x, danger, inner)
    if isinstance(e, Abst):
        return (_free_for(e.body, x, danger, bound | {e.var})
                and _free_for(e.arg, x, danger, bound))
    raise TypeError(f"not a term or formula: {e!r}")


def substitute(a, x: str, t: Term):
    """Replace the free occurrences of variable ``x`` in ``a`` by ``t``.

    ``a`` may be a formula or a term.  Raises :class:`CaptureError` when
    ``t`` is not free for ``x`` in ``a``.
    """
    if not is_free_for(t, x, a):
        raise CaptureError(f"{print_term(t)} is not free for {x} in {show(a)}")
    return _subst(a, x, t)


def _subst(e, x, t):
    if isinstance(e, Var):
        return t if e.name == x else e
    if isinstance(e, (Const, Bot)):
        return e
    if isinstance(e, IotaTerm):
        return e if e.bound == x else IotaTerm(e.bound, _subst(e.body, x, t))
    if isinstance(e, Pred):
        return Pred(e.symbol, tuple(_subst(s, x, t) for s in e.args))
    if isinstance(e, Eq):
        return Eq(_subst(e.left, x, t), _subst(e.right, x, t))
    if isinstance(e, ExistsBang):
        return ExistsBang(_subst(e.arg, x, t))
    if isinstance(e, BINARY):
        return type(e)(_subst(e.left, x, t), _subst(e.right, x, t))
    if isinstance(e, QUANTIFIERS):
        return e if e.var == x else type(e)(e.var, _subst(e.body, x, t))
    if isinstance(e, IotaQ):
        if e.var == x:
            return e
        return IotaQ(e.var, _subst(e.restrictor, x, t), _subst(e.matrix, x, t))
    if isinstance(e, Abst):
        body = e.body if e.var == x else _subst(e.body, x, t)
        return Abst(e.var, body, _subst(e.arg, x, t))
    raise TypeError(f"not a term or formula: {e!r}")


FRESH_BASE = ("y", "z", "v", "w")


def fresh_var(avoid, base=FRESH_BASE) -> str:
    """First variable of y, z, v, w, y1, z1, v1, w1, y2, ... not in ``avoid``."""
    avoid = set(avoid)
    n = 0
    while True:
        suffix = "" if n == 0 else str(n)
        for b in base:
            if b + suffix not in avoid:
                return b + suffix
        n += 1


# --------------------------------------------------------------------------
# languages

def well_formed(e, lang) -> bool:
    """Structural membership of a formula in one of the four languages."""
    lang = Language(lang)
    try:
        _check_lang(e, lang)
    except _Ill:
        return False
    return True


class _Ill(Exception):
    pass


def _check_term(t, lang, slot):
    # slot: "eq" beside identity, "abst" argument of an abstract, "other"
    if isinstance(t, (Var, Const)):
        return
    if not isinstance(t, IotaTerm):
        raise _Ill
    if lang == Language.TLL and slot != "eq":
        raise _Ill
    if lang == Language.DELTA and slot not in ("eq", "abst"):
        raise _Ill
    if lang in (Language.INF, Language.IOTA):
        raise _Ill
    _check_lang(t.body, lang)


def _check_lang(f, lang):
    if isinstance(f, Pred):
        for t in f.args:
            _check_term(t, lang, "other")
    elif isinstance(f, Eq):
        _check_term(f.left, lang, "eq")
        _check_term(f.right, lang, "eq")
    elif isinstance(f, ExistsBang):
        _check_term(f.arg, lang, "other")
    elif isinstance(f, Bot):
        pass
    elif isinstance(f, BINARY):
        _check_lang(f.left, lang)
        _check_lang(f.right, lang)
    elif isinstance(f, QUANTIFIERS):
        _check_lang(f.body, lang)
    elif isinstance(f, IotaQ):
        if lang != Language.IOTA:
            raise _Ill
        _check_lang(f.restrictor, lang)
        _check_lang(f.matrix, lang)
    elif isinstance(f, Abst):
        if lang != Language.DELTA:
            raise _Ill
        _check_lang(f.body, lang)
        _check_term(f.arg, lang, "abst")
    else:
        raise _Ill


# --------------------------------------------------------------------------
# alpha equivalence

def alpha_eq(a, b) -> bool:
    """Equality up to consistent renaming of bound variables."""
    return _alpha(a, b, {}, {}, 0)


def _bind(env_a, env_b, va, vb, depth):
    ea = dict(env_a)
    eb = dict(env_b)
    ea[va] = depth
    eb[vb] = depth
    return ea, eb


def _alpha(a, b, ea, eb, d) -> bool:
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        ia, ib = ea.get(a.name), eb.get(b.name)
        if ia is None and ib is None:
            return a.name == b.name
        return ia == ib
    if isinstance(a, Const):
        return a.name == b.name
    if isinstance(a, Bot):
        return True
    if isinstance(a, IotaTerm):
        na, nb = _bind(ea, eb, a.bound, b.bound, d)
        return _alpha(a.body, b.body, na, nb, d + 1)
    if isinstance(a, Pred):
        return (a.symbol == b.symbol and len(a.args) == len(b.args)
                and all(_alpha(s, t, ea, eb, d) for s, t in zip(a.args, b.args)))
    if isinstance(a, (Eq, ExistsBang)):
        return all(_alpha(s, t, ea, eb, d) for s, t in zip(atom_terms(a), atom_terms(b)))
    if isinstance(a, BINARY):
        return _alpha(a.left, b.left, ea, eb, d) and _alpha(a.right, b.right, ea, eb, d)
    if isinstance(a, QUANTIFIERS):
        na, nb = _bind(ea, eb, a.var, b.var, d)
        return _alpha(a.body, b.body, na, nb, d + 1)
    if isinstance(a, IotaQ):
        na, nb = _bind(ea, eb, a.var, b.var, d)
        return (_alpha(a.restrictor, b.restrictor, na, nb, d + 1)
                and _alpha(a.matrix, b.matrix, na, nb, d + 1))
    if isinstance(a, Abst):
        na, nb = _bind(ea, eb, a.var, b.var, d)
        return _alpha(a.body, b.body, na, nb, d + 1) and _alpha(a.arg, b.arg, ea, eb, d)
    raise TypeError(f"not a term or formula: {a!r}")


# --------------------------------------------------------------------------
# s-expression reading and printing

IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")
KEYWORDS = frozenset({"iota", "=", "ex!", "bot", "and", "or", "->", "<->", "not",
                      "forall", "exists", "iotaq", "abst"})
_TOKEN = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")


def default_is_var(name: str) -> bool:
    return name[:1] in "uvwxyz"


@dataclass(frozen=True)
class Tok:
    text: str
    line: int
    col: int


def read_sexprs(text: str) -> list:
    """Read every s-expression in ``text``.  Lists become Python lists of
    :class:`Tok` and nested lists; a list remembers its opening token as
    ``(open_tok, items)``."""
    stack: list = [(None, [])]
    line, col = 1, 1
    for m in _TOKEN.finditer(text):
        s = m.group()
        if s.isspace() or s.startswith(";"):
            pass
        elif s == "(":
            stack.append((Tok(s, line, col), []))
        elif s == ")":
            if len(stack) == 1:
                raise ParseError("unbalanced ')'", line, col)
            done = stack.pop()
            stack[-1][1].append(done)
        else:
            stack[-1][1].append(Tok(s, line, col))
        nl = s.count("\n")
        if nl:
            line += nl
            col = len(s) - s.rfind("\n")
        else:
            col += len(s)
    if len(stack) != 1:
        open_tok = stack[-1][0]
        raise ParseError("unclosed '('", open_tok.line, open_tok.col)
    return stack[0][1]


def _pos(node):
    return (node.line, node.col) if isinstance(node, Tok) else (node[0].line, node[0].col)


def _err(node, msg):
    line, col = _pos(node)
    return ParseError(msg, line, col)


class Reader:
    """Converts read s-expressions to terms and formulas."""

    def __init__(self, is_var: Callable[[str], bool] = default_is_var):
        self.is_var = is_var

    def ident(self, node) -> str:
        if not isinstance(node, Tok) or not IDENT.match(node.text) or node.text in KEYWORDS:
            raise _err(node, "expected an identifier")
        return node.text

    def var(self, node) -> str:
        name = self.ident(node)
        if not self.is_var(name):
            raise _err(node, f"{name} is not a variable")
        return name

    def term(self, node) -> Term:
        if isinstance(node, Tok):
            name = self.ident(node)
            return Var(name) if self.is_var(name) else Const(name)
        _, items = node
        if len(items) == 3 and isinstance(items[0], Tok) and items[0].text == "iota":
            return IotaTerm(self.var(items[1]), self.formula(items[2]))
        raise _err(node, "expected a term")

    def formula(self, node) -> Formula:
        if isinstance(node, Tok):
            if node.text == "bot":
                return BOT
            raise _err(node, "expected a formula")
        _, items = node
        if not items or not isinstance(items[0], Tok):
            raise _err(node, "expected a formula")
        head = items[0].text
        args = items[1:]

        def arity(n):
            if len(args) != n:
                raise _err(node, f"{head} takes {n} argument(s)")

        if head == "=":
            arity(2)
            return Eq(self.term(args[0]), self.term(args[1]))
        if head == "ex!":
            arity(1)
            return ExistsBang(self.term(args[0]))
        if head in ("and", "or", "->", "<->"):
            arity(2)
            cls = {"and": And, "or": Or, "->": Imp, "<->": Iff}[head]
            return cls(self.formula(args[0]), self.formula(args[1]))
        if head == "not":
            arity(1)
            return Not(self.formula(args[0]))
        if head in ("forall", "exists"):
            arity(2)
            cls = Forall if head == "forall" else Exists
            return cls(self.var(args[0]), self.formula(args[1]))
        if head == "iotaq":
            arity(3)
            return IotaQ(self.var(args[0]), self.formula(args[1]), self.formula(args[2]))
        if head == "abst":
            arity(3)
            return Abst(self.var(args[0]), self.formula(args[1]), self.term(args[2]))
        if head in KEYWORDS:
            raise _err(items[0], f"{head} is not a formula constructor")
        symbol = self.ident(items[0])
        return Pred(symbol, tuple(self.term(a) for a in args))


def _single(text: str):
    nodes = read_sexprs(text)
    if len(nodes) != 1:
        if not nodes:
            raise ParseError("empty input", 1, 1)
        raise _err(nodes[1], "trailing input")
    return nodes[0]


def parse_formula(text: str, is_var: Callable[[str], bool] = default_is_var) -> Formula:
    return Reader(is_var).formula(_single(text))


def parse_term(text: str, is_var: Callable[[str], bool] = default_is_var) -> Term:
    return Reader(is_var).term(_single(text))


def print_term(t: Term) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    return f"(iota {t.bound} {print_formula(t.body)})"


def print_formula(f: Formula) -> str:
    if isinstance(f, Pred):
        return "(" + " ".join([f.symbol, *map(print_term, f.args)]) + ")"
    if isinstance(f, Eq):
        return f"(= {print_term(f.left)} {print_term(f.right)})"
    if isinstance(f, ExistsBang):
        return f"(ex! {print_term(f.arg)})"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Imp) and isinstance(f.right, Bot):
        return f"(not {print_formula(f.left)})"
    if isinstance(f, BINARY):
        op = {And: "and", Or: "or", Imp: "->", Iff: "<->"}[type(f)]
        return f"({op} {print_formula(f.left)} {print_formula(f.right)})"
    if isinstance(f, QUANTIFIERS):
        op = "forall" if isinstance(f, Forall) else "exists"
        return f"({op} {f.var} {print_formula(f.body)})"
    if isinstance(f, IotaQ):
        return f"(iotaq {f.var} {print_formula(f.restrictor)} {print_formula(f.matrix)})"
    if isinstance(f, Abst):
        return f"(abst {f.var} {print_formula(f.body)} {print_term(f.arg)})"
    raise TypeError(f"not a formula: {f!r}")


def show(e) -> str:
    if isinstance(e, (Var, Const, IotaTerm)):
        return print_term(e)
    return print_formula(e)
