"""Translations between the description languages.

``tau`` takes the term-forming/abstraction language to the binary
quantifier language, ``upsilon`` goes back, and ``russell_expand`` unfolds a
binary description into first-order uniqueness form.  Clause tags in a
:class:`TranslationTrace` name the clause applied at each step:

    a     atom without descriptions, copied
    b     quantifier, translated under the binder
    c     binary connective, translated componentwise
    d.i   identity with a description on either side
    e.i   abstract applied to an ordinary term
    e.ii  abstract applied to a description
    upsilon  binary description turned into abstract + description term
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CheckError, Kind
from .syntax import (
    BINARY, QUANTIFIERS, Abst, And, Bot, Eq, Exists, ExistsBang, Forall, Imp, IotaQ,
    IotaTerm, Pred, Var, all_vars, atom_terms, fresh_var, free_vars, is_free_for, show,
    substitute,
)


@dataclass
class TranslationTrace:
    input: object
    output: object = None
    clauses_used: list = field(default_factory=list)
    # (old, new) bound-variable renamings made to keep a binder from capturing
    renamed: list = field(default_factory=list)


def _has_iota(t) -> bool:
    return isinstance(t, IotaTerm)


def _rename(f, old, new):
    return f if old == new else substitute(f, old, Var(new))


class _Tau:
    def __init__(self, trace: TranslationTrace):
        self.trace = trace

    def tag(self, c):
        self.trace.clauses_used.append(c)

    def pick(self, x, avoid, *bodies):
        """``x`` unless it is in ``avoid``; otherwise a fresh variable."""
        if x not in avoid:
            return x
        used = set(avoid) | {x}
        for b in bodies:
            used |= all_vars(b)
        new = fresh_var(used)
        self.trace.renamed.append((x, new))
        return new

    def formula(self, f):
        if isinstance(f, Eq) and (_has_iota(f.left) or _has_iota(f.right)):
            self.tag("d.i")
            if _has_iota(f.left):
                return self.desc_eq(f.left, f.right)
            return self.desc_eq(f.right, f.left)
        if isinstance(f, (Pred, ExistsBang, Eq)):
            if any(_has_iota(t) for t in atom_terms(f)):
                raise CheckError(Kind.LanguageViolation,
                                 f"description outside identity or abstract in {show(f)}")
            self.tag("a")
            return f
        if isinstance(f, Bot):
            self.tag("a")
            return f
        if isinstance(f, QUANTIFIERS):
            self.tag("b")
            return type(f)(f.var, self.formula(f.body))
        if isinstance(f, BINARY):
            self.tag("c")
            return type(f)(self.formula(f.left), self.formula(f.right))
        if isinstance(f, Abst):
            return self.abst(f)
        raise CheckError(Kind.LanguageViolation, f"{show(f)} is not in the term-operator language")

    def desc_eq(self, d: IotaTerm, s):
        x = self.pick(d.bound, free_vars(s), d.body)
        body = self.formula(_rename(d.body, d.bound, x))
        if isinstance(s, IotaTerm):
            y = self.pick(s.bound, {x}, s.body)
            inner = IotaQ(y, self.formula(_rename(s.body, s.bound, y)), Eq(Var(x), Var(y)))
            return IotaQ(x, body, inner)
        return IotaQ(x, body, Eq(Var(x), s))

    def abst(self, f: Abst):
        if isinstance(f.arg, IotaTerm):
            self.tag("e.ii")
            d = f.arg
            if d.bound == f.var:
                return IotaQ(f.var, self.formula(d.body), self.formula(f.body))
            if f.var not in free_vars(d) and is_free_for(Var(f.var), d.bound, d.body):
                x = f.var
            else:
                x = self.pick(f.var, {f.var}, d.body, f.body, Var(d.bound))
            return IotaQ(x, self.formula(_rename(d.body, d.bound, x)),
                         self.formula(_rename(f.body, f.var, x)))
        self.tag("e.i")
        x = self.pick(f.var, free_vars(f.arg), f.body)
        return IotaQ(x, Eq(f.arg, Var(x)), self.formula(_rename(f.body, f.var, x)))


def tau_trace(f) -> TranslationTrace:
    trace = TranslationTrace(f)
    trace.output = _Tau(trace).formula(f)
    return trace


def tau(f):
    """Translate a formula with description terms/abstracts into the binary-quantifier language."""
    return tau_trace(f).output


def _upsilon(f, trace):
    if isinstance(f, IotaQ):
        trace.clauses_used.append("upsilon")
        return Abst(f.var, _upsilon(f.matrix, trace), IotaTerm(f.var, _upsilon(f.restrictor, trace)))
    if isinstance(f, QUANTIFIERS):
        trace.clauses_used.append("b")
        return type(f)(f.var, _upsilon(f.body, trace))
    if isinstance(f, BINARY):
        trace.clauses_used.append("c")
        return type(f)(_upsilon(f.left, trace), _upsilon(f.right, trace))
    if isinstance(f, (Pred, Eq, ExistsBang, Bot)):
        if any(_has_iota(t) for t in atom_terms(f)):
            raise CheckError(Kind.LanguageViolation, f"{show(f)} is not in the binary-quantifier language")
        trace.clauses_used.append("a")
        return f
    raise CheckError(Kind.LanguageViolation, f"{show(f)} is not in the binary-quantifier language")


def upsilon_trace(f) -> TranslationTrace:
    trace = TranslationTrace(f)
    trace.output = _upsilon(f, trace)
    return trace


def upsilon(f):
    """Translate a binary-quantifier formula into abstract + description-term form."""
    return upsilon_trace(f).output


def russell_expand(f: IotaQ):
    """``ιx[F, G]`` as ``∃x((F ∧ ∀y(F[y/x] → x = y)) ∧ G)``."""
    if not isinstance(f, IotaQ):
        raise CheckError(Kind.PremiseShapeMismatch, f"{show(f)} is not a binary description")
    x, F, G = f.var, f.restrictor, f.matrix
    y = fresh_var(all_vars(F) | {x})
    unique = Forall(y, Imp(substitute(F, x, Var(y)), Eq(Var(x), Var(y))))
    return Exists(x, And(And(F, unique), G))


def expand_all(f):
    """Apply :func:`russell_expand` to every binary description, innermost first."""
    if isinstance(f, IotaQ):
        return russell_expand(IotaQ(f.var, expand_all(f.restrictor), expand_all(f.matrix)))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, expand_all(f.body))
    if isinstance(f, BINARY):
        return type(f)(expand_all(f.left), expand_all(f.right))
    return f


def bridge_restricted(f):
    """Swap between ``(iota x F) = t`` and ``ιx[F, x = t]``."""
    if isinstance(f, Eq) and isinstance(f.left, IotaTerm) and not isinstance(f.right, IotaTerm):
        d, t = f.left, f.right
    elif isinstance(f, Eq) and isinstance(f.right, IotaTerm) and not isinstance(f.left, IotaTerm):
        d, t = f.right, f.left
    elif (isinstance(f, IotaQ) and isinstance(f.matrix, Eq) and f.matrix.left == Var(f.var)
          and f.var not in free_vars(f.matrix.right) and not isinstance(f.matrix.right, IotaTerm)):
        return Eq(IotaTerm(f.var, f.restrictor), f.matrix.right)
    else:
        raise CheckError(Kind.PremiseShapeMismatch, f"{show(f)} is not a restricted description")
    if d.bound in free_vars(t):
        raise CheckError(Kind.PremiseShapeMismatch, f"{d.bound} is free in {show(t)}")
    return IotaQ(d.bound, d.body, Eq(Var(d.bound), t))


def bridge_all(f):
    """Rewrite every ``ιx[F, x = t]`` inside ``f`` into ``(iota x F) = t``."""
    if isinstance(f, IotaQ):
        inner = IotaQ(f.var, bridge_all(f.restrictor), bridge_all(f.matrix))
        return bridge_restricted(inner)
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, bridge_all(f.body))
    if isinstance(f, BINARY):
        return type(f)(bridge_all(f.left), bridge_all(f.right))
    return f
