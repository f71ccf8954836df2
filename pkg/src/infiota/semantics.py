"""Finite models for negative free logic with Russellian descriptions.

Atoms are false unless every term in them denotes; quantifiers range over
the (possibly empty) domain; a description denotes the unique satisfier of
its body, if there is exactly one.  Evaluation is classical, which is all a
soundness oracle for the intuitionist systems needs: anything derivable is
classically valid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .syntax import (
    Abst, And, Bot, Const, Eq, Exists, ExistsBang, Forall, Iff, Imp, IotaQ, IotaTerm,
    Or, Pred, Var, constants, free_vars, predicates,
)

UNDEFINED = None
VALID = "VALID"


class ResourceBound(RuntimeError):
    """The model enumeration would exceed its step budget."""


@dataclass
class Model:
    domain: tuple
    consts: dict = field(default_factory=dict)
    preds: dict = field(default_factory=dict)

    def __post_init__(self):
        dom = set(self.domain)
        for c, d in self.consts.items():
            if d is not None and d not in dom:
                raise ValueError(f"constant {c} denotes a non-element")
        for p, ext in self.preds.items():
            for tup in ext:
                if not set(tup) <= dom:
                    raise ValueError(f"predicate {p} holds of a non-element")

    def render(self, assignment: Optional[dict] = None) -> str:
        parts = ["domain: " + " ".join(f"d{d}" for d in self.domain)]
        for c in sorted(self.consts):
            d = self.consts[c]
            parts.append(f"const {c} = " + ("undef" if d is None else f"d{d}"))
        for p in sorted(self.preds):
            tuples = sorted(self.preds[p])
            body = ", ".join("(" + " ".join(f"d{d}" for d in t) + ")" for t in tuples)
            parts.append(f"pred {p} = {{{body}}}")
        for v in sorted(assignment or {}):
            d = assignment[v]
            parts.append(f"var {v} = " + ("undef" if d is None else f"d{d}"))
        return "; ".join(parts)


def denote(m: Model, g: dict, t):
    """Element denoted by ``t`` under assignment ``g``, or ``UNDEFINED``."""
    if isinstance(t, Var):
        return g.get(t.name)
    if isinstance(t, Const):
        return m.consts.get(t.name)
    if isinstance(t, IotaTerm):
        found = UNDEFINED
        for d in m.domain:
            if evaluate(m, {**g, t.bound: d}, t.body):
                if found is not UNDEFINED:
                    return UNDEFINED
                found = d
        return found
    raise TypeError(f"not a term: {t!r}")


def evaluate(m: Model, g: dict, f) -> bool:
    if isinstance(f, Pred):
        vals = []
        for t in f.args:
            d = denote(m, g, t)
            if d is None:
                return False
            vals.append(d)
        return tuple(vals) in m.preds.get(f.symbol, ())
    if isinstance(f, Eq):
        a = denote(m, g, f.left)
        if a is None:
            return False
        b = denote(m, g, f.right)
        return b is not None and a == b
    if isinstance(f, ExistsBang):
        return denote(m, g, f.arg) is not None
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return evaluate(m, g, f.left) and evaluate(m, g, f.right)
    if isinstance(f, Or):
        return evaluate(m, g, f.left) or evaluate(m, g, f.right)
    if isinstance(f, Imp):
        return not evaluate(m, g, f.left) or evaluate(m, g, f.right)
    if isinstance(f, Iff):
        return evaluate(m, g, f.left) == evaluate(m, g, f.right)
    if isinstance(f, Forall):
        return all(evaluate(m, {**g, f.var: d}, f.body) for d in m.domain)
    if isinstance(f, Exists):
        return any(evaluate(m, {**g, f.var: d}, f.body) for d in m.domain)
    if isinstance(f, IotaQ):
        witness = None
        for d in m.domain:
            if evaluate(m, {**g, f.var: d}, f.restrictor):
                if witness is not None:
                    return False
                witness = d
        return witness is not None and evaluate(m, {**g, f.var: witness}, f.matrix)
    if isinstance(f, Abst):
        d = denote(m, g, f.arg)
        return d is not None and evaluate(m, {**g, f.var: d}, f.body)
    raise TypeError(f"not a formula: {f!r}")


# --------------------------------------------------------------------------
# enumeration

@dataclass(frozen=True)
class Signature:
    preds: tuple = ()       # (symbol, arity) pairs, sorted
    consts: tuple = ()      # sorted names

    @classmethod
    def of(cls, *formulas) -> "Signature":
        preds: dict = {}
        consts: set = set()
        for f in formulas:
            for p, n in predicates(f).items():
                if preds.setdefault(p, n) != n:
                    raise ValueError(f"predicate {p} used at two arities")
            consts |= constants(f)
        return cls(tuple(sorted(preds.items())), tuple(sorted(consts)))

    def extend(self, other: "Signature") -> "Signature":
        preds = dict(self.preds)
        preds.update(other.preds)
        return Signature(tuple(sorted(preds.items())), tuple(sorted(set(self.consts) | set(other.consts))))


def models(sig: Signature, max_size: int) -> Iterator[Model]:
    """Every model over ``sig`` with at most ``max_size`` elements.

    Order: by domain size, then constants (undefined first, then elements in
    order) in name order, then predicate extensions by the binary number whose
    bit i says whether the i-th argument tuple (lexicographic) is in.
    """
    for k in range(max_size + 1):
        dom = tuple(range(k))
        const_choices = [(None,) + dom for _ in sig.consts]
        pred_choices = []
        for _, arity in sig.preds:
            tuples = list(itertools.product(dom, repeat=arity))
            pred_choices.append([frozenset(t for i, t in enumerate(tuples) if mask >> i & 1)
                                 for mask in range(2 ** len(tuples))])
        for cs in itertools.product(*const_choices):
            for ps in itertools.product(*pred_choices):
                yield Model(dom, dict(zip(sig.consts, cs)),
                            {p: ext for (p, _), ext in zip(sig.preds, ps)})


def assignments(m: Model, variables) -> Iterator[dict]:
    """Partial assignments of ``variables`` (sorted), undefined first."""
    names = sorted(variables)
    for vals in itertools.product((None,) + tuple(m.domain), repeat=len(names)):
        yield {v: d for v, d in zip(names, vals) if d is not None}


def count_points(sig: Signature, n_vars: int, max_size: int) -> int:
    total = 0
    for k in range(max_size + 1):
        per = (k + 1) ** len(sig.consts) * (k + 1) ** n_vars
        for _, arity in sig.preds:
            per *= 2 ** (k ** arity)
        total += per
    return total


@dataclass
class Countermodel:
    model: Model
    assignment: dict

    def render(self) -> str:
        return self.model.render(self.assignment)


def valid_upto(seq, n: int, sig: Optional[Signature] = None, budget: Optional[int] = None):
    """Search for a countermodel to a judgment among models of size <= ``n``.

    ``seq`` is anything with ``assumptions`` and ``conclusion``.  Returns
    :data:`VALID` if every point satisfying all assumptions also satisfies
    the conclusion, else the first :class:`Countermodel` in enumeration order.
    """
    formulas = list(seq.assumptions) + [seq.conclusion]
    own = Signature.of(*formulas)
    sig = own if sig is None else sig.extend(own)
    fv = set()
    for f in formulas:
        fv |= free_vars(f)
    if budget is not None and count_points(sig, len(fv), n) > budget:
        raise ResourceBound(f"more than {budget} points to check")
    hyps = sorted(seq.assumptions, key=repr)
    for m in models(sig, n):
        for g in assignments(m, fv):
            if all(evaluate(m, g, h) for h in hyps) and not evaluate(m, g, seq.conclusion):
                return Countermodel(m, g)
    return VALID


def equivalent_upto(a, b, n: int, sig: Optional[Signature] = None):
    """First point where ``a`` and ``b`` disagree, or :data:`VALID`."""
    own = Signature.of(a, b)
    sig = own if sig is None else sig.extend(own)
    fv = free_vars(a) | free_vars(b)
    for m in models(sig, n):
        for g in assignments(m, fv):
            if evaluate(m, g, a) != evaluate(m, g, b):
                return Countermodel(m, g)
    return VALID
