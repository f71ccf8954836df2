"""Natural-deduction proofs with labelled discharge, and the checker.

A proof is a tree of :class:`ProofNode`.  Leaves are assumptions
(``rule == "assume"``, carrying their label) or axiom instances
(``rule == "axiom"``).  An inner node names its rule, its conclusion, its
premises in the fixed order of the rule schema, and optionally a discharge
label, an eigenvariable, instantiating terms and a substitution template for
``eqE``.

All assumptions sharing a label form one class; a discharging rule removes
from the designated premises every open assumption carrying its label, after
checking that each of them belongs to the rule's dischargeable class.  A
class may be empty (vacuous discharge).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import CheckError, Kind
from .syntax import (
    BOT, And, Eq, Exists, ExistsBang, Forall, Formula, Iff, Imp, IotaQ, IotaTerm,
    Language, Or, ParseError, Reader, Var, CaptureError, atom_terms,
    default_is_var, free_vars, is_atomic, print_formula, print_term, read_sexprs,
    show, substitute, well_formed, _err,
)
from .systems import ALL_RULES, AXIOMS, SystemSpec, instantiate_axiom

# premise indices whose open assumptions a rule's discharge label reaches
DISCHARGES = {
    "impI": (0,), "orE": (1, 2), "forallI": (0,), "existsE": (1,),
    "iotaI": (3,), "iotaE1": (1,), "iffI": (0, 1), "iotaIT": (1, 2),
}

ARITY = {
    "andI": 2, "andE1": 1, "andE2": 1, "impI": 1, "impE": 2, "orI1": 1, "orI2": 1,
    "orE": 3, "botE": 1, "forallI": 1, "forallE": 2, "existsI": 2, "existsE": 2,
    "eqI": 1, "eqE": 2, "AD": 1, "iffI": 2, "iffE1": 2, "iffE2": 2,
    "iotaI": 4, "iotaE1": 2, "iotaE2": 5,
    "iotaIT": 3, "iotaE1T": 2, "iotaE2T": 3, "iotaE3T": 1,
}


@dataclass(frozen=True)
class ProofNode:
    rule: str
    conclusion: Optional[Formula]
    premises: tuple = ()
    label: Optional[str] = None
    eigen: Optional[str] = None
    terms: tuple = ()
    template: Optional[tuple] = None
    scheme: Optional[str] = None
    bindings: tuple = ()

    @property
    def is_leaf(self) -> bool:
        return self.rule in ("assume", "axiom")

    def walk(self, path=()):
        """Yield ``(path, node)`` for every node, premises before parents."""
        for i, p in enumerate(self.premises):
            yield from p.walk(path + (i,))
        yield path, self

    def size(self) -> int:
        return sum(1 for _ in self.walk())


def assume(label, formula: Formula) -> ProofNode:
    return ProofNode("assume", formula, label=str(label))


def axiom(scheme: str, **bindings) -> ProofNode:
    try:
        concl = instantiate_axiom(scheme, bindings)
    except CheckError:
        concl = None
    return ProofNode("axiom", concl, scheme=scheme, bindings=tuple(bindings.items()))


def rule(name: str, conclusion: Formula, *premises: ProofNode, discharge=None, eigen=None,
         terms=(), template=None) -> ProofNode:
    return ProofNode(name, conclusion, tuple(premises),
                     label=None if discharge is None else str(discharge),
                     eigen=eigen, terms=tuple(terms), template=template)


class Hyp(NamedTuple):
    label: str
    formula: Formula


def hyp_key(h: Hyp):
    return (h.label, print_formula(h.formula))


@dataclass(frozen=True)
class Judgment:
    assumptions: frozenset
    conclusion: Formula

    def __str__(self):
        left = ", ".join(sorted(print_formula(f) for f in self.assumptions))
        return f"{left} |- {print_formula(self.conclusion)}".lstrip()


# --------------------------------------------------------------------------
# discharge bookkeeping

@dataclass
class _Closure:
    open: frozenset                # Hyp set after this node
    discharged: frozenset = field(default_factory=frozenset)  # labels discharged in subtree


def _close(node: ProofNode, below: list) -> _Closure:
    if node.rule == "assume":
        if node.label is None:
            raise CheckError(Kind.DischargeScopeError, "assumption without a label")
        return _Closure(frozenset({Hyp(node.label, node.conclusion)}))
    if node.rule == "axiom":
        return _Closure(frozenset())
    done = frozenset().union(*(c.discharged for c in below)) if below else frozenset()
    if node.label is None:
        return _Closure(frozenset().union(*(c.open for c in below)) if below else frozenset(), done)
    slots = DISCHARGES.get(node.rule)
    if slots is None:
        raise CheckError(Kind.DischargeScopeError, f"{node.rule} discharges nothing, got label {node.label}")
    if node.label in done:
        raise CheckError(Kind.DischargeScopeError, f"label {node.label} is already discharged above")
    out = set()
    for i, c in enumerate(below):
        if i in slots:
            out |= {h for h in c.open if h.label != node.label}
        else:
            out |= c.open
    return _Closure(frozenset(out), done | {node.label})


def assumption_closure(p: ProofNode) -> dict:
    """Open assumptions (as :class:`Hyp` sets) below every node, keyed by path."""
    table: dict = {}

    def go(node, path):
        below = [go(q, path + (i,)) for i, q in enumerate(node.premises)]
        try:
            c = _close(node, below)
        except CheckError as e:
            raise e.at(path) from None
        table[path] = c.open
        return c

    go(p, ())
    return table


# --------------------------------------------------------------------------
# single steps

def _need(cond, kind, msg):
    if not cond:
        raise CheckError(kind, msg)


def _shape(cond, msg):
    _need(cond, Kind.PremiseShapeMismatch, msg)


def _expect(actual, wanted, what):
    if actual != wanted:
        raise CheckError(Kind.PremiseShapeMismatch,
                         f"{what}: expected {show(wanted)}, got {show(actual)}")


def _is(f, cls, what):
    if not isinstance(f, cls):
        raise CheckError(Kind.PremiseShapeMismatch, f"{what} must be {cls.__name__}, got {show(f)}")
    return f


def _inst(f, x, t):
    try:
        return substitute(f, x, t)
    except CaptureError as e:
        raise CheckError(Kind.CaptureError, str(e)) from None


def _eigen_from(node, default):
    return node.eigen if node.eigen is not None else default


def _discharge(node, opens, slot, allowed):
    """Split premise ``slot``'s open assumptions into discharged and remaining.

    Raises DischargeScopeError if a formula under the label is not dischargeable here.
    """
    rest = []
    for h in sorted(opens[slot], key=hyp_key):
        if node.label is not None and h.label == node.label:
            if h.formula not in allowed:
                raise CheckError(Kind.DischargeScopeError,
                                 f"{show(h.formula)} cannot be discharged by {node.rule} "
                                 f"(premise {slot}, label {node.label})")
        else:
            rest.append(h)
    return rest


def _fresh(var, hyps, where):
    for h in hyps:
        if var in free_vars(h.formula):
            raise CheckError(Kind.EigenvariableNotFresh,
                             f"{var} is free in open assumption {show(h.formula)} ({where})")


def _restricted(node, q: IotaQ):
    m = q.matrix
    ok = isinstance(m, Eq) and (
        (m.left == Var(q.var) and q.var not in free_vars(m.right))
        or (m.right == Var(q.var) and q.var not in free_vars(m.left)))
    _need(ok, Kind.LanguageViolation, f"{node.rule}: matrix of {show(q)} is not an identity with {q.var}")


def _tennant_major(f):
    _shape(isinstance(f, Eq) and isinstance(f.left, IotaTerm),
           f"expected a description identity (iota x F) = t, got {show(f)}")
    return f.left.bound, f.left.body, f.right


def validate_step(node: ProofNode, s: SystemSpec, opens: list) -> None:
    """Check one inference against ``s``.

    ``opens`` gives, for each premise, its set of open :class:`Hyp` before
    this node discharges anything.  Premises are assumed already checked.
    Raises :class:`CheckError` on the first violation.
    """
    r = node.rule
    if r == "assume":
        _need(well_formed(node.conclusion, s.language), Kind.LanguageViolation,
              f"{show(node.conclusion)} is outside {s.language.value}")
        return
    if r == "axiom":
        _need(node.scheme in AXIOMS, Kind.UnknownRule, f"no axiom scheme {node.scheme}")
        _need(node.scheme in s.axioms, Kind.RuleNotInSystem, f"axiom {node.scheme} is not in {s.name}")
        f = instantiate_axiom(node.scheme, dict(node.bindings), s.language)
        if node.conclusion is not None:
            _expect(node.conclusion, f, "axiom instance")
        return
    _need(r in ALL_RULES, Kind.UnknownRule, f"unknown rule {r}")
    _need(r in s.rules, Kind.RuleNotInSystem, f"{r} is not a rule of {s.name}")
    C = node.conclusion
    _need(well_formed(C, s.language), Kind.LanguageViolation, f"{show(C)} is outside {s.language.value}")
    _shape(len(node.premises) == ARITY[r], f"{r} takes {ARITY[r]} premises, got {len(node.premises)}")
    if node.label is not None and r not in DISCHARGES:
        raise CheckError(Kind.DischargeScopeError, f"{r} discharges nothing")
    P = [p.conclusion for p in node.premises]
    _RULES[r](node, s, C, P, opens)


def _andI(node, s, C, P, opens):
    _is(C, And, "conclusion")
    _expect(P[0], C.left, "left premise")
    _expect(P[1], C.right, "right premise")


def _andE1(node, s, C, P, opens):
    _expect(C, _is(P[0], And, "premise").left, "conclusion")


def _andE2(node, s, C, P, opens):
    _expect(C, _is(P[0], And, "premise").right, "conclusion")


def _impI(node, s, C, P, opens):
    _is(C, Imp, "conclusion")
    _expect(P[0], C.right, "premise")
    _discharge(node, opens, 0, {C.left})


def _impE(node, s, C, P, opens):
    _expect(P[0], Imp(P[1], C), "major premise")


def _orI1(node, s, C, P, opens):
    _expect(P[0], _is(C, Or, "conclusion").left, "premise")


def _orI2(node, s, C, P, opens):
    _expect(P[0], _is(C, Or, "conclusion").right, "premise")


def _orE(node, s, C, P, opens):
    d = _is(P[0], Or, "major premise")
    _expect(P[1], C, "second premise")
    _expect(P[2], C, "third premise")
    _discharge(node, opens, 1, {d.left})
    _discharge(node, opens, 2, {d.right})


def _botE(node, s, C, P, opens):
    _expect(P[0], BOT, "premise")
    _need(is_atomic(C), Kind.SideConditionViolated, f"botE concludes non-atomic {show(C)}")


def _forallI(node, s, C, P, opens):
    _is(C, Forall, "conclusion")
    x, A = C.var, C.body
    y = _eigen_from(node, x)
    _need(y == x or y not in free_vars(A), Kind.EigenvariableNotFresh,
          f"eigenvariable {y} is free in {show(A)}")
    _expect(P[0], _inst(A, x, Var(y)), "premise")
    rest = _discharge(node, opens, 0, {ExistsBang(Var(y))})
    _fresh(y, rest, "forallI")


def _forallE(node, s, C, P, opens):
    q = _is(P[0], Forall, "major premise")
    t = _is(P[1], ExistsBang, "minor premise").arg
    if node.terms:
        _expect(node.terms[0], t, "instantiating term")
    _expect(C, _inst(q.body, q.var, t), "conclusion")


def _existsI(node, s, C, P, opens):
    q = _is(C, Exists, "conclusion")
    t = _is(P[1], ExistsBang, "second premise").arg
    if node.terms:
        _expect(node.terms[0], t, "instantiating term")
    _expect(P[0], _inst(q.body, q.var, t), "first premise")


def _existsE(node, s, C, P, opens):
    q = _is(P[0], Exists, "major premise")
    x, A = q.var, q.body
    _expect(P[1], C, "minor premise")
    y = _eigen_from(node, x)
    _need(y == x or y not in free_vars(A), Kind.EigenvariableNotFresh,
          f"eigenvariable {y} is free in {show(A)}")
    _need(y not in free_vars(C), Kind.EigenvariableNotFresh, f"eigenvariable {y} is free in {show(C)}")
    rest = _discharge(node, opens, 1, {_inst(A, x, Var(y)), ExistsBang(Var(y))})
    _fresh(y, rest, "existsE")


def _eqI(node, s, C, P, opens):
    t = _is(P[0], ExistsBang, "premise").arg
    _expect(C, Eq(t, t), "conclusion")


def _eqE(node, s, C, P, opens):
    e = _is(P[0], Eq, "identity premise")
    _shape(node.template is not None, "eqE needs a :template")
    x, A = node.template
    _need(is_atomic(A), Kind.NotAtomic, f"eqE template {show(A)} is not atomic")
    if s.strict_eqE:
        _need(x in free_vars(A), Kind.SideConditionViolated, f"{x} does not occur in template {show(A)}")
        _need(e.left != e.right, Kind.SideConditionViolated, f"vacuous identity {show(e)}")
    _expect(P[1], _inst(A, x, e.left), "second premise")
    _expect(C, _inst(A, x, e.right), "conclusion")


def _AD(node, s, C, P, opens):
    a = P[0]
    _need(is_atomic(a) and atom_terms(a), Kind.NotAtomic, f"AD premise {show(a)} is not an atom with terms")
    t = _is(C, ExistsBang, "conclusion").arg
    _shape(t in atom_terms(a), f"{show(t)} is not an argument of {show(a)}")


def _iffI(node, s, C, P, opens):
    _is(C, Iff, "conclusion")
    _expect(P[0], C.right, "first premise")
    _expect(P[1], C.left, "second premise")
    _discharge(node, opens, 0, {C.left})
    _discharge(node, opens, 1, {C.right})


def _iffE1(node, s, C, P, opens):
    b = _is(P[0], Iff, "major premise")
    _expect(P[1], b.left, "minor premise")
    _expect(C, b.right, "conclusion")


def _iffE2(node, s, C, P, opens):
    b = _is(P[0], Iff, "major premise")
    _expect(P[1], b.right, "minor premise")
    _expect(C, b.left, "conclusion")


def _iotaI(node, s, C, P, opens):
    q = _is(C, IotaQ, "conclusion")
    if s.restricted_iota:
        _restricted(node, q)
    x, F, G = q.var, q.restrictor, q.matrix
    t = _is(P[2], ExistsBang, "third premise").arg
    _expect(P[0], _inst(F, x, t), "first premise")
    _expect(P[1], _inst(G, x, t), "second premise")
    e = _is(P[3], Eq, "fourth premise")
    _shape(isinstance(e.left, Var) and e.right == t, f"fourth premise must be z = {show(t)}, got {show(e)}")
    z = e.left.name
    if node.eigen is not None:
        _shape(node.eigen == z, f"eigenvariable {node.eigen} does not match {show(e)}")
    _need(z == x or z not in free_vars(F) | free_vars(G), Kind.EigenvariableNotFresh,
          f"eigenvariable {z} is free in the description")
    _need(z not in free_vars(t), Kind.EigenvariableNotFresh, f"eigenvariable {z} is free in {show(t)}")
    rest = _discharge(node, opens, 3, {_inst(F, x, Var(z)), ExistsBang(Var(z))})
    _fresh(z, rest, "iotaI")


def _iotaE1(node, s, C, P, opens):
    q = _is(P[0], IotaQ, "major premise")
    if s.restricted_iota:
        _restricted(node, q)
    x, F, G = q.var, q.restrictor, q.matrix
    _expect(P[1], C, "minor premise")
    z = _eigen_from(node, x)
    _need(z == x or z not in free_vars(F) | free_vars(G), Kind.EigenvariableNotFresh,
          f"eigenvariable {z} is free in {show(q)}")
    _need(z not in free_vars(C), Kind.EigenvariableNotFresh, f"eigenvariable {z} is free in {show(C)}")
    vz = Var(z)
    rest = _discharge(node, opens, 1, {_inst(F, x, vz), _inst(G, x, vz), ExistsBang(vz)})
    _fresh(z, rest, "iotaE1")


def _iotaE2(node, s, C, P, opens):
    q = _is(P[0], IotaQ, "major premise")
    if s.restricted_iota:
        _restricted(node, q)
    t1 = _is(P[1], ExistsBang, "second premise").arg
    t2 = _is(P[2], ExistsBang, "third premise").arg
    _expect(P[3], _inst(q.restrictor, q.var, t1), "fourth premise")
    _expect(P[4], _inst(q.restrictor, q.var, t2), "fifth premise")
    _expect(C, Eq(t1, t2), "conclusion")


def _iotaIT(node, s, C, P, opens):
    x, F, t = _tennant_major(C)
    _expect(P[0], ExistsBang(t), "first premise")
    e = _is(P[2], Eq, "third premise")
    _shape(isinstance(e.left, Var) and e.right == t, f"third premise must be z = {show(t)}, got {show(e)}")
    z = e.left.name
    if node.eigen is not None:
        _shape(node.eigen == z, f"eigenvariable {node.eigen} does not match {show(e)}")
    _need(z == x or z not in free_vars(F), Kind.EigenvariableNotFresh, f"eigenvariable {z} is free in {show(F)}")
    _need(z not in free_vars(t), Kind.EigenvariableNotFresh, f"eigenvariable {z} is free in {show(t)}")
    Fz = _inst(F, x, Var(z))
    _expect(P[1], Fz, "second premise")
    rest = _discharge(node, opens, 1, {e})
    _fresh(z, rest, "iotaIT, left subproof")
    rest = _discharge(node, opens, 2, {Fz, ExistsBang(Var(z))})
    _fresh(z, rest, "iotaIT, right subproof")


def _iotaE1T(node, s, C, P, opens):
    x, F, t = _tennant_major(P[0])
    e = _is(P[1], Eq, "minor premise")
    _shape(e.right == t, f"minor premise must be u = {show(t)}, got {show(e)}")
    _expect(C, _inst(F, x, e.left), "conclusion")


def _iotaE2T(node, s, C, P, opens):
    x, F, t = _tennant_major(P[0])
    u = _is(P[2], ExistsBang, "third premise").arg
    _expect(P[1], _inst(F, x, u), "second premise")
    _expect(C, Eq(u, t), "conclusion")


def _iotaE3T(node, s, C, P, opens):
    x, F, t = _tennant_major(P[0])
    _expect(C, ExistsBang(t), "conclusion")


_RULES = {
    "andI": _andI, "andE1": _andE1, "andE2": _andE2, "impI": _impI, "impE": _impE,
    "orI1": _orI1, "orI2": _orI2, "orE": _orE, "botE": _botE,
    "forallI": _forallI, "forallE": _forallE, "existsI": _existsI, "existsE": _existsE,
    "eqI": _eqI, "eqE": _eqE, "AD": _AD, "iffI": _iffI, "iffE1": _iffE1, "iffE2": _iffE2,
    "iotaI": _iotaI, "iotaE1": _iotaE1, "iotaE2": _iotaE2,
    "iotaIT": _iotaIT, "iotaE1T": _iotaE1T, "iotaE2T": _iotaE2T, "iotaE3T": _iotaE3T,
}


def check_proof(p: ProofNode, s: SystemSpec) -> Judgment:
    """Check every step of ``p`` in system ``s``, premises left to right before
    their conclusion.  Returns the proved judgment or raises the first
    :class:`CheckError` found."""

    def go(node, path):
        below = [go(q, path + (i,)) for i, q in enumerate(node.premises)]
        try:
            validate_step(node, s, [c.open for c in below])
            return _close(node, below)
        except CheckError as e:
            raise e.at(path) from None

    c = go(p, ())
    return Judgment(frozenset(h.formula for h in c.open), conclusion_of(p))


def conclusion_of(p: ProofNode) -> Formula:
    if p.rule == "axiom" and p.conclusion is None:
        return instantiate_axiom(p.scheme, dict(p.bindings))
    return p.conclusion


# --------------------------------------------------------------------------
# proof text

class ProofReader(Reader):

    def proof(self, node) -> ProofNode:
        if not isinstance(node, tuple):
            raise _err(node, "expected a proof")
        _, items = node
        if not items or not hasattr(items[0], "text"):
            raise _err(node, "expected a proof")
        head = items[0].text
        if head == "assume":
            if len(items) != 3 or not hasattr(items[1], "text"):
                raise _err(node, "expected (assume LABEL formula)")
            return assume(items[1].text, self.formula(items[2]))
        if head == "axiom":
            if len(items) < 2 or not hasattr(items[1], "text"):
                raise _err(node, "expected (axiom SCHEME binding*)")
            name = items[1].text
            scheme = AXIOMS.get(name)
            kinds = scheme.kinds() if scheme else {}
            rest = items[2:]
            if len(rest) % 2:
                raise _err(node, "axiom bindings come in :key value pairs")
            bindings = {}
            for k, v in zip(rest[::2], rest[1::2]):
                if not hasattr(k, "text") or not k.text.startswith(":"):
                    raise _err(k, "expected :key")
                key = k.text[1:]
                kind = kinds.get(key, "formula")
                if kind == "var":
                    bindings[key] = self.var(v)
                elif kind == "term":
                    bindings[key] = self.term(v)
                else:
                    bindings[key] = self.formula(v)
            return axiom(name, **bindings)
        if head == "rule":
            if len(items) < 3 or not hasattr(items[1], "text"):
                raise _err(node, "expected (rule NAME formula ...)")
            name = items[1].text
            concl = self.formula(items[2])
            opts: dict = {}
            premises = []
            i = 3
            while i < len(items):
                it = items[i]
                if hasattr(it, "text") and it.text.startswith(":"):
                    key = it.text
                    i += 1
                    if key in (":discharge", ":eigen"):
                        if i >= len(items) or not hasattr(items[i], "text"):
                            raise _err(it, f"{key} needs an argument")
                        opts[key] = items[i].text if key == ":discharge" else self.var(items[i])
                        i += 1
                    elif key == ":template":
                        if i + 1 >= len(items):
                            raise _err(it, ":template needs a variable and a formula")
                        opts[key] = (self.var(items[i]), self.formula(items[i + 1]))
                        i += 2
                    elif key == ":term":
                        terms = []
                        while i < len(items) and not _is_proof_or_key(items[i]):
                            terms.append(self.term(items[i]))
                            i += 1
                        if not terms:
                            raise _err(it, ":term needs at least one term")
                        opts[key] = tuple(terms)
                    else:
                        raise _err(it, f"unknown option {key}")
                else:
                    premises.append(self.proof(it))
                    i += 1
            return rule(name, concl, *premises, discharge=opts.get(":discharge"),
                        eigen=opts.get(":eigen"), terms=opts.get(":term", ()),
                        template=opts.get(":template"))
        raise _err(node, "expected assume, axiom or rule")


def _is_proof_or_key(item) -> bool:
    if hasattr(item, "text"):
        return item.text.startswith(":")
    _, sub = item
    return bool(sub) and hasattr(sub[0], "text") and sub[0].text in ("assume", "axiom", "rule")


@dataclass
class ProofFile:
    proof: ProofNode
    language: Optional[Language]
    variables: Optional[frozenset]


def parse_proof_file(text: str) -> ProofFile:
    """Read a proof script: ``#lang`` / ``#vars`` header lines, then one proof."""
    lang = None
    variables = None
    body = []
    for n, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            word, _, rest = stripped.partition(" ")
            if word == "#lang":
                try:
                    lang = Language(rest.strip())
                except ValueError:
                    raise ParseError(f"unknown language {rest.strip()!r}", n, 1) from None
            elif word == "#vars":
                variables = frozenset(rest.split())
            else:
                raise ParseError(f"unknown header {word}", n, 1)
            body.append("")
        else:
            body.append(line)
    nodes = read_sexprs("\n".join(body))
    if len(nodes) != 1:
        if not nodes:
            raise ParseError("no proof in file", 1, 1)
        raise _err(nodes[1], "one proof per file")
    is_var = default_is_var if variables is None else variables.__contains__
    return ProofFile(ProofReader(is_var).proof(nodes[0]), lang, variables)


def parse_proof(text: str, is_var=default_is_var) -> ProofNode:
    nodes = read_sexprs(text)
    if len(nodes) != 1:
        raise ParseError("expected exactly one proof", 1, 1)
    return ProofReader(is_var).proof(nodes[0])


def print_proof(p: ProofNode, indent: int = 0) -> str:
    pad = "  " * indent
    if p.rule == "assume":
        return f"{pad}(assume {p.label} {print_formula(p.conclusion)})"
    if p.rule == "axiom":
        parts = []
        for k, v in p.bindings:
            parts.append(f":{k} {v if isinstance(v, str) else show(v)}")
        return f"{pad}(axiom {p.scheme}{''.join(' ' + s for s in parts)})"
    head = f"{pad}(rule {p.rule} {print_formula(p.conclusion)}"
    if p.label is not None:
        head += f" :discharge {p.label}"
    if p.eigen is not None:
        head += f" :eigen {p.eigen}"
    if p.terms:
        head += " :term " + " ".join(print_term(t) for t in p.terms)
    if p.template is not None:
        head += f" :template {p.template[0]} {print_formula(p.template[1])}"
    if not p.premises:
        return head + ")"
    inner = "\n".join(print_proof(q, indent + 1) for q in p.premises)
    return f"{head}\n{inner})"
