"""Derived rules as proof-building macros, and whole-proof transformers.

Every macro returns an ordinary :class:`ProofNode` tree built only from the
host system's primitives, so the kernel re-checks it like any other proof.
Identity elimination is one-directional (``a = b`` and ``A[a]`` give
``A[b]``), so the constructions insert :func:`sym` wherever the reverse
orientation is needed.
"""

from __future__ import annotations

import dataclasses
import itertools

from .errors import CheckError, Kind
from .kernel import ProofNode, assume, assumption_closure, axiom, rule
from .syntax import (
    And, Eq, Exists, ExistsBang, Forall, Iff, Imp, IotaQ, IotaTerm, Or, Var,
    all_vars, free_vars, fresh_var, is_atomic, show, substitute,
)
from .translate import bridge_all, bridge_restricted

# --------------------------------------------------------------------------
# small helpers


def labels(p: ProofNode) -> set:
    return {n.label for _, n in p.walk() if n.label is not None}


def fresh_label(used, stem="d") -> str:
    for i in itertools.count(1):
        if f"{stem}{i}" not in used:
            return f"{stem}{i}"


def open_formulas(p: ProofNode) -> set:
    return {h.formula for h in assumption_closure(p)[()]}


def _fv_open(*proofs) -> set:
    out = set()
    for p in proofs:
        for f in open_formulas(p):
            out |= free_vars(f)
    return out


def _eq(p: ProofNode) -> Eq:
    f = p.conclusion
    if not isinstance(f, Eq):
        raise CheckError(Kind.PremiseShapeMismatch, f"expected an identity, got {show(f)}")
    return f


def _subst(f, x, t):
    try:
        return substitute(f, x, t)
    except ValueError as e:
        raise CheckError(Kind.CaptureError, str(e)) from None


def refl(exists_t: ProofNode) -> ProofNode:
    """``t = t`` from a proof of ``∃!t``."""
    t = exists_t.conclusion.arg
    return rule("eqI", Eq(t, t), exists_t)


def sym(e: ProofNode, exists_a: ProofNode = None) -> ProofNode:
    """``b = a`` from a proof of ``a = b``: identity introduction and one eqE.

    ``∃!a`` comes from ``exists_a`` when given, else by AD on ``e``.
    """
    a, b = _eq(e).left, _eq(e).right
    if a == b:
        return e
    if exists_a is None:
        exists_a = rule("AD", ExistsBang(a), e)
    elif exists_a.conclusion != ExistsBang(a):
        raise CheckError(Kind.PremiseShapeMismatch, f"expected a proof of {show(ExistsBang(a))}")
    w = fresh_var(all_vars(a) | all_vars(b))
    aa = refl(exists_a)
    return rule("eqE", Eq(b, a), e, aa, template=(w, Eq(Var(w), a)))


def trans(e1: ProofNode, e2: ProofNode) -> ProofNode:
    """``a = c`` from ``a = b`` and ``b = c``."""
    a, b = _eq(e1).left, _eq(e1).right
    b2, c = _eq(e2).left, _eq(e2).right
    if b != b2:
        raise CheckError(Kind.PremiseShapeMismatch, f"{show(e1.conclusion)} and {show(e2.conclusion)} do not chain")
    if b == c:
        return e1
    if a == b:
        return e2
    w = fresh_var(all_vars(a) | all_vars(b) | all_vars(c))
    return rule("eqE", Eq(a, c), e2, e1, template=(w, Eq(a, Var(w))))


def leibniz(e: ProofNode, p: ProofNode, x: str, F) -> ProofNode:
    """``F[b/x]`` from ``a = b`` (proof ``e``) and ``F[a/x]`` (proof ``p``).

    Atomic ``F`` takes one eqE; compound ``F`` is handled by recursion
    through the connectives and quantifiers, introducing fresh labels and
    eigenvariables as needed.
    """
    a, b = _eq(e).left, _eq(e).right
    target = _subst(F, x, b)
    if p.conclusion != _subst(F, x, a):
        raise CheckError(Kind.PremiseShapeMismatch,
                         f"{show(p.conclusion)} is not {show(F)} with {show(a)} for {x}")
    if a == b or x not in free_vars(F):
        return p
    if is_atomic(F):
        return rule("eqE", target, e, p, template=(x, F))
    used = labels(e) | labels(p)
    if isinstance(F, And):
        left = leibniz(e, rule("andE1", _subst(F.left, x, a), p), x, F.left)
        right = leibniz(e, rule("andE2", _subst(F.right, x, a), p), x, F.right)
        return rule("andI", target, left, right)
    if isinstance(F, Or):
        i = fresh_label(used)
        la = assume(i, _subst(F.left, x, a))
        ra = assume(i, _subst(F.right, x, a))
        left = rule("orI1", target, leibniz(e, la, x, F.left))
        right = rule("orI2", target, leibniz(e, ra, x, F.right))
        return rule("orE", target, p, left, right, discharge=i)
    if isinstance(F, Imp):
        i = fresh_label(used)
        back = leibniz(sym(e), assume(i, _subst(F.left, x, b)), x, F.left)
        step = rule("impE", _subst(F.right, x, a), p, back)
        return rule("impI", target, leibniz(e, step, x, F.right), discharge=i)
    if isinstance(F, Iff):
        i = fresh_label(used)
        # each direction: take the b-side back to a, cross the biconditional, come forward
        back_l = leibniz(sym(e), assume(i, _subst(F.left, x, b)), x, F.left)
        to_r = leibniz(e, rule("iffE1", _subst(F.right, x, a), p, back_l), x, F.right)
        back_r = leibniz(sym(e), assume(i, _subst(F.right, x, b)), x, F.right)
        to_l = leibniz(e, rule("iffE2", _subst(F.left, x, a), p, back_r), x, F.left)
        return rule("iffI", target, to_r, to_l, discharge=i)
    if isinstance(F, (Forall, Exists)):
        y = F.var
        avoid = all_vars(F) | all_vars(a) | all_vars(b) | _fv_open(e, p) | {x}
        y2 = fresh_var(avoid)
        body = _subst(F.body, y, Var(y2))
        i = fresh_label(used)
        ey = assume(i, ExistsBang(Var(y2)))
        if isinstance(F, Forall):
            inst = rule("forallE", _subst(body, x, a), p, ey)
            return rule("forallI", target, leibniz(e, inst, x, body), discharge=i, eigen=y2)
        moved = leibniz(e, assume(i, _subst(body, x, a)), x, body)
        back = rule("existsI", target, moved, ey)
        return rule("existsE", target, p, back, discharge=i, eigen=y2)
    raise CheckError(Kind.PremiseShapeMismatch, f"no Leibniz construction for {show(F)}")


def relabel(p: ProofNode, label: str, new: str, formula) -> ProofNode:
    """Move the open leaves ``(assume label formula)`` of ``p`` to ``new``."""
    if p.rule == "assume":
        if p.label == label and p.conclusion == formula:
            return assume(new, formula)
        return p
    if p.label == label:
        return p  # the label is rebound here; leaves above are not ours
    return dataclasses.replace(p, premises=tuple(relabel(q, label, new, formula) for q in p.premises))


def replace_leaves(p: ProofNode, label: str, table: dict) -> ProofNode:
    """Swap open leaves under ``label`` whose formula is a key of ``table`` for the mapped proof."""
    if p.rule == "assume":
        if p.label == label and p.conclusion in table:
            return table[p.conclusion]
        return p
    if p.label == label:
        return p
    return dataclasses.replace(p, premises=tuple(replace_leaves(q, label, table) for q in p.premises))


# --------------------------------------------------------------------------
# the derived rules


def iotaIT_in_LL(concl, exists_t: ProofNode, xi: ProofNode, pi: ProofNode, label: str) -> ProofNode:
    """Tennant's introduction rule inside the Lambert's Law system.

    ``xi`` proves ``F_z`` from ``[z = t]``, ``pi`` proves ``z = t`` from
    ``[F_z, ∃!z]``, both under ``label``.  The result closes both with
    iffI, generalises over ``z``, and detaches against an LL instance.
    """
    if not (isinstance(concl, Eq) and isinstance(concl.left, IotaTerm)):
        raise CheckError(Kind.PremiseShapeMismatch, f"{show(concl)} is not (iota x F) = t")
    x, F, t = concl.left.bound, concl.left.body, concl.right
    zt = pi.conclusion
    if not (isinstance(zt, Eq) and isinstance(zt.left, Var) and zt.right == t):
        raise CheckError(Kind.PremiseShapeMismatch, f"right subproof must end in z = {show(t)}")
    z = zt.left.name
    vz = Var(z)
    j = fresh_label(labels(xi) | labels(pi) | labels(exists_t) | {label})
    pi2 = relabel(pi, label, j, ExistsBang(vz))
    body = Iff(F, Eq(Var(x), t))
    bic = rule("iffI", Iff(_subst(F, x, vz), zt), pi2, xi, discharge=label)
    gen = rule("forallI", Forall(x, body), bic, discharge=j, eigen=z)
    y = fresh_var(all_vars(F) | all_vars(t) | {x})
    ll = axiom("LL", x=x, y=y, F=F)
    inst = rule("forallE", Iff(concl, Forall(x, body)), ll, exists_t, terms=(t,))
    return rule("iffE2", concl, inst, gen)


def _as_tennant(f):
    return bridge_restricted(f) if isinstance(f, IotaQ) else f


def iotaIR_in_T(concl, f_t: ProofNode, g_t: ProofNode, exists_t: ProofNode, pi: ProofNode,
                label: str) -> ProofNode:
    """Restricted introduction ``ιx[F, x = u]`` via Tennant's rule.

    Premises as for iotaI: ``F_t``, ``t = u``, ``∃!t`` and ``pi`` proving
    ``z = t`` from ``[F_z, ∃!z]``.
    """
    d = _as_tennant(concl)
    x, F, u = d.left.bound, d.left.body, d.right
    t = exists_t.conclusion.arg
    tu = g_t.conclusion
    if tu != Eq(t, u):
        raise CheckError(Kind.PremiseShapeMismatch, f"second premise must be {show(Eq(t, u))}")
    zt = pi.conclusion
    if not (isinstance(zt, Eq) and isinstance(zt.left, Var) and zt.right == t):
        raise CheckError(Kind.PremiseShapeMismatch, f"last premise must end in z = {show(t)}")
    z = zt.left.name
    zu = Eq(Var(z), u)
    i = fresh_label(labels(f_t) | labels(g_t) | labels(exists_t) | labels(pi) | {label})
    # Ξ: from [z = u] get z = t, flip it, and carry F_t over to F_z
    z_t = trans(assume(i, zu), sym(g_t, exists_t)) if u != t else assume(i, zu)
    xi = leibniz(sym(z_t), f_t, x, F)
    # Π': z = t then t = u gives z = u; its discharged class moves to the new label
    pi2 = relabel(relabel(pi, label, i, _subst(F, x, Var(z))), label, i, ExistsBang(Var(z)))
    pi2 = trans(pi2, g_t)
    exists_u = rule("AD", ExistsBang(u), g_t) if u != t else exists_t
    return rule("iotaIT", d, exists_u, xi, pi2, discharge=i)


def iotaE1R_in_T(major: ProofNode, minor: ProofNode, label: str, eigen=None) -> ProofNode:
    """Restricted first elimination via ∃E on ``∃x(F ∧ x = t)``."""
    d = _as_tennant(major.conclusion)
    x, F, t = d.left.bound, d.left.body, d.right
    z = eigen if eigen is not None else x
    e3 = rule("iotaE3T", ExistsBang(t), major)
    tt = refl(e3)
    f_t = rule("iotaE1T", _subst(F, x, t), major, tt)
    body = And(F, Eq(Var(x), t))
    conj = rule("andI", _subst(body, x, t), f_t, tt)
    ex = rule("existsI", Exists(x, body), conj, rule("iotaE3T", ExistsBang(t), major))
    f_z, z_t = _subst(F, x, Var(z)), Eq(Var(z), t)
    hyp = assume(label, And(f_z, z_t))
    table = {z_t: rule("andE2", z_t, hyp), f_z: rule("andE1", f_z, hyp)}
    return rule("existsE", minor.conclusion, ex, replace_leaves(minor, label, table),
                discharge=label, eigen=z)


def iotaE2R_in_T(major: ProofNode, e1: ProofNode, e2: ProofNode, f1: ProofNode, f2: ProofNode) -> ProofNode:
    """Restricted second elimination: two iotaE2T steps joined by identity reasoning."""
    d = major.conclusion
    t1, t2 = e1.conclusion.arg, e2.conclusion.arg
    if t1 == t2:
        return refl(e1)
    a = rule("iotaE2T", Eq(t1, d.right), major, f1, e1)
    b = rule("iotaE2T", Eq(t2, d.right), major, f2, e2)
    return trans(a, sym(b, e2))


DERIVED = ("iotaIT_in_LL", "iotaIR_in_T", "iotaE1R_in_T", "iotaE2R_in_T")


def expand_derived(name: str, node: ProofNode) -> ProofNode:
    """Expand one derived-rule instance into host-system primitives.

    ``node`` is written as the corresponding primitive step (iotaIT for
    ``iotaIT_in_LL``; iotaI / iotaE1 / iotaE2 for the restricted rules),
    with premise subproofs already in the host system and restricted
    descriptions in either notation.
    """
    P = node.premises
    try:
        if name == "iotaIT_in_LL":
            _arity(node, 3)
            return iotaIT_in_LL(node.conclusion, P[0], P[1], P[2], node.label)
        if name == "iotaIR_in_T":
            _arity(node, 4)
            return iotaIR_in_T(node.conclusion, *P, label=node.label)
        if name == "iotaE1R_in_T":
            _arity(node, 2)
            return iotaE1R_in_T(P[0], P[1], node.label, node.eigen)
        if name == "iotaE2R_in_T":
            _arity(node, 5)
            return iotaE2R_in_T(*P)
    except (AttributeError, TypeError) as e:
        raise CheckError(Kind.PremiseShapeMismatch, f"{name}: {e}") from None
    raise CheckError(Kind.UnknownRule, f"no derived rule {name}")


def _arity(node, n):
    if len(node.premises) != n:
        raise CheckError(Kind.PremiseShapeMismatch, f"expected {n} premises, got {len(node.premises)}")



# --------------------------------------------------------------------------
# whole-proof transformers


def _map(p: ProofNode, step) -> ProofNode:
    premises = tuple(_map(q, step) for q in p.premises)
    return step(p, premises)


def _ll_biconditional(major: ProofNode, u_exists: ProofNode) -> ProofNode:
    """``F_u ↔ u = t`` from ``(iota x F) = t`` via an LL instance."""
    d = major.conclusion
    x, F, t = d.left.bound, d.left.body, d.right
    y = fresh_var(all_vars(F) | all_vars(t) | {x})
    body = Iff(F, Eq(Var(x), t))
    inst = rule("forallE", Iff(d, Forall(x, body)), axiom("LL", x=x, y=y, F=F),
                rule("AD", ExistsBang(t), major))
    gen = rule("iffE1", Forall(x, body), inst, major)
    u = u_exists.conclusion.arg
    return rule("forallE", _subst(body, x, u), gen, u_exists)


def tennant_to_ll(p: ProofNode) -> ProofNode:
    """Rewrite a proof using Tennant's rules into one using the LL axiom instead."""

    def step(node, P):
        r = node.rule
        if r == "iotaE1T":
            ut = P[1].conclusion
            bic = _ll_biconditional(P[0], rule("AD", ExistsBang(ut.left), P[1]))
            return rule("iffE2", node.conclusion, bic, P[1])
        if r == "iotaE2T":
            return rule("iffE1", node.conclusion, _ll_biconditional(P[0], P[2]), P[1])
        if r == "iotaE3T":
            return rule("AD", node.conclusion, P[0])
        if r == "iotaIT":
            return iotaIT_in_LL(node.conclusion, P[0], P[1], P[2], node.label)
        return dataclasses.replace(node, premises=P)

    return _map(p, step)


def restricted_to_tennant(p: ProofNode) -> ProofNode:
    """Rewrite a restricted binary-quantifier proof into Tennant's system.

    Every formula passes through :func:`bridge_all`; the three ι rules are
    replaced by their derived-rule constructions.
    """

    def step(node, P):
        r = node.rule
        if r == "assume":
            return assume(node.label, bridge_all(node.conclusion))
        if r == "axiom":
            return node
        C = bridge_all(node.conclusion)
        if r == "iotaI":
            return iotaIR_in_T(C, *P, label=node.label)
        if r == "iotaE1":
            return iotaE1R_in_T(P[0], P[1], node.label, node.eigen)
        if r == "iotaE2":
            return iotaE2R_in_T(*P)
        template = node.template
        if template is not None:
            template = (template[0], bridge_all(template[1]))
        return dataclasses.replace(node, conclusion=C, premises=P, template=template)

    return _map(p, step)
