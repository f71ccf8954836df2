import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load_proof, positive_entries
from gen import iota_formula
from infiota.errors import CheckError, Kind
from infiota.semantics import VALID, equivalent_upto
from infiota.syntax import (
    Abst, And, Const, Eq, Exists, Forall, Imp, IotaQ, IotaTerm, Language, Pred, Var, free_vars,
    parse_formula, subformulas, well_formed,
)
from infiota.translate import (
    bridge_all, bridge_restricted, expand_all, russell_expand, tau, tau_trace, upsilon, upsilon_trace,
)

x, y, z = Var("x"), Var("y"), Var("z")
c, d = Const("c"), Const("d")
A, B, P, Q = (Pred(s, (x,)) for s in "ABPQ")

formulas = st.builds(lambda seed, n: iota_formula(random.Random(seed), n),
                     st.integers(0, 10**9), st.integers(0, 5))


def contains(f, cls):
    from infiota.syntax import children
    stack = [f]
    while stack:
        e = stack.pop()
        if isinstance(e, cls):
            return True
        stack.extend(children(e))
    return False


# --------------------------------------------------------------------------
# tau

def test_tau_description_identity():
    f = Eq(IotaTerm("x", A), IotaTerm("y", Pred("B", (y,))))
    assert tau(f) == IotaQ("x", A, IotaQ("y", Pred("B", (y,)), Eq(x, y)))
    assert tau_trace(f).clauses_used == ["d.i", "a", "a"]


def test_tau_abstract_on_plain_term():
    assert tau(Abst("x", Pred("B", (x,)), c)) == IotaQ("x", Eq(c, x), Pred("B", (x,)))
    assert tau_trace(Abst("x", Pred("B", (x,)), c)).clauses_used[0] == "e.i"


def test_tau_homophonic_atom():
    f = Pred("P", (c,))
    assert tau(f) == f
    assert tau_trace(f).clauses_used == ["a"]


def test_tau_description_on_either_side():
    left = tau(Eq(IotaTerm("x", A), c))
    right = tau(Eq(c, IotaTerm("x", A)))
    assert left == right == IotaQ("x", A, Eq(x, c))


def test_tau_abstract_on_description():
    f = Abst("x", Pred("B", (x,)), IotaTerm("x", A))
    assert tau(f) == IotaQ("x", A, Pred("B", (x,)))
    g = Abst("y", Pred("B", (y,)), IotaTerm("x", A))
    assert tau(g) == IotaQ("y", Pred("A", (y,)), Pred("B", (y,)))


def test_tau_renames_to_avoid_capture():
    f = Eq(IotaTerm("x", Pred("A", (x, y))), x)
    tr = tau_trace(f)
    assert tr.output == IotaQ("z", Pred("A", (z, y)), Eq(z, x))
    assert tr.renamed == [("x", "z")]
    assert free_vars(tr.output) == free_vars(f)


def test_tau_inside_quantifier():
    ll = parse_formula("(forall y (<-> (= (iota x (A x)) y) (forall x (<-> (A x) (= x y)))))")
    want = parse_formula("(forall y (<-> (iotaq x (A x) (= x y)) (forall x (<-> (A x) (= x y)))))")
    assert tau(ll) == want


def test_tau_rejects_description_in_predicate():
    with pytest.raises(CheckError) as info:
        tau(Pred("G", (IotaTerm("x", A),)))
    assert info.value.kind is Kind.LanguageViolation


# --------------------------------------------------------------------------
# upsilon

def test_upsilon_examples():
    assert upsilon(IotaQ("x", A, B)) == Abst("x", B, IotaTerm("x", A))
    f = And(Pred("P", (c,)), Pred("Q", (d,)))
    assert upsilon(f) == f
    G = Pred("G", (y,))
    nested = IotaQ("x", Pred("F", (x,)), IotaQ("y", G, Eq(x, y)))
    assert upsilon(nested) == Abst("x", Abst("y", Eq(x, y), IotaTerm("y", G)),
                                   IotaTerm("x", Pred("F", (x,))))
    assert upsilon_trace(nested).clauses_used == ["upsilon", "upsilon", "a", "a", "a"]


def test_upsilon_tau_is_not_identity_but_equivalent():
    f = Eq(IotaTerm("x", A), c)
    back = upsilon(tau(f))
    assert back == Abst("x", Eq(x, c), IotaTerm("x", A))
    assert back != f
    assert equivalent_upto(f, back, 3) == VALID


# --------------------------------------------------------------------------
# properties

@settings(max_examples=300, deadline=None)
@given(formulas)
def test_tau_upsilon_identity(f):
    assert tau(upsilon(f)) == f


@settings(max_examples=300, deadline=None)
@given(formulas)
def test_output_languages(f):
    u = upsilon(f)
    assert not contains(u, IotaQ)
    assert well_formed(u, Language.DELTA)
    t = tau(u)
    assert not contains(t, (IotaTerm, Abst))
    assert well_formed(t, Language.IOTA)


@settings(max_examples=300, deadline=None)
@given(formulas)
def test_free_variables_preserved(f):
    u = upsilon(f)
    assert free_vars(u) == free_vars(f)
    assert free_vars(tau(u)) == free_vars(u)


@settings(max_examples=100, deadline=None)
@given(formulas)
def test_trace_nonempty_for_compound_input(f):
    if not isinstance(f, (Pred, Eq)):
        assert tau_trace(upsilon(f)).clauses_used


def _delta_formulas():
    out = []
    for entry in positive_entries():
        if entry.system not in ("INF-T", "INF-LL", "INF-LLD"):
            continue
        for _, node in load_proof(entry).proof.walk():
            if node.conclusion is not None and node.conclusion not in out:
                out.append(node.conclusion)
    return out


def test_semantic_preservation_over_corpus():
    fs = _delta_formulas()
    assert len(fs) > 30
    for f in fs:
        assert equivalent_upto(f, tau(f), 3) == VALID, f


def test_tau_on_every_subformula_of_corpus_is_defined():
    for f in _delta_formulas():
        for s in subformulas(f):
            tau(s)


# --------------------------------------------------------------------------
# Russellian expansion and the notational bridge

def test_russell_examples():
    assert russell_expand(IotaQ("x", P, Q)) == Exists(
        "x", And(And(P, Forall("y", Imp(Pred("P", (y,)), Eq(x, y)))), Q))
    xc = Eq(x, c)
    assert russell_expand(IotaQ("x", xc, Q)) == Exists(
        "x", And(And(xc, Forall("y", Imp(Eq(y, c), Eq(x, y)))), Q))


def test_russell_fresh_variable_skips_used_names():
    f = IotaQ("x", Pred("R", (x, y)), Pred("Q", (y,)))
    out = russell_expand(f)
    assert out.body.left.right.var == "z"


def test_russell_semantic_agreement_one_predicate():
    f = IotaQ("x", P, Pred("P", (x,)))
    assert equivalent_upto(f, russell_expand(f), 3) == VALID


def test_russell_rejects_non_description():
    with pytest.raises(CheckError) as info:
        russell_expand(P)
    assert info.value.kind is Kind.PremiseShapeMismatch


def test_expand_all_removes_every_description():
    f = parse_formula("(iotaq x (A x) (iotaq y (B y) (= x y)))")
    out = expand_all(f)
    assert not contains(out, IotaQ)
    assert equivalent_upto(f, out, 3) == VALID


def test_bridge_examples():
    tll = Eq(IotaTerm("x", Pred("F", (x,))), c)
    iota = IotaQ("x", Pred("F", (x,)), Eq(x, c))
    assert bridge_restricted(tll) == iota
    assert bridge_restricted(iota) == tll
    assert bridge_restricted(bridge_restricted(tll)) == tll
    assert bridge_restricted(bridge_restricted(iota)) == iota
    assert bridge_restricted(Eq(c, IotaTerm("x", Pred("F", (x,))))) == iota


def test_bridge_rejects_other_shapes():
    for f in (IotaQ("x", P, Q), IotaQ("x", P, Eq(c, x)), Eq(c, d), Eq(IotaTerm("x", P), x)):
        with pytest.raises(CheckError) as info:
            bridge_restricted(f)
        assert info.value.kind is Kind.PremiseShapeMismatch
    assert bridge_all(Forall("y", Imp(IotaQ("x", P, Eq(x, y)), Pred("P", (y,))))) == \
        Forall("y", Imp(Eq(IotaTerm("x", P), y), Pred("P", (y,))))
