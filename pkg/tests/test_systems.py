import dataclasses

import pytest

from conftest import judgment_of, load_proof, positive_entries
from infiota.derived import (
    expand_derived, leibniz, restricted_to_tennant, sym, tennant_to_ll, trans,
)
from infiota.errors import CheckError, Kind, UnknownSystem
from infiota.kernel import Judgment, assume, check_proof, rule
from infiota.syntax import (
    Abst, And, Const, Eq, Exists, ExistsBang, Forall, Iff, Imp, IotaQ, IotaTerm, Language, Pred, Var,
    parse_formula, substitute,
)
from infiota.systems import (
    AXIOMS, CLI_NAMES, CORE_RULES, IOTA_RULES, TENNANT_RULES, builtin_system, instantiate_axiom,
)
from infiota.translate import bridge_all, tau

x, y, z = Var("x"), Var("y"), Var("z")
a, b, c = Const("a"), Const("b"), Const("c")
Fx = Pred("F", (x,))
T = builtin_system("INF_T")
LL = builtin_system("INF_LL")


def F(t):
    return Pred("F", (t,))


def rules_used(p):
    return [n.rule for _, n in p.walk()]


# --------------------------------------------------------------------------
# the registry

def test_builtin_examples():
    assert builtin_system("INF_IOTA").rules >= IOTA_RULES
    base = builtin_system("INF")
    assert not base.rules & (IOTA_RULES | TENNANT_RULES)
    assert base.axioms == frozenset()
    assert T.rules & (IOTA_RULES | TENNANT_RULES) == TENNANT_RULES


def test_core_is_shared():
    for name in CLI_NAMES:
        s = builtin_system(name)
        assert s.rules >= CORE_RULES
        assert s.strict_eqE
        assert builtin_system(CLI_NAMES[name]) == s


def test_system_languages_and_axioms():
    assert builtin_system("INF-LL").axioms == {"LL"}
    assert builtin_system("INF-LLD").axioms == {"LL", "AbT", "RuI"}
    assert builtin_system("INF-LLD").language is Language.DELTA
    assert builtin_system("INF-iotaR").restricted_iota
    assert not builtin_system("INF-iota").restricted_iota
    assert all("AbPrime" not in builtin_system(n).axioms for n in CLI_NAMES)


def test_unknown_system():
    with pytest.raises(UnknownSystem):
        builtin_system("INF-X")


# --------------------------------------------------------------------------
# axiom schemes

def test_LL_instance():
    A = Pred("A", (x,))
    want = Forall("y", Iff(Eq(IotaTerm("x", A), y), Forall("x", Iff(A, Eq(x, y)))))
    assert instantiate_axiom("LL", {"x": "x", "y": "y", "F": A}) == want
    assert instantiate_axiom(AXIOMS["LL"], {"x": x, "y": y, "F": A}, Language.TLL) == want


def test_AbT_instance():
    B = Pred("B", (x,))
    want = Iff(Abst("x", B, c), And(ExistsBang(c), Pred("B", (c,))))
    assert instantiate_axiom("AbT", {"x": "x", "B": B, "t": c}) == want


def test_AbT_rejects_x_free_in_t():
    with pytest.raises(CheckError) as info:
        instantiate_axiom("AbT", {"x": "x", "B": Pred("B", (x,)), "t": x})
    assert info.value.kind is Kind.SideConditionViolated


def test_AbT_rejects_capture():
    B = Forall("y", Pred("R", (x, y)))
    with pytest.raises(CheckError) as info:
        instantiate_axiom("AbT", {"x": "x", "B": B, "t": y})
    assert info.value.kind is Kind.SideConditionViolated


def test_RuI_and_AbPrime_instances():
    A, B = Pred("A", (x,)), Pred("B", (x,))
    d = IotaTerm("x", A)
    ru = instantiate_axiom("RuI", {"x": "x", "B": B, "A": A, "z": "z"})
    assert ru == Iff(Abst("x", B, d), Exists("z", And(Eq(d, z), Pred("B", (z,)))))
    ab = instantiate_axiom("AbPrime", {"x": "x", "B": B, "t": c, "z": "z"})
    assert ab == Iff(Abst("x", B, c), Exists("z", And(Eq(c, z), Pred("B", (z,)))))


def test_axiom_language_and_bindings():
    with pytest.raises(CheckError) as info:
        instantiate_axiom("AbT", {"x": "x", "B": Pred("B", (x,)), "t": c}, Language.TLL)
    assert info.value.kind is Kind.LanguageViolation
    with pytest.raises(CheckError) as info:
        instantiate_axiom("LL", {"x": "x", "F": Fx})
    assert info.value.kind is Kind.PremiseShapeMismatch
    with pytest.raises(CheckError) as info:
        instantiate_axiom("LL", {"x": "x", "y": "x", "F": Fx})
    assert info.value.kind is Kind.SideConditionViolated


# --------------------------------------------------------------------------
# identity helpers

def test_sym_and_trans():
    s = check_proof(sym(assume(1, Eq(a, b))), builtin_system("INF"))
    assert s == Judgment(frozenset({Eq(a, b)}), Eq(b, a))
    t = check_proof(trans(assume(1, Eq(a, b)), assume(2, Eq(b, c))), builtin_system("INF"))
    assert t == Judgment(frozenset({Eq(a, b), Eq(b, c)}), Eq(a, c))


def test_leibniz_through_compound_formula():
    G = Forall("y", Imp(Pred("R", (x, y)), Exists("z", And(Fx, Pred("R", (z, x))))))
    p = leibniz(assume(1, Eq(a, b)), assume(2, _sub(G, a)), "x", G)
    j = check_proof(p, builtin_system("INF"))
    assert j.conclusion == _sub(G, b)
    assert j.assumptions == {Eq(a, b), _sub(G, a)}


def _sub(f, t):
    return substitute(f, "x", t)


# --------------------------------------------------------------------------
# derived-rule expansion

def _pi(label, t):
    """``z = t`` from ``[F z, ex! z]`` and an open uniqueness assumption."""
    uniq = assume("u", Forall("x", Imp(Fx, Eq(x, t))))
    step = rule("forallE", Imp(F(z), Eq(z, t)), uniq, assume(label, ExistsBang(z)))
    return rule("impE", Eq(z, t), step, assume(label, F(z)))


def test_iotaE2R_expansion():
    major = assume(1, Eq(IotaTerm("x", Fx), c))
    node = rule("iotaE2", Eq(a, b), major, assume(2, ExistsBang(a)), assume(3, ExistsBang(b)),
                assume(4, F(a)), assume(5, F(b)))
    out = expand_derived("iotaE2R_in_T", node)
    used = rules_used(out)
    assert used.count("iotaE2T") == 2
    # symmetry costs one identity elimination on top of the joining one
    assert 1 <= used.count("eqE") <= 2
    j = check_proof(out, T)
    assert j.conclusion == Eq(a, b)
    assert j.assumptions == {major.conclusion, ExistsBang(a), ExistsBang(b), F(a), F(b)}


def test_iotaIR_expansion():
    concl = IotaQ("x", Fx, Eq(x, c))
    node = rule("iotaI", concl, assume(1, F(a)), assume(2, Eq(a, c)), assume(3, ExistsBang(a)),
                _pi(7, a), discharge=7)
    out = expand_derived("iotaIR_in_T", node)
    assert out.rule == "iotaIT"
    # Leibniz steps carry F_t over to F_z
    xi = out.premises[1]
    assert xi.conclusion == F(z)
    assert "eqE" in rules_used(xi)
    j = check_proof(out, T)
    assert j.conclusion == Eq(IotaTerm("x", Fx), c)
    assert j.assumptions == {F(a), Eq(a, c), ExistsBang(a), Forall("x", Imp(Fx, Eq(x, a)))}


def test_iotaIR_expansion_same_term():
    node = rule("iotaI", IotaQ("x", Fx, Eq(x, c)), assume(1, F(c)), assume(2, Eq(c, c)),
                assume(3, ExistsBang(c)), _pi(7, c), discharge=7)
    j = check_proof(expand_derived("iotaIR_in_T", node), T)
    assert j.conclusion == Eq(IotaTerm("x", Fx), c)


def test_iotaE1R_expansion():
    major = assume(1, Eq(IotaTerm("x", Fx), c))
    minor = rule("eqE", F(c), assume(4, Eq(z, c)), assume(4, F(z)), template=("w", F(Var("w"))))
    node = rule("iotaE1", F(c), major, minor, discharge=4, eigen="z")
    out = expand_derived("iotaE1R_in_T", node)
    assert out.rule == "existsE"
    assert check_proof(out, T) == Judgment(frozenset({major.conclusion}), F(c))


def test_iotaIT_in_LL_expansion():
    entry = next(e for e in positive_entries() if e.id == "tennant-intro")
    node = load_proof(entry).proof
    assert node.rule == "iotaIT"
    out = expand_derived("iotaIT_in_LL", node)
    assert out.rule == "iffE2"
    assert out.premises[0].premises[0].rule == "axiom"
    assert out.premises[0].premises[0].scheme == "LL"
    assert check_proof(out, LL) == judgment_of(entry)


def test_expand_derived_errors():
    with pytest.raises(CheckError) as info:
        expand_derived("iotaE9", assume(1, Fx))
    assert info.value.kind is Kind.UnknownRule
    with pytest.raises(CheckError) as info:
        expand_derived("iotaE2R_in_T", rule("iotaE2", Eq(a, b), assume(1, Fx)))
    assert info.value.kind is Kind.PremiseShapeMismatch
    bad = rule("iotaI", IotaQ("x", Fx, Pred("G", (x,))), assume(1, F(a)), assume(2, F(a)),
               assume(3, ExistsBang(a)), _pi(7, a), discharge=7)
    with pytest.raises(CheckError) as info:
        expand_derived("iotaIR_in_T", bad)
    assert info.value.kind is Kind.PremiseShapeMismatch


# --------------------------------------------------------------------------
# subsystem chain over the corpus

def _entries(system):
    return [e for e in positive_entries() if e.system == system]


@pytest.mark.parametrize("entry", _entries("INF-T"), ids=lambda e: e.id)
def test_tennant_proofs_replay_in_LL(entry):
    out = tennant_to_ll(load_proof(entry).proof)
    assert not set(rules_used(out)) & TENNANT_RULES
    assert check_proof(out, LL) == judgment_of(entry)


@pytest.mark.parametrize("entry", _entries("INF-iotaR"), ids=lambda e: e.id)
def test_restricted_proofs_replay_in_T(entry):
    out = restricted_to_tennant(load_proof(entry).proof)
    assert not set(rules_used(out)) & IOTA_RULES
    j = judgment_of(entry)
    want = Judgment(frozenset(map(bridge_all, j.assumptions)), bridge_all(j.conclusion))
    assert check_proof(out, T) == want


def test_restricted_chain_reaches_LL():
    for entry in _entries("INF-iotaR"):
        out = tennant_to_ll(restricted_to_tennant(load_proof(entry).proof))
        assert check_proof(out, LL).conclusion == bridge_all(judgment_of(entry).conclusion)


def test_iotaE3T_is_an_atomic_denotation_step():
    replaced = 0
    for entry in _entries("INF-T"):
        proof = load_proof(entry).proof

        def swap(p):
            nonlocal replaced
            prem = tuple(swap(q) for q in p.premises)
            if p.rule == "iotaE3T":
                replaced += 1
                return rule("AD", p.conclusion, *prem)
            return dataclasses.replace(p, premises=prem)

        assert check_proof(swap(proof), T) == judgment_of(entry)
    assert replaced > 0


# --------------------------------------------------------------------------
# the Lambert systems against the binary quantifier

def test_LLD_judgments_have_translated_counterparts(judgments):
    iota = {e.id: judgments[e.id] for e in positive_entries() if e.system in ("INF-iota", "INF-iotaR")}
    for entry in _entries("INF-LLD"):
        j = judgments[entry.id]
        want = Judgment(frozenset(map(tau, j.assumptions)), tau(j.conclusion))
        assert want in iota.values(), entry.id


def test_restricted_entries_also_check_unrestricted():
    for entry in _entries("INF-iotaR"):
        j = check_proof(load_proof(entry).proof, builtin_system("INF-iota"))
        assert j == judgment_of(entry)


def test_bridge_notation_example():
    f = parse_formula("(iotaq x (A x) (= x y))")
    assert bridge_all(f) == parse_formula("(= (iota x (A x)) y)")
