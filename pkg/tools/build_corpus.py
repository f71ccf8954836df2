"""Regenerate the proof corpus under src/infiota/corpus/.

Proofs are assembled with the builder API (and the derived-rule macros where
a construction calls for them), then written out as proof scripts together
with manifest.txt.  Run from the repository root:

    python3 tools/build_corpus.py [--check]

With --check nothing is written; the exit status says whether the files on
disk match what this script would produce.
"""

import argparse
import sys
from pathlib import Path

from infiota.derived import (
    expand_derived, leibniz, refl, restricted_to_tennant, sym, tennant_to_ll,
)
from infiota.kernel import ProofNode, axiom, print_proof, rule
from infiota.kernel import assume as _assume
from infiota.syntax import all_vars, parse_formula, parse_term

OUT = Path(__file__).resolve().parent.parent / "src" / "infiota" / "corpus"

LANG = {"INF": "L_INF", "INF-iota": "L_IOTA", "INF-iotaR": "L_IOTA", "INF-T": "L_TLL",
        "INF-LL": "L_TLL", "INF-LLD": "L_DELTA"}


def f(text):
    return parse_formula(text)


def H(label, text):
    return _assume(label, f(text))


def R(name, concl, *premises, **kw):
    return rule(name, f(concl), *premises, **kw)


def eqE(concl, eq, prem, x, template):
    return R("eqE", concl, eq, prem, template=(x, f(template)))


# --------------------------------------------------------------------------
# restricted binary quantifier: Lambert's Law in ιx[A, x = y] form

D_LL = "(iotaq x (A x) (= x y))"
U_LL = "(forall x (<-> (A x) (= x y)))"


def llprime_fwd(major):
    inner = R("iotaE1", "(A x)", major,
              eqE("(A x)", sym(H("2", "(= x y)")),
                  eqE("(A y)", H("1", "(= z y)"), H("1", "(A z)"), "x", "(A x)"),
                  "x", "(A x)"),
              discharge="1", eigen="z")
    exists_y = eqE("(ex! y)", H("4", "(= z y)"), H("4", "(ex! z)"), "w", "(ex! w)")
    a_y = eqE("(A y)", H("4", "(= z y)"), H("4", "(A z)"), "x", "(A x)")
    to_eq = R("iotaE2", "(= x y)", major, H("3", "(ex! x)"), exists_y, H("2", "(A x)"), a_y)
    bic = R("iffI", "(<-> (A x) (= x y))", to_eq, inner, discharge="2")
    gen = R("forallI", U_LL, bic, discharge="3", eigen="x")
    return R("iotaE1", U_LL, major, gen, discharge="4", eigen="z")


def llprime_bwd(univ, exists_y):
    a_y = R("iffE2", "(A y)", R("forallE", "(<-> (A y) (= y y))", univ, exists_y), refl(exists_y))
    pi = R("iffE1", "(= z y)", R("forallE", "(<-> (A z) (= z y))", univ, H("1", "(ex! z)")),
           H("1", "(A z)"))
    return R("iotaI", D_LL, a_y, refl(exists_y), exists_y, pi, discharge="1")


def llprime():
    fwd = llprime_fwd(H("5", D_LL))
    bwd = llprime_bwd(H("5", U_LL), H("6", "(ex! y)"))
    bic = R("iffI", f"(<-> {D_LL} {U_LL})", fwd, bwd, discharge="5")
    return R("forallI", f"(forall y (<-> {D_LL} {U_LL}))", bic, discharge="6", eigen="y")


# --------------------------------------------------------------------------
# Tennant's rules and the constructions relating the three systems

PI_TEXT = "(forall x (-> (F x) (= x c)))"


def pi_z():
    """z = c from [F z, ∃!z] with the uniqueness fact left open."""
    return R("impE", "(= z c)",
             R("forallE", "(-> (F z) (= z c))", H("h", PI_TEXT), H("1", "(ex! z)")),
             H("1", "(F z)"))


def xi_z():
    """F z from [z = c] with F c left open."""
    return leibniz(sym(H("1", "(= z c)")), H("h", "(F c)"), "x", f("(F x)"))


def tennant_intro_node():
    return R("iotaIT", "(= (iota x (F x)) c)", H("h", "(ex! c)"), xi_z(), pi_z(), discharge="1")


def restricted_intro_node():
    ex = H("h", "(ex! c)")
    return R("iotaI", "(iotaq x (F x) (= x c))", H("h", "(F c)"), refl(ex), ex, pi_z(), discharge="1")


def restricted_elim1_node(major):
    minor = eqE("(F c)", H("1", "(= z c)"), H("1", "(F z)"), "x", "(F x)")
    return R("iotaE1", "(F c)", major, minor, discharge="1", eigen="z")


def restricted_elim2_node(major):
    return R("iotaE2", "(= a b)", major, H("h", "(ex! a)"), H("h", "(ex! b)"),
             H("h", "(F a)"), H("h", "(F b)"))


def construction_1():
    return expand_derived("iotaIR_in_T", restricted_intro_node())


def construction_2():
    node = restricted_elim1_node(H("h", "(= (iota x (F x)) c)"))
    return expand_derived("iotaE1R_in_T", node)


def construction_3():
    return expand_derived("iotaE2R_in_T", restricted_elim2_node(H("h", "(= (iota x (F x)) c)")))


def tennant_in_ll():
    return expand_derived("iotaIT_in_LL", tennant_intro_node())


# --------------------------------------------------------------------------
# redundancy of the two abstraction axioms

def redundancy_1():
    k = H("h", "(and (ex! c) (B c))")
    ex = R("andE1", "(ex! c)", k)
    conj = R("andI", "(and (= c c) (B c))", refl(ex), R("andE2", "(B c)", k))
    return R("existsI", "(exists z (and (= c z) (B z)))", conj, R("andE1", "(ex! c)", k))


def redundancy_2():
    h = H("1", "(and (= c z) (B z))")
    cz = R("andE1", "(= c z)", h)
    b_c = eqE("(B c)", sym(cz), R("andE2", "(B z)", h), "x", "(B x)")
    body = R("andI", "(and (ex! c) (B c))", R("AD", "(ex! c)", cz), b_c)
    return R("existsE", "(and (ex! c) (B c))", H("h", "(exists z (and (= c z) (B z)))"), body,
             discharge="1", eigen="z")


# --------------------------------------------------------------------------
# translated abstraction axioms, binary quantifier side

def abtau_1():
    major = H("h", "(iotaq x (= c x) (B x))")
    cx = H("1", "(= c x)")
    b_c = eqE("(B c)", sym(cx), H("1", "(B x)"), "x", "(B x)")
    body = R("andI", "(and (ex! c) (B c))", R("AD", "(ex! c)", cx), b_c)
    return R("iotaE1", "(and (ex! c) (B c))", major, body, discharge="1", eigen="x")


def abtau_2():
    k = H("h", "(and (ex! c) (B c))")
    ex = R("andE1", "(ex! c)", k)
    return R("iotaI", "(iotaq x (= c x) (B x))", refl(ex), R("andE2", "(B c)", k), ex,
             sym(H("1", "(= c z)")), discharge="1")


def abtau_1_xt():
    major = H("h", "(iotaq x (= x c) (B x))")
    xc = H("1", "(= x c)")
    b_c = eqE("(B c)", xc, H("1", "(B x)"), "x", "(B x)")
    body = R("andI", "(and (ex! c) (B c))", R("AD", "(ex! c)", xc), b_c)
    return R("iotaE1", "(and (ex! c) (B c))", major, body, discharge="1", eigen="x")


def abtau_2_xt():
    k = H("h", "(and (ex! c) (B c))")
    ex = R("andE1", "(ex! c)", k)
    return R("iotaI", "(iotaq x (= x c) (B x))", refl(ex), R("andE2", "(B c)", k), ex,
             H("1", "(= z c)"), discharge="1")


D_AB = "(iotaq x (A x) (B x))"
RU_RHS = "(exists z (and (iotaq x (A x) (= x z)) (B z)))"


def rutau_1():
    major = H("h", D_AB)
    pi = R("iotaE2", "(= x z)", major, H("1", "(ex! x)"), H("2", "(ex! z)"), H("1", "(A x)"),
           H("2", "(A z)"))
    desc = R("iotaI", "(iotaq x (A x) (= x z))", H("2", "(A z)"), refl(H("2", "(ex! z)")),
             H("2", "(ex! z)"), pi, discharge="1")
    conj = R("andI", "(and (iotaq x (A x) (= x z)) (B z))", desc, H("2", "(B z)"))
    body = R("existsI", RU_RHS, conj, H("2", "(ex! z)"))
    return R("iotaE1", RU_RHS, major, body, discharge="2", eigen="z")


def rutau_2():
    h = H("3", "(and (iotaq x (A x) (= x z)) (B z))")
    dz = R("andE1", "(iotaq x (A x) (= x z))", h)
    a_z = eqE("(A z)", H("2", "(= x z)"), H("2", "(A x)"), "x", "(A x)")
    pi = R("iotaE2", "(= y z)", dz, H("1", "(ex! y)"), H("3", "(ex! z)"), H("1", "(A y)"), a_z)
    intro = R("iotaI", D_AB, a_z, R("andE2", "(B z)", h), H("3", "(ex! z)"), pi, discharge="1")
    body = R("iotaE1", D_AB, dz, intro, discharge="2", eigen="x")
    return R("existsE", D_AB, H("h", RU_RHS), body, discharge="3", eigen="z")


# --------------------------------------------------------------------------
# Russellian theses and the uses of descriptions as terms

D_EX = "(iotaq x (A x) (ex! x))"
R1_RHS = "(exists y (forall x (<-> (A x) (= x y))))"


def r1tau_1():
    major = H("h", D_EX)
    to_eq = R("iotaE2", "(= x y)", major, H("2", "(ex! x)"), H("3", "(ex! y)"), H("1", "(A x)"),
              H("3", "(A y)"))
    back = eqE("(A x)", sym(H("1", "(= x y)")), H("3", "(A y)"), "x", "(A x)")
    bic = R("iffI", "(<-> (A x) (= x y))", to_eq, back, discharge="1")
    gen = R("forallI", "(forall x (<-> (A x) (= x y)))", bic, discharge="2", eigen="x")
    body = R("existsI", R1_RHS, gen, H("3", "(ex! y)"))
    return R("iotaE1", R1_RHS, major, body, discharge="3", eigen="y")


def r1tau_2():
    univ = H("2", "(forall x (<-> (A x) (= x y)))")
    ey = H("2", "(ex! y)")
    a_y = R("iffE2", "(A y)", R("forallE", "(<-> (A y) (= y y))", univ, ey), refl(ey))
    pi = R("iffE1", "(= v y)", R("forallE", "(<-> (A v) (= v y))", univ, H("1", "(ex! v)")),
           H("1", "(A v)"))
    intro = R("iotaI", D_EX, a_y, ey, ey, pi, discharge="1")
    return R("existsE", D_EX, H("h", R1_RHS), intro, discharge="2", eigen="y")


def r3tau():
    body = eqE("(A c)", H("1", "(= x c)"), H("1", "(A x)"), "x", "(A x)")
    return R("iotaE1", "(A c)", H("h", "(iotaq x (A x) (= x c))"), body, discharge="1", eigen="x")


def r3_exists():
    body = eqE("(ex! c)", H("1", "(= x c)"), H("1", "(ex! x)"), "w", "(ex! w)")
    return R("iotaE1", "(ex! c)", H("h", "(iotaq x (A x) (= x c))"), body, discharge="1", eigen="x")


def r4():
    major = H("h", D_EX)
    pi = R("iotaE2", "(= v z)", major, H("1", "(ex! v)"), H("2", "(ex! z)"), H("1", "(A v)"),
           H("2", "(A z)"))
    intro = R("iotaI", "(iotaq x (A x) (A x))", H("2", "(A z)"), H("2", "(A z)"), H("2", "(ex! z)"),
              pi, discharge="1")
    return R("iotaE1", "(iotaq x (A x) (A x))", major, intro, discharge="2", eigen="z")


def forall_iota():
    major = H("h", D_EX)
    pi = R("iotaE2", "(= y z)", major, H("1", "(ex! y)"), H("2", "(ex! z)"), H("1", "(A y)"),
           H("2", "(A z)"))
    b_z = R("forallE", "(B z)", H("h", "(forall x (B x))"), H("2", "(ex! z)"))
    intro = R("iotaI", D_AB, H("2", "(A z)"), b_z, H("2", "(ex! z)"), pi, discharge="1")
    return R("iotaE1", D_AB, major, intro, discharge="2", eigen="z")


def eq_iota():
    major = H("h", "(iotaq x (A x) (= x c))")
    a_c = eqE("(A c)", H("2", "(= x c)"), H("2", "(A x)"), "x", "(A x)")
    e_c = eqE("(ex! c)", H("2", "(= x c)"), H("2", "(ex! x)"), "w", "(ex! w)")
    pi = R("iotaE2", "(= v c)", major, H("1", "(ex! v)"), e_c, H("1", "(A v)"), a_c)
    intro = R("iotaI", D_AB, a_c, H("h", "(B c)"), e_c, pi, discharge="1")
    return R("iotaE1", D_AB, major, intro, discharge="2", eigen="x")


def exists_iota():
    d_ab, d_ex = H("h", D_AB), H("h", D_EX)
    vz = R("iotaE2", "(= v z)", d_ab, H("1", "(ex! v)"), H("2", "(ex! z)"), H("1", "(A v)"),
           H("2", "(A z)"))
    b_z = eqE("(B z)", vz, H("1", "(B v)"), "x", "(B x)")
    inner = R("iotaE1", "(exists x (B x))", d_ab,
              R("existsI", "(exists x (B x))", b_z, H("2", "(ex! z)")), discharge="1", eigen="v")
    return R("iotaE1", "(exists x (B x))", d_ex, inner, discharge="2", eigen="z")


# --------------------------------------------------------------------------
# abstraction and term descriptions with the axioms

def lld_ll():
    return axiom("LL", x="x", y="y", F=f("(A x)"))


def lld_abt_1():
    ax = axiom("AbT", x="x", B=f("(B x)"), t=parse_term("c"))
    return R("iffE1", "(and (ex! c) (B c))", ax, H("h", "(abst x (B x) c)"))


def lld_abt_2():
    ax = axiom("AbT", x="x", B=f("(B x)"), t=parse_term("c"))
    return R("iffE2", "(abst x (B x) c)", ax, H("h", "(and (ex! c) (B c))"))


RUI_LHS = "(abst x (B x) (iota x (A x)))"
RUI_RHS = "(exists z (and (= (iota x (A x)) z) (B z)))"


def lld_rui_1():
    ax = axiom("RuI", x="x", B=f("(B x)"), A=f("(A x)"), z="z")
    return R("iffE1", RUI_RHS, ax, H("h", RUI_LHS))


def lld_rui_2():
    ax = axiom("RuI", x="x", B=f("(B x)"), A=f("(A x)"), z="z")
    return R("iffE2", RUI_LHS, ax, H("h", RUI_RHS))


# --------------------------------------------------------------------------
# negative entries: each breaks one condition

def neg_forallI_eigen():
    return R("forallI", "(forall x (F x))", H("h", "(F y)"), discharge="1", eigen="y")


def neg_existsE_eigen():
    body = R("andE1", "(= c z)", H("1", "(and (= c z) (B z))"))
    return R("existsE", "(= c z)", H("h", "(exists z (and (= c z) (B z)))"), body,
             discharge="1", eigen="z")


def neg_iotaI_eigen():
    k = H("h", "(and (ex! c) (B c))")
    ex = R("andE1", "(ex! c)", k)
    return R("iotaI", "(iotaq x (= x c) (B x))", refl(ex), R("andE2", "(B c)", k), ex,
             H("h", "(= z c)"), discharge="1")


def neg_iotaE1_eigen():
    return R("iotaE1", "(A z)", H("h", "(iotaq x (A x) (= x c))"), H("1", "(A z)"),
             discharge="1", eigen="z")


def neg_botE_compound():
    return R("botE", "(and (A c) (B c))", H("h", "bot"))


def neg_eqE_template():
    return eqE("(and (A d) (B d))", H("h", "(= c d)"), H("h", "(and (A c) (B c))"),
               "x", "(and (A x) (B x))")


def neg_forallE_capture():
    return R("forallE", "(exists y (R y y))", H("h", "(forall x (exists y (R x y)))"),
             H("h", "(ex! y)"))


def neg_iotaE2_capture():
    return R("iotaE2", "(= y c)", H("h", "(iotaq x (forall y (R x y)) (Q x))"), H("h", "(ex! y)"),
             H("h", "(ex! c)"), H("h", "(forall y (R y y))"), H("h", "(forall y (R c y))"))


def neg_iota_in_pred():
    return R("andE1", "(G (iota x (F x)))", H("h", "(and (G (iota x (F x))) (= (iota x (F x)) c))"))


def neg_eqE_vacuous():
    return eqE("(A c)", refl(H("h", "(ex! c)")), H("h", "(A c)"), "x", "(A x)")


def neg_unknown_rule():
    return R("iotaE4", "(ex! c)", H("h", "(iotaq x (A x) (= x c))"))


def neg_premise_shape():
    return R("andI", "(and (A c) (B c))", H("h", "(A c)"), H("h", "(A c)"))


def neg_nested_label():
    inner = R("impI", "(-> (A c) (A c))", H("1", "(A c)"), discharge="1")
    return R("impI", "(-> (B c) (-> (A c) (A c)))", inner, discharge="1")


# --------------------------------------------------------------------------

# (id, system, expect, builder, anchor)
ENTRIES = [
    ("tennant-intro", "INF-T", "ACCEPT", tennant_intro_node,
     "Tennant introduction rule used directly"),
    ("tennant-intro-in-LL", "INF-LL", "ACCEPT", tennant_in_ll,
     "Tennant introduction derived from Lambert's Law"),
    ("construction-1", "INF-T", "ACCEPT", construction_1,
     "restricted iota introduction derived in Tennant's system"),
    ("construction-2", "INF-T", "ACCEPT", construction_2,
     "restricted first iota elimination derived in Tennant's system"),
    ("construction-3", "INF-T", "ACCEPT", construction_3,
     "restricted second iota elimination derived in Tennant's system"),
    ("construction-1-in-LL", "INF-LL", "ACCEPT", lambda: tennant_to_ll(construction_1()),
     "restricted iota introduction carried on into the LL system"),
    ("LLprime-fwd", "INF-iotaR", "ACCEPT", lambda: llprime_fwd(H("h", D_LL)),
     "Lambert's Law for the binary quantifier, left to right"),
    ("LLprime-bwd", "INF-iotaR", "ACCEPT", lambda: llprime_bwd(H("h", U_LL), H("h", "(ex! y)")),
     "Lambert's Law for the binary quantifier, right to left"),
    ("LLprime", "INF-iotaR", "ACCEPT", llprime,
     "Lambert's Law for the binary quantifier, closed form"),
    ("LLprime-in-T", "INF-T", "ACCEPT", lambda: restricted_to_tennant(llprime()),
     "closed Lambert's Law rewritten into Tennant's system"),
    ("redundancy-1", "INF", "ACCEPT", redundancy_1,
     "existence and predication give an identity witness"),
    ("redundancy-2", "INF", "ACCEPT", redundancy_2,
     "an identity witness gives existence and predication"),
    ("Abtau-1", "INF-iota", "ACCEPT", abtau_1,
     "translated abstraction axiom for ordinary terms, left to right"),
    ("Abtau-2", "INF-iota", "ACCEPT", abtau_2,
     "translated abstraction axiom for ordinary terms, right to left"),
    ("Abtau-1-xt", "INF-iota", "ACCEPT", abtau_1_xt,
     "abstraction axiom with the identity written x = t, left to right"),
    ("Abtau-2-xt", "INF-iota", "ACCEPT", abtau_2_xt,
     "abstraction axiom with the identity written x = t, right to left"),
    ("Rutau-1", "INF-iota", "ACCEPT", rutau_1,
     "translated abstraction axiom for descriptions, left to right"),
    ("Rutau-2", "INF-iota", "ACCEPT", rutau_2,
     "translated abstraction axiom for descriptions, right to left"),
    ("R1tau-1", "INF-iota", "ACCEPT", r1tau_1, "existence of the description, left to right"),
    ("R1tau-2", "INF-iota", "ACCEPT", r1tau_2, "existence of the description, right to left"),
    ("R3tau", "INF-iota", "ACCEPT", r3tau, "the A identical to t is A"),
    ("R3-exists", "INF-iota", "ACCEPT", r3_exists, "the A identical to t makes t exist"),
    ("R4", "INF-iota", "ACCEPT", r4, "an existing description satisfies its own predicate"),
    ("forall-iota", "INF-iota", "ACCEPT", forall_iota, "universal instantiation at a description"),
    ("eq-iota", "INF-iota", "ACCEPT", eq_iota, "Leibniz's Law through a description"),
    ("exists-iota", "INF-iota", "ACCEPT", exists_iota, "existential generalisation from a description"),
    ("LLD-LL", "INF-LLD", "ACCEPT", lld_ll, "Lambert's Law as an axiom with abstraction"),
    ("LLD-AbT-1", "INF-LLD", "ACCEPT", lld_abt_1, "abstraction axiom for ordinary terms, left to right"),
    ("LLD-AbT-2", "INF-LLD", "ACCEPT", lld_abt_2, "abstraction axiom for ordinary terms, right to left"),
    ("LLD-RuI-1", "INF-LLD", "ACCEPT", lld_rui_1, "abstraction axiom for descriptions, left to right"),
    ("LLD-RuI-2", "INF-LLD", "ACCEPT", lld_rui_2, "abstraction axiom for descriptions, right to left"),
    ("neg-forallI-eigen", "INF", "REJECT(EigenvariableNotFresh)", neg_forallI_eigen,
     "universal introduction with the eigenvariable in an open assumption"),
    ("neg-existsE-eigen", "INF", "REJECT(EigenvariableNotFresh)", neg_existsE_eigen,
     "existential elimination with the eigenvariable in the conclusion"),
    ("neg-iotaI-eigen", "INF-iota", "REJECT(EigenvariableNotFresh)", neg_iotaI_eigen,
     "iota introduction with the eigenvariable in an open assumption"),
    ("neg-iotaE1-eigen", "INF-iota", "REJECT(EigenvariableNotFresh)", neg_iotaE1_eigen,
     "first iota elimination with the eigenvariable in the conclusion"),
    ("neg-botE-compound", "INF", "REJECT(SideConditionViolated)", neg_botE_compound,
     "falsum elimination to a conjunction"),
    ("neg-eqE-template", "INF", "REJECT(NotAtomic)", neg_eqE_template,
     "identity elimination through a conjunction"),
    ("neg-forallE-capture", "INF", "REJECT(CaptureError)", neg_forallE_capture,
     "universal elimination capturing the instance"),
    ("neg-iotaE2-capture", "INF-iota", "REJECT(CaptureError)", neg_iotaE2_capture,
     "second iota elimination capturing a term"),
    ("neg-iota-in-pred", "INF-T", "REJECT(LanguageViolation)", neg_iota_in_pred,
     "description term as a predicate argument"),
    ("neg-eqE-vacuous", "INF", "REJECT(SideConditionViolated)", neg_eqE_vacuous,
     "identity elimination along t = t"),
    ("neg-rule-not-in-system", "INF", "REJECT(RuleNotInSystem)", abtau_2_xt,
     "iota introduction outside the binary quantifier system"),
    ("neg-unknown-rule", "INF-iota", "REJECT(UnknownRule)", neg_unknown_rule,
     "a rule name the checker does not know"),
    ("neg-premise-shape", "INF", "REJECT(PremiseShapeMismatch)", neg_premise_shape,
     "conjunction introduction with the wrong right premise"),
    ("neg-nested-label", "INF", "REJECT(DischargeScopeError)", neg_nested_label,
     "a label discharged twice on one branch"),
    ("neg-unrestricted", "INF-iotaR", "REJECT(LanguageViolation)", r4,
     "existence matrix in the restricted system"),
]


def proof_vars(p: ProofNode) -> set:
    out = set()
    for _, n in p.walk():
        if n.conclusion is not None:
            out |= all_vars(n.conclusion)
        if n.eigen:
            out.add(n.eigen)
        if n.template:
            out |= {n.template[0]} | all_vars(n.template[1])
        for _, v in n.bindings:
            out |= {v} if isinstance(v, str) else all_vars(v)
    return out


def render(system: str, p: ProofNode) -> str:
    head = f"#lang {LANG[system]}\n#vars {' '.join(sorted(proof_vars(p)))}\n"
    return head + print_proof(p) + "\n"


def build() -> dict:
    files = {}
    lines = ["# id | system | expect | path | anchor"]
    for ident, system, expect, make, anchor in ENTRIES:
        files[f"{ident}.ndp"] = render(system, make())
        lines.append(f"{ident} | {system} | {expect} | {ident}.ndp | {anchor}")
    files["manifest.txt"] = "\n".join(lines) + "\n"
    return files


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    files = build()
    stale = [n for n, text in files.items()
             if not (OUT / n).exists() or (OUT / n).read_text(encoding="utf-8") != text]
    if args.check:
        for n in stale:
            print(f"stale: {n}")
        return 1 if stale else 0
    OUT.mkdir(parents=True, exist_ok=True)
    for n in stale:
        (OUT / n).write_text(files[n], encoding="utf-8")
    print(f"wrote {len(stale)} of {len(files)} files")
    return 0


if __name__ == "__main__":
    sys.exit(main())
