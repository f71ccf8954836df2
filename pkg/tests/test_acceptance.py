"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import judgment_of, negative_entries, positive_entries  # noqa: E402
from gen import depth, iota_formula  # noqa: E402
from infiota.cli import run_corpus  # noqa: E402
from infiota.kernel import Judgment  # noqa: E402
from infiota.semantics import VALID, equivalent_upto, valid_upto  # noqa: E402
from infiota.syntax import (  # noqa: E402
    Abst, And, Const, Eq, Exists, ExistsBang, IotaQ, Language, Var, is_free_for,
    parse_formula, substitute, well_formed,
)
from infiota.systems import builtin_system  # noqa: E402
from infiota.translate import russell_expand, tau, upsilon  # noqa: E402

SEED = 20240611
RESULTS = []    # lines collected for the terminal summary

REQUIRED_NEGATIVE_KINDS = {
    "neg-forallI-eigen": "EigenvariableNotFresh",
    "neg-existsE-eigen": "EigenvariableNotFresh",
    "neg-iotaI-eigen": "EigenvariableNotFresh",
    "neg-iotaE1-eigen": "EigenvariableNotFresh",
    "neg-botE-compound": "SideConditionViolated",
    "neg-eqE-template": "NotAtomic",
    "neg-forallE-capture": "CaptureError",
    "neg-iotaE2-capture": "CaptureError",
    "neg-iota-in-pred": "LanguageViolation",
    "neg-eqE-vacuous": "SideConditionViolated",
}


def record(n, title, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {title} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok


# --------------------------------------------------------------------------
# the criteria

def positive_corpus():
    start = time.perf_counter()
    results = [r for r in run_corpus() if r.entry.expect == "ACCEPT"]
    elapsed = time.perf_counter() - start
    bad = [r.entry.id for r in results if not r.ok]
    ok = len(results) >= 18 and not bad and elapsed < 5.0
    return record(1, "positive corpus replays", ok,
                  f"{len(results) - len(bad)}/{len(results)} accepted in {elapsed:.2f}s"
                  + (f"; failing: {', '.join(bad)}" if bad else ""))


def negative_corpus():
    results = [r for r in run_corpus() if r.entry.expect != "ACCEPT"]
    bad = [f"{r.entry.id} got {r.verdict}" for r in results if not r.ok]
    kinds = {r.entry.id: r.entry.expected_kind for r in results}
    missing = [k for k, v in REQUIRED_NEGATIVE_KINDS.items() if kinds.get(k) != v]
    ok = len(results) >= 12 and not bad and not missing
    detail = f"{len(results) - len(bad)}/{len(results)} rejected with the documented kind"
    if bad:
        detail += "; wrong: " + ", ".join(bad)
    if missing:
        detail += "; missing: " + ", ".join(missing)
    return record(2, "negative corpus rejects", ok, detail)


def translation_identity():
    rng = random.Random(SEED)
    fails = 0
    deepest = 0
    for _ in range(200):
        f = iota_formula(rng, 5)
        assert well_formed(f, Language.IOTA)
        deepest = max(deepest, depth(f))
        if tau(upsilon(f)) != f:
            fails += 1
    return record(3, "tau(upsilon(f)) == f", fails == 0 and deepest <= 5,
                  f"200 formulas, max depth {deepest}, {fails} failures")


def russell_equivalence():
    rng = random.Random(SEED + 1)
    preds, consts = {"P": 1, "Q": 1}, ("a", "b")
    start = time.perf_counter()
    fails = 0
    for _ in range(100):
        F = iota_formula(rng, 3, preds, ("x", "y"), consts)
        G = iota_formula(rng, 3, preds, ("x", "y"), consts)
        f = IotaQ("x", F, G)
        if equivalent_upto(f, russell_expand(f), 3) != VALID:
            fails += 1
    elapsed = time.perf_counter() - start
    return record(4, "Russellian expansion agrees", fails == 0 and elapsed < 120,
                  f"100 pairs, size <= 3, {fails} disagreements in {elapsed:.1f}s")


def soundness_spot_check():
    checked, bad = 0, []
    for entry in positive_entries():
        if builtin_system(entry.system).language not in (Language.INF, Language.IOTA):
            continue
        checked += 1
        if valid_upto(judgment_of(entry), 3) != VALID:
            bad.append(entry.id)
    return record(5, "positive judgments valid up to size 3", not bad and checked > 0,
                  f"{checked} judgments, {len(bad)} countermodels" + (f": {', '.join(bad)}" if bad else ""))


def converse_countermodel():
    seq = Judgment(frozenset({parse_formula("(and (ex! t) (A t))")}),
                   parse_formula("(iotaq x (A x) (= x t))"))
    cm = valid_upto(seq, 2)
    ok = cm != VALID and len(cm.model.preds.get("A", ())) == 2
    detail = "no countermodel" if cm == VALID else cm.render()
    return record(6, "converse fails with two satisfiers", ok, detail)


def redundancy_lemma():
    rng = random.Random(SEED + 2)
    terms = (Const("a"), Const("b"), Var("y"))
    done = fails = 0
    while done < 50:
        B = iota_formula(rng, 3, {"P": 1, "Q": 1}, ("x", "y"), ("a", "b"))
        t = rng.choice(terms)
        if not is_free_for(t, "x", B):
            continue
        z = Var("z")
        delta = Abst("x", B, t)
        conj = And(ExistsBang(t), substitute(B, "x", t))
        ex = Exists("z", And(Eq(t, z), substitute(B, "x", z)))
        if equivalent_upto(delta, conj, 3) != VALID or equivalent_upto(delta, ex, 3) != VALID:
            fails += 1
        done += 1
    return record(7, "abstraction agrees with both expansions", fails == 0,
                  f"50 formulas, size <= 3, {fails} disagreements")


CRITERIA = (positive_corpus, negative_corpus, translation_identity, russell_equivalence,
            soundness_spot_check, converse_countermodel, redundancy_lemma)


# --------------------------------------------------------------------------
# pytest entry points

def test_criterion_1_positive_corpus():
    assert positive_corpus()


def test_criterion_2_negative_corpus():
    assert negative_corpus()


def test_criterion_3_translation_identity():
    assert translation_identity()


def test_criterion_4_russell_equivalence():
    assert russell_equivalence()


def test_criterion_5_soundness():
    assert soundness_spot_check()


def test_criterion_6_converse_countermodel():
    assert converse_countermodel()


def test_criterion_7_redundancy_lemma():
    assert redundancy_lemma()


def test_negative_entries_cover_required_kinds():
    assert {e.id for e in negative_entries()} >= set(REQUIRED_NEGATIVE_KINDS)


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)
