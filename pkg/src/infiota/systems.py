"""The six logics as data, and the axiom schemes some of them use."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable

from .errors import CheckError, Kind, UnknownSystem
from .syntax import (
    Abst, And, Eq, Exists, ExistsBang, Forall, Iff, IotaTerm, Language, Var,
    free_vars, is_free_for, show, substitute, well_formed,
)

CORE_RULES = frozenset({
    "andI", "andE1", "andE2", "impI", "impE", "orI1", "orI2", "orE", "botE",
    "forallI", "forallE", "existsI", "existsE", "eqI", "eqE", "AD",
    "iffI", "iffE1", "iffE2",
})
IOTA_RULES = frozenset({"iotaI", "iotaE1", "iotaE2"})
TENNANT_RULES = frozenset({"iotaIT", "iotaE1T", "iotaE2T", "iotaE3T"})
ALL_RULES = CORE_RULES | IOTA_RULES | TENNANT_RULES


@dataclass(frozen=True)
class SystemSpec:
    name: str
    language: Language
    rules: frozenset
    axioms: frozenset = frozenset()
    strict_eqE: bool = True
    # ι-quantifier matrices limited to x = t (the ιR fragment)
    restricted_iota: bool = False

    def with_flags(self, **flags) -> "SystemSpec":
        return dataclasses.replace(self, **flags)


_SYSTEMS = {
    "INF": SystemSpec("INF", Language.INF, CORE_RULES),
    "INF_IOTA": SystemSpec("INF_IOTA", Language.IOTA, CORE_RULES | IOTA_RULES),
    "INF_IOTA_R": SystemSpec("INF_IOTA_R", Language.IOTA, CORE_RULES | IOTA_RULES,
                             restricted_iota=True),
    "INF_T": SystemSpec("INF_T", Language.TLL, CORE_RULES | TENNANT_RULES),
    "INF_LL": SystemSpec("INF_LL", Language.TLL, CORE_RULES, frozenset({"LL"})),
    "INF_LL_DELTA": SystemSpec("INF_LL_DELTA", Language.DELTA, CORE_RULES,
                               frozenset({"LL", "AbT", "RuI"})),
}

CLI_NAMES = {
    "INF": "INF",
    "INF-iota": "INF_IOTA",
    "INF-iotaR": "INF_IOTA_R",
    "INF-T": "INF_T",
    "INF-LL": "INF_LL",
    "INF-LLD": "INF_LL_DELTA",
}
SYSTEM_NAMES = tuple(_SYSTEMS)


def builtin_system(name: str) -> SystemSpec:
    """Look a system up by its canonical name (``INF_IOTA``) or CLI name (``INF-iota``)."""
    key = CLI_NAMES.get(name, name)
    try:
        return _SYSTEMS[key]
    except KeyError:
        raise UnknownSystem(name) from None


def cli_name(system: SystemSpec) -> str:
    return {v: k for k, v in CLI_NAMES.items()}[system.name]


# --------------------------------------------------------------------------
# axiom schemes

@dataclass(frozen=True)
class AxiomScheme:
    name: str
    # metavariable -> "var" | "formula" | "term"
    metavars: tuple
    build: Callable
    doc: str = ""

    def kinds(self) -> dict:
        return dict(self.metavars)


def _side(cond: bool, msg: str):
    if not cond:
        raise CheckError(Kind.SideConditionViolated, msg)


def _subst(f, x, t):
    if not is_free_for(t, x, f):
        raise CheckError(Kind.SideConditionViolated, f"{show(t)} is not free for {x} in {show(f)}")
    return substitute(f, x, t)


def _build_LL(x, y, F):
    _side(y != x, "LL needs distinct x and y")
    _side(y not in free_vars(F), f"{y} occurs free in {show(F)}")
    vy = Var(y)
    return Forall(y, Iff(Eq(IotaTerm(x, F), vy), Forall(x, Iff(F, Eq(Var(x), vy)))))


def _build_AbT(x, B, t):
    _side(x not in free_vars(t), f"{x} is free in {show(t)}")
    return Iff(Abst(x, B, t), And(ExistsBang(t), _subst(B, x, t)))


def _build_RuI(x, B, A, z):
    desc = IotaTerm(x, A)
    _side(z not in free_vars(desc), f"{z} is free in {show(desc)}")
    _side(z == x or z not in free_vars(B), f"{z} is free in {show(B)}")
    return Iff(Abst(x, B, desc), Exists(z, And(Eq(desc, Var(z)), _subst(B, x, Var(z)))))


def _build_AbPrime(x, B, t, z):
    _side(z not in free_vars(t), f"{z} is free in {show(t)}")
    _side(z == x or z not in free_vars(B), f"{z} is free in {show(B)}")
    return Iff(Abst(x, B, t), Exists(z, And(Eq(t, Var(z)), _subst(B, x, Var(z)))))


AXIOMS = {
    "LL": AxiomScheme("LL", (("x", "var"), ("y", "var"), ("F", "formula")), _build_LL,
                      "forall y ((iota x F) = y <-> forall x (F <-> x = y))"),
    "AbT": AxiomScheme("AbT", (("x", "var"), ("B", "formula"), ("t", "term")), _build_AbT,
                       "abst x B t <-> (ex! t and B[t/x])"),
    "RuI": AxiomScheme("RuI", (("x", "var"), ("B", "formula"), ("A", "formula"), ("z", "var")),
                       _build_RuI,
                       "abst x B (iota x A) <-> exists z ((iota x A) = z and B[z/x])"),
    "AbPrime": AxiomScheme("AbPrime", (("x", "var"), ("B", "formula"), ("t", "term"), ("z", "var")),
                           _build_AbPrime,
                           "abst x B t <-> exists z (t = z and B[z/x])"),
}


def instantiate_axiom(scheme, bindings: dict, language=None):
    """Instantiate an axiom scheme.

    ``scheme`` is a name or an :class:`AxiomScheme`; ``bindings`` maps every
    metavariable to a value (variable names as strings or ``Var``).  With a
    ``language`` the result must be well formed in it.
    """
    if isinstance(scheme, str):
        if scheme not in AXIOMS:
            raise CheckError(Kind.UnknownRule, f"no axiom scheme {scheme}")
        scheme = AXIOMS[scheme]
    kinds = scheme.kinds()
    missing = set(kinds) - set(bindings)
    extra = set(bindings) - set(kinds)
    if missing or extra:
        raise CheckError(Kind.PremiseShapeMismatch,
                         f"{scheme.name} binds {sorted(kinds)}, got {sorted(bindings)}")
    args = {}
    for k, v in bindings.items():
        if kinds[k] == "var" and isinstance(v, Var):
            v = v.name
        args[k] = v
    f = scheme.build(**args)
    if language is not None and not well_formed(f, language):
        raise CheckError(Kind.LanguageViolation,
                         f"{scheme.name} instance {show(f)} is outside {Language(language).value}")
    return f
