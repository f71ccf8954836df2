"""Command-line front end: check proof scripts, run the corpus, translate
formulas and search for countermodels.

Exit codes: 0 success, 1 rejection (or a countermodel, or a corpus
mismatch), 2 unreadable input or bad usage.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .errors import CheckError, UnknownSystem
from .kernel import Judgment, check_proof, parse_proof_file
from .semantics import VALID, ResourceBound, valid_upto
from .syntax import ParseError, Reader, default_is_var, print_formula, read_sexprs
from .systems import CLI_NAMES, builtin_system
from .translate import expand_all, tau_trace, upsilon_trace

EXIT_OK, EXIT_REJECT, EXIT_INPUT = 0, 1, 2


def _parse_error(e: ParseError) -> str:
    return f"parse error at line {e.lineno}, column {e.offset}: {e.msg}"


# --------------------------------------------------------------------------
# corpus


@dataclass
class CorpusEntry:
    id: str
    system: str
    expect: str          # "ACCEPT" or "REJECT(Kind)"
    path: str
    anchor: str = ""

    @property
    def expected_kind(self) -> Optional[str]:
        if self.expect.startswith("REJECT(") and self.expect.endswith(")"):
            return self.expect[len("REJECT("):-1]
        return None


@dataclass
class EntryResult:
    entry: CorpusEntry
    ok: bool
    verdict: str                      # "ACCEPT" or "REJECT(Kind)" or "ERROR"
    judgment: Optional[Judgment] = None
    detail: str = ""


def default_manifest() -> Path:
    return Path(str(resources.files("infiota") / "corpus" / "manifest.txt"))


def load_manifest(path) -> list:
    """Read ``id | system | expect | path | anchor`` lines; ``#`` starts a comment line."""
    entries = []
    for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = [c.strip() for c in line.split("|")]
        if len(cols) < 4:
            raise ValueError(f"{path}:{n}: expected id | system | expect | path | anchor")
        ident, system, expect, rel = cols[:4]
        anchor = " | ".join(cols[4:])
        if expect != "ACCEPT" and not (expect.startswith("REJECT(") and expect.endswith(")")):
            raise ValueError(f"{path}:{n}: bad expectation {expect!r}")
        entries.append(CorpusEntry(ident, system, expect, rel, anchor))
    return entries


def check_file(path, system: str) -> Judgment:
    """Parse and check one proof script; raises ParseError, CheckError or UnknownSystem."""
    spec = builtin_system(system)
    pf = parse_proof_file(Path(path).read_text(encoding="utf-8"))
    return check_proof(pf.proof, spec)


def run_entry(entry: CorpusEntry, base: Path) -> EntryResult:
    try:
        j = check_file(base / entry.path, entry.system)
    except CheckError as e:
        verdict = f"REJECT({e.kind.value})"
        return EntryResult(entry, verdict == entry.expect, verdict, detail=e.render())
    except (ParseError, UnknownSystem, OSError) as e:
        return EntryResult(entry, False, "ERROR", detail=str(e))
    return EntryResult(entry, entry.expect == "ACCEPT", "ACCEPT", judgment=j, detail=str(j))


def run_corpus(manifest=None, filter_: str = "") -> list:
    manifest = Path(manifest) if manifest else default_manifest()
    base = manifest.parent
    return [run_entry(e, base) for e in load_manifest(manifest) if filter_ in e.id]


def corpus_report(results) -> str:
    lines = []
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        line = f"{mark} {r.entry.id} [{r.entry.system}] expected {r.entry.expect}, got {r.verdict}"
        if not r.ok or r.judgment is not None:
            line += f": {r.detail}"
        lines.append(line)
    passed = sum(r.ok for r in results)
    lines.append(f"{len(results)} entries, {passed} passed, {len(results) - passed} failed")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# sequents for the model finder


def parse_sequent(text: str, is_var=default_is_var) -> Judgment:
    """``f1 f2 ... |- g``: any number of s-expression assumptions, one conclusion."""
    left, sep, right = text.partition("|-")
    if not sep:
        raise ParseError("expected '|-'", 1, 1)
    reader = Reader(is_var)
    hyps = [reader.formula(n) for n in read_sexprs(left)]
    concl = read_sexprs(right)
    if len(concl) != 1:
        raise ParseError("expected exactly one formula after '|-'", 1, len(left) + 3)
    return Judgment(frozenset(hyps), reader.formula(concl[0]))


# --------------------------------------------------------------------------
# subcommands


def cmd_check(args) -> int:
    try:
        j = check_file(args.file, args.system)
    except UnknownSystem:
        print(f"unknown system {args.system!r}; choose from {', '.join(CLI_NAMES)}", file=sys.stderr)
        return EXIT_INPUT
    except ParseError as e:
        print(_parse_error(e), file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(e, file=sys.stderr)
        return EXIT_INPUT
    except CheckError as e:
        print(e.render())
        return EXIT_REJECT
    print(j)
    return EXIT_OK


def cmd_corpus(args) -> int:
    try:
        results = run_corpus(args.manifest, args.filter)
    except (OSError, ValueError) as e:
        print(e, file=sys.stderr)
        return EXIT_INPUT
    print(corpus_report(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_REJECT


def _var_test(names):
    return default_is_var if not names else set(names).__contains__


def cmd_translate(args) -> int:
    reader = Reader(_var_test(args.vars))
    status = EXIT_OK
    for n, line in enumerate(sys.stdin, 1):
        text = line.strip()
        if not text or text.startswith(";"):
            continue
        try:
            nodes = read_sexprs(text)
            if len(nodes) != 1:
                raise ParseError("expected one formula per line", 1, 1)
            f = reader.formula(nodes[0])
        except ParseError as e:
            print(f"line {n}: {_parse_error(e)}", file=sys.stderr)
            return EXIT_INPUT
        try:
            if args.dir == "tau":
                trace = tau_trace(f)
            elif args.dir == "upsilon":
                trace = upsilon_trace(f)
            else:
                trace = None
                out = expand_all(f)
        except CheckError as e:
            print(f"line {n}: {e.render()}", file=sys.stderr)
            status = EXIT_REJECT
            continue
        if trace is not None:
            out = trace.output
        print(print_formula(out))
        if args.trace and trace is not None:
            print("; clauses: " + " ".join(trace.clauses_used))
            for old, new in trace.renamed:
                print(f"; renamed {old} -> {new}")
    return status


def cmd_models(args) -> int:
    text = args.sequent if args.sequent is not None else sys.stdin.read()
    try:
        seq = parse_sequent(text, _var_test(args.vars))
    except ParseError as e:
        print(_parse_error(e), file=sys.stderr)
        return EXIT_INPUT
    try:
        result = valid_upto(seq, args.max_size, budget=args.budget)
    except ResourceBound as e:
        print(f"resource bound: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(e, file=sys.stderr)
        return EXIT_INPUT
    if result == VALID:
        print(VALID)
        return EXIT_OK
    print(result.render())
    return EXIT_REJECT


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="infiota", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check one proof script")
    p.add_argument("file")
    p.add_argument("--system", required=True, help="one of " + ", ".join(CLI_NAMES))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("corpus", help="corpus operations")
    csub = p.add_subparsers(dest="action", required=True)
    run = csub.add_parser("run", help="check every manifest entry against its expectation")
    run.add_argument("--filter", default="", help="only entries whose id contains this")
    run.add_argument("--manifest", default=None, help="manifest file (default: the bundled corpus)")
    run.set_defaults(func=cmd_corpus)

    p = sub.add_parser("translate", help="translate formulas read one per line from stdin")
    p.add_argument("--dir", choices=("tau", "upsilon", "expand"), required=True)
    p.add_argument("--trace", action="store_true", help="also print the clauses applied")
    p.add_argument("--vars", nargs="*", help="variable names (default: names starting u-z)")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("models", help="look for a finite countermodel to a sequent")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--budget", type=int, default=None, help="give up above this many points")
    p.add_argument("--sequent", default=None, help="'f1 f2 |- g' (default: read stdin)")
    p.add_argument("--vars", nargs="*", help="variable names (default: names starting u-z)")
    p.set_defaults(func=cmd_models)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
