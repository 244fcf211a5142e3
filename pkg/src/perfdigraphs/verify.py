"""Theorem-verification suites shared by the CLI and the acceptance tests.

Every trial draws its digraph from a seed derived from (master seed, n,
setting, trial index), so a report depends only on its arguments.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .core import Digraph, all_digraphs, symmetric_part, to_code
from .errors import StructureViolation
from .gen import GenSpec, PairMode, derive_seed, p4c_pair, random_digraph, random_f_free
from .oracles import brute_clique, brute_dichromatic, brute_has_p4, has_cycle_dfs
from .patterns import find_induced_directed_cycle, is_f_free, p4c_signature
from .perfection import is_perfect_bruteforce, is_perfect_structural
from .solvers import clique_number, dichromatic_number
from .structure import check_f_free_structure

# (p_sym, p_asym) settings for random sweeps
PERFECTION_SETTINGS = ((0.2, 0.2), (0.5, 0.25), (0.1, 0.6))
# sparse, symmetric-heavy and orientation-heavy draws for F-free rejection sampling
F_FREE_SETTINGS = ((0.7, 0.1), (0.6, 0.3), (0.1, 0.1), (0.5, 0.1), (0.1, 0.4))
MUTATION_BUDGET = 100
EXHAUSTIVE_MAX = 4


def encode(d: Digraph) -> str:
    return f"{d.n}:{to_code(d):x}"


@dataclass
class SuiteReport:
    name: str
    trials: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, d, expected, actual) -> None:
        enc = encode(d) if isinstance(d, Digraph) else d
        self.failures.append((enc, str(expected), str(actual)))

    def lines(self, max_failures: int = 20) -> list[str]:
        out = [f"suite: {self.name}", f"trials: {self.trials}"]
        out += [f"{k}: {v}" for k, v in self.notes.items()]
        out.append(f"failures: {len(self.failures)}")
        for enc, exp, act in self.failures[:max_failures]:
            out.append(f"failure: {enc} expected={exp} actual={act}")
        if len(self.failures) > max_failures:
            out.append(f"failures_omitted: {len(self.failures) - max_failures}")
        out.append(f"status: {'pass' if self.ok else 'fail'}")
        return out


def _random_sweep(seed: int, ns, trials: int, settings) -> Iterator[Digraph]:
    for n in ns:
        for si, (ps, pa) in enumerate(settings):
            for i in range(trials):
                yield random_digraph(GenSpec(n, ps, pa, derive_seed(seed, n, si, i)))


def suite_theorem1(nmax: int, trials: int, seed: int) -> SuiteReport:
    """Definitional vs structural perfection.

    Exhaustive over all digraphs on min(nmax, 4) vertices, then ``trials``
    random digraphs per n in 5..nmax and per (p_sym, p_asym) setting.
    """
    rep = SuiteReport("theorem1")
    exhaustive = all_digraphs(min(nmax, EXHAUSTIVE_MAX))
    sampled = _random_sweep(seed, range(EXHAUSTIVE_MAX + 1, nmax + 1), trials, PERFECTION_SETTINGS)
    for src in (exhaustive, sampled):
        for d in src:
            rep.trials += 1
            b = is_perfect_bruteforce(d).verdict
            s = is_perfect_structural(d).verdict
            if b != s:
                rep.fail(d, f"definitional={b}", f"structural={s}")
    return rep


def p4c_pairs(nmax: int, trials: int, seed: int) -> Iterator[tuple[str, Digraph, Digraph]]:
    """Reversal and mutation pairs over ``trials`` base digraphs with 3 <= n <= nmax."""
    sizes = list(range(3, max(nmax, 3) + 1))
    for i in range(trials):
        n = sizes[i % len(sizes)]
        ps, pa = PERFECTION_SETTINGS[i % len(PERFECTION_SETTINGS)]
        d = random_digraph(GenSpec(n, ps, pa, derive_seed(seed, n, i)))
        yield ("reversal",) + p4c_pair(d, PairMode.REVERSAL)
        pair = p4c_pair(d, PairMode.MUTATION, MUTATION_BUDGET, derive_seed(seed, n, i, 1))
        if pair is not None:
            yield ("mutation",) + pair


def _pair_suite(name: str, check: Callable[[Digraph], object], nmax, trials, seed) -> SuiteReport:
    rep = SuiteReport(name)
    mutation = 0
    for mode, d, e in p4c_pairs(nmax, trials, seed):
        rep.trials += 1
        mutation += mode == "mutation"
        a, b = check(d), check(e)
        if a != b:
            rep.fail(f"{encode(d)}~{encode(e)}", a, b)
    rep.notes["mutation_pairs"] = mutation
    return rep


def suite_semistrong(nmax: int, trials: int, seed: int) -> SuiteReport:
    return _pair_suite("semistrong", lambda d: is_perfect_structural(d).verdict, nmax, trials, seed)


def suite_prop2(nmax: int, trials: int, seed: int) -> SuiteReport:
    return _pair_suite("prop2", lambda d: find_induced_directed_cycle(d) is not None, nmax, trials, seed)


def f_free_sample(n: int, seed: int, i: int, max_attempts: int = 10_000):
    ps, pa = F_FREE_SETTINGS[i % len(F_FREE_SETTINGS)]
    return random_f_free(n, derive_seed(seed, n, i), max_attempts, ps, pa)


def f_free_instances(nmax: int, trials: int, seed: int) -> Iterator[Digraph]:
    """All F-free digraphs with n <= min(nmax, 4), then ``trials`` sampled per n in 5..nmax."""
    for n in range(0, min(nmax, EXHAUSTIVE_MAX) + 1):
        for d in all_digraphs(n):
            if is_f_free(d):
                yield d
    for n in range(EXHAUSTIVE_MAX + 1, nmax + 1):
        for i in range(trials):
            d = f_free_sample(n, seed, i)
            if d is not None:
                yield d


def suite_structure3(nmax: int, trials: int, seed: int) -> SuiteReport:
    """Component structure, P4-free symmetric part, perfection and empty signature of F-free digraphs."""
    rep = SuiteReport("structure3")
    kinds = {"partial": 0, "nontransitive": 0}
    for d in f_free_instances(nmax, trials, seed):
        rep.trials += 1
        try:
            check_f_free_structure(d)
        except StructureViolation as exc:
            kinds[exc.kind] += 1
            rep.fail(d, "no StructureViolation", f"StructureViolation({exc.kind})")
        if brute_has_p4(symmetric_part(d)):
            rep.fail(d, "S(D) P4-free", "induced P4")
        if not is_perfect_structural(d).verdict:
            rep.fail(d, "perfect", "not perfect")
        if not p4c_signature(d).is_empty():
            rep.fail(d, "empty signature", "nonempty")
    rep.notes["violations_partial"] = kinds["partial"]
    rep.notes["violations_nontransitive"] = kinds["nontransitive"]
    return rep


def suite_solvers(nmax: int, trials: int, seed: int) -> SuiteReport:
    """chi and omega against exhaustive search, ``trials`` digraphs per n in 4..nmax."""
    rep = SuiteReport("solvers")
    for d in _random_sweep(seed, range(4, nmax + 1), trials, ((0.3, 0.3),)):
        rep.trials += 1
        res = dichromatic_number(d)
        chi = brute_dichromatic(d)
        if res.chi != chi:
            rep.fail(d, f"chi={chi}", f"chi={res.chi}")
        classes = {}
        for v, c in res.assignment.items():
            classes.setdefault(c, []).append(v)
        if sorted(classes) != list(range(1, res.chi + 1)) or any(has_cycle_dfs(d, vs) for vs in classes.values()):
            rep.fail(d, "proper coloring witness", res.assignment)
        om = clique_number(d).omega
        if om != brute_clique(d):
            rep.fail(d, f"omega={brute_clique(d)}", f"omega={om}")
        if om > res.chi:
            rep.fail(d, "omega<=chi", f"omega={om} chi={res.chi}")
    return rep


SUITES = {
    "theorem1": suite_theorem1,
    "semistrong": suite_semistrong,
    "prop2": suite_prop2,
    "structure3": suite_structure3,
    "solvers": suite_solvers,
}


def run_suite(name: str, nmax: int, trials: int, seed: int) -> SuiteReport:
    start = time.perf_counter()
    rep = SUITES[name](nmax, trials, seed)
    rep.elapsed = time.perf_counter() - start
    return rep
