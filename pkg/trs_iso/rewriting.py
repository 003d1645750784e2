"""
------------------------------------------------------------------------------------------------------------------------

REWRITING
---------

One-step rewriting, fuel-bounded convertibility and termination probes.
The probes only answer what a bounded search can show; the engine refuses TRSs read in permissive mode.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .core import App, Position, Rule, Term, TermIso, Trs, Var, positions, replace_at, subterm_at, term_sort_key, \
    term_vars
from ._utility._classes import PermissiveTrsError
from ._utility.config_utility import settings
from ._utility.random_utility import make_rng, random_term
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)


class ProbeStatus(Enum):
    PROVEN = "proven"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ProbeVerdict:
    """
    Outcome of a bounded probe.

    Attributes
    ----------
    status: ProbeStatus
    explored: int
        Terms expanded before the probe stopped.
    path: tuple
        Conversion path (Proven convertibility) or the repeating path (Refuted termination).
    """

    status: ProbeStatus
    explored: int = 0
    path: tuple = ()

    @property
    def proven(self) -> bool:
        return self.status is ProbeStatus.PROVEN

    @property
    def refuted(self) -> bool:
        return self.status is ProbeStatus.REFUTED

    @property
    def unknown(self) -> bool:
        return self.status is ProbeStatus.UNKNOWN


@dataclass(frozen=True)
class RewriteStep:
    rule_index: int
    position: Position
    substitution: dict = field(hash=False)
    result: Term = None


def _require_strict(trs: Trs) -> None:
    if trs.permissive:
        raise PermissiveTrsError("the rewrite engine only accepts TRSs in strict mode")


# Matching
# ----------------------------------------------------------------------------------------------------------------------

def match_term(pattern: Term, subject: Term) -> dict | None:
    """
    The substitution sigma with sigma(pattern) == subject, or None.
    """
    sigma = {}
    stack = [(pattern, subject)]
    while stack:
        p, s = stack.pop()
        if isinstance(p, Var):
            bound = sigma.setdefault(p.name, s)
            if bound != s:
                return None
        elif isinstance(s, Var) or p.head != s.head or len(p.args) != len(s.args):
            return None
        else:
            stack.extend(zip(p.args, s.args))
    return sigma


def substitute(t: Term, sigma: dict) -> Term:
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    return App(t.head, tuple(substitute(arg, sigma) for arg in t.args))


# One-step rewriting
# ----------------------------------------------------------------------------------------------------------------------

def _steps(rules: Iterable[Rule], t: Term) -> list:
    rules = list(rules)
    list_steps = []
    for pos in positions(t):
        sub = subterm_at(t, pos)
        for index, rule in enumerate(rules):
            sigma = match_term(rule.lhs, sub)
            if sigma is not None:
                list_steps.append(RewriteStep(index, pos, sigma, replace_at(t, pos, substitute(rule.rhs, sigma))))
    return list_steps


def rewrite_steps(trs: Trs, t: Term) -> list:
    """
    Every rewrite step from t, reported as (rule index, position, substitution, result) in pre-order of the positions.
    """
    _require_strict(trs)
    return _steps(trs.rules, t)


def rewrite_step_all(trs: Trs, t: Term) -> set:
    """The set of one-step successors of t."""
    return {step.result for step in rewrite_steps(trs, t)}


# Bounded probes
# ----------------------------------------------------------------------------------------------------------------------

def _reversible_rules(trs: Trs) -> list:
    return [Rule(rule.rhs, rule.lhs) for rule in trs.rules
            if not isinstance(rule.rhs, Var) and set(term_vars(rule.lhs)) <= set(term_vars(rule.rhs))]


def _trace(parents: dict, node: Term) -> list:
    chain = [node]
    while parents[chain[-1]] is not None:
        chain.append(parents[chain[-1]])
    return chain


def convertible_bounded(trs: Trs, s: Term, t: Term, fuel: int, max_terms: int = None) -> ProbeVerdict:
    """
    Bidirectional breadth-first search for a conversion between s and t of length at most fuel.

    Forward steps use every rule; backward steps use the rules whose lhs variables all occur in the rhs, since only
    those have finitely many predecessors. The probe never answers Refuted.

    Parameters
    ----------
    trs: Trs
    s, t: Term
    fuel: int
        Maximal length of the conversion.
    max_terms: int
        Cap on visited terms; defaults to max_terms of the [defaults] section.

    Returns
    -------
    ProbeVerdict
        Proven with the conversion as path, or Unknown.
    """
    _require_strict(trs)
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    max_terms = settings("defaults")["max_terms"] if max_terms is None else max_terms
    if s == t:
        return ProbeVerdict(ProbeStatus.PROVEN, 0, (s,))

    list_rules = list(trs.rules) + _reversible_rules(trs)
    parents = ({s: None}, {t: None})
    frontiers = ([s], [t])
    depth = [0, 0]
    explored = 0
    while depth[0] + depth[1] < fuel and (frontiers[0] or frontiers[1]):
        # an exhausted side stays usable as meeting set
        if not frontiers[1]:
            side = 0
        elif not frontiers[0]:
            side = 1
        else:
            side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        next_frontier = []
        for node in frontiers[side]:
            explored += 1
            for step in _steps(list_rules, node):
                succ = step.result
                if succ in parents[side]:
                    continue
                parents[side][succ] = node
                if succ in parents[1 - side]:
                    path = _trace(parents[side], succ)[::-1] + _trace(parents[1 - side], succ)[1:]
                    if side == 1:
                        path = path[::-1]
                    logger.debug("conversion of length %d found after %d expansions", len(path) - 1, explored)
                    return ProbeVerdict(ProbeStatus.PROVEN, explored, tuple(path))
                next_frontier.append(succ)
            if len(parents[0]) + len(parents[1]) > max_terms:
                return ProbeVerdict(ProbeStatus.UNKNOWN, explored)
        frontiers = (next_frontier, frontiers[1]) if side == 0 else (frontiers[0], next_frontier)
        depth[side] += 1
    return ProbeVerdict(ProbeStatus.UNKNOWN, explored)


def terminates_bounded(trs: Trs, t: Term, fuel: int) -> ProbeVerdict:
    """
    Exhaustive depth-first exploration of the successors of t.

    Returns
    -------
    ProbeVerdict
        Proven if the exploration finishes within fuel expansions, Refuted as soon as a term repeats on the current
        path (the path is returned), Unknown when the fuel runs out.
    """
    _require_strict(trs)
    if fuel < 0:
        raise ValueError("fuel must be non-negative")

    on_path, finished = set(), set()
    stack = []
    explored = 0

    def expand(node: Term) -> bool:
        nonlocal explored
        if explored >= fuel:
            return False
        explored += 1
        on_path.add(node)
        stack.append((node, sorted(rewrite_step_all(trs, node), key=term_sort_key), 0))
        return True

    if not expand(t):
        return ProbeVerdict(ProbeStatus.UNKNOWN, explored)
    while stack:
        node, successors, index = stack[-1]
        if index == len(successors):
            stack.pop()
            on_path.discard(node)
            finished.add(node)
            continue
        stack[-1] = (node, successors, index + 1)
        succ = successors[index]
        if succ in on_path:
            path = [entry[0] for entry in stack]
            path = path[path.index(succ):] + [succ]
            logger.debug("cycle of length %d found", len(path) - 1)
            return ProbeVerdict(ProbeStatus.REFUTED, explored, tuple(path))
        if succ not in finished and not expand(succ):
            return ProbeVerdict(ProbeStatus.UNKNOWN, explored)
    return ProbeVerdict(ProbeStatus.PROVEN, explored)


# Semantic comparison
# ----------------------------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class StepViolation:
    """
    A term whose one-step successors are not carried over by the isomorphism.

    Attributes
    ----------
    term: Term
    image: Term
    missing: tuple
        Images of successors under the first TRS that the second TRS does not produce.
    extra: tuple
        Successors under the second TRS without a preimage.
    """

    term: Term
    image: Term
    missing: tuple
    extra: tuple


def one_step_violations(a: Trs, b: Trs, iso: TermIso, terms: Iterable[Term]) -> list:
    """
    Compares iso applied to the successor set of s under a with the successor set of iso(s) under b for every s.
    """
    list_violations = []
    for s in terms:
        image = iso(s)
        expected = {iso(u) for u in rewrite_step_all(a, s)}
        actual = rewrite_step_all(b, image)
        if expected != actual:
            list_violations.append(StepViolation(s, image,
                                                 tuple(sorted(expected - actual, key=term_sort_key)),
                                                 tuple(sorted(actual - expected, key=term_sort_key))))
    return list_violations


def sample_terms(trs: Trs, seed=None, count: int = None, depth: int = None) -> list:
    """
    Seeded sample terms over the symbols of trs: half plain random terms, half random contexts around random instances
    of rule left-hand sides.
    """
    dict_cfg = settings("defaults")
    count = dict_cfg["samples"] if count is None else count
    depth = dict_cfg["sample_depth"] if depth is None else depth
    rng = make_rng(seed)
    funcs = list(trs.sig.funcs)
    variables = list(trs.vars)
    inner = [(name, arity) for name, arity in funcs if arity > 0]

    list_terms = []
    for i in range(count):
        if i % 2 == 1 and trs.rules:
            rule = trs.rules[int(rng.integers(len(trs.rules)))]
            sigma = {}
            for name in term_vars(rule.lhs):
                value = random_term(rng, funcs, variables, max(depth - 2, 0))
                sigma[name] = value if value is not None else Var(name)
            term = substitute(rule.lhs, sigma)
            if inner and rng.random() < 0.5:
                name, arity = inner[int(rng.integers(len(inner)))]
                args = [random_term(rng, funcs, variables, 1) for _ in range(arity)]
                if all(arg is not None for arg in args):
                    args[int(rng.integers(arity))] = term
                    term = App(name, tuple(args))
        else:
            term = random_term(rng, funcs, variables, depth)
        if term is not None:
            list_terms.append(term)
    return list_terms


# debugging
if __name__ == "__main__":
    pass
