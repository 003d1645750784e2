"""
------------------------------------------------------------------------------------------------------------------------

TEMPLATES
---------

Canonical per-rule renamings of a TRS.
The V-template numbers the variables of every rule by first occurrence (x1, x2, ...), the F-template numbers the
function symbols of every rule by first occurrence per arity (f_k_l is the k-th distinct symbol of arity l), the full
template does both. When a symbol the template keeps fixed is already spelled like a standardized name (a constant
x1 under the V-template, a variable f_1_0 under the F-template) the stem is repeated (xx1, ff_1_0) until the names are
free. Two rules are equivalent under a renaming kind exactly when their kind-templates coincide, which also yields
the maximal normal forms.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import logging
import re
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass

from .core import Kind, Rule, Signature, TermIso, Trs, term_funcs, term_vars
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)


VAR_STEM = "x"
FUNC_STEM = "f"


def standardized_var(k: int, stem: str = VAR_STEM) -> str:
    return f"{stem}{k}"


def standardized_func(k: int, arity: int, stem: str = FUNC_STEM) -> str:
    return f"{stem}_{k}_{arity}"


def free_stem(base: str, taken: Iterable, suffix: str) -> str:
    """
    Shortest repetition of base such that no taken name reads as base-repetition followed by suffix (a regex).
    """
    taken = [str(name) for name in taken]
    stem = base
    while any(re.fullmatch(re.escape(stem) + suffix, name) for name in taken):
        stem += base
    return stem


def _stems(trs: Trs, kind: Kind, avoid: Iterable) -> tuple:
    """(variable stem, function stem) of the kind-template; only the symbols the kind keeps fixed are avoided."""
    if kind is Kind.V:
        return free_stem(VAR_STEM, list(trs.sig) + list(avoid), r"\d+"), FUNC_STEM
    if kind is Kind.F:
        return VAR_STEM, free_stem(FUNC_STEM, list(trs.vars) + list(avoid), r"_\d+_\d+")
    return VAR_STEM, FUNC_STEM


@dataclass(frozen=True)
class StandardizedSets:
    """
    Attributes
    ----------
    vstd: tuple
        x1 ... xK with K the number of variables (stem x repeated on a clash).
    fstd: tuple
        Pairs (f_k_l, l); for every arity l the symbols f_1_l ... f_{p_l}_l, ordered by arity, then k.
    """

    vstd: tuple
    fstd: tuple

    @property
    def signature(self) -> Signature:
        return Signature(self.fstd)


@dataclass(frozen=True)
class TemplateResult:
    """
    Attributes
    ----------
    kind: Kind
    family: tuple
        One TermIso per source rule.
    rules: tuple
        rules[i] is family[i] applied to source rule i.
    templated: Trs
        The TRS over the distinct templated rules in first-occurrence order.
    sets: StandardizedSets
    """

    kind: Kind
    family: tuple
    rules: tuple
    templated: Trs
    sets: StandardizedSets


def standardized_sets(trs: Trs, vstem: str = VAR_STEM, fstem: str = FUNC_STEM) -> StandardizedSets:
    profile = trs.sig.profile()
    fstd = tuple((standardized_func(k, arity, fstem), arity)
                 for arity in sorted(profile) for k in range(1, profile[arity] + 1))
    return StandardizedSets(tuple(standardized_var(k, vstem) for k in range(1, len(trs.vars) + 1)), fstd)


# per-rule isomorphisms
# ----------------------------------------------------------------------------------------------------------------------

def _rule_vmap(rule: Rule, variables: tuple, stem: str = VAR_STEM) -> dict:
    # rhs is scanned after lhs, which only matters in permissive mode
    order = list(dict.fromkeys(term_vars(rule.lhs) + term_vars(rule.rhs)))
    vmap = {name: standardized_var(k, stem) for k, name in enumerate(order, start=1)}
    free = (standardized_var(k, stem) for k in range(len(order) + 1, len(variables) + 1))
    for name in variables:
        if name not in vmap:
            vmap[name] = next(free)
    return vmap


def _rule_fmap(rule: Rule, sig: Signature, stem: str = FUNC_STEM) -> dict:
    counters = defaultdict(int)
    fmap = {}
    for name, arity in term_funcs(rule.lhs) + term_funcs(rule.rhs):
        if name not in fmap:
            counters[arity] += 1
            fmap[name] = standardized_func(counters[arity], arity, stem)
    for name, arity in sig.funcs:
        if name not in fmap:
            counters[arity] += 1
            fmap[name] = standardized_func(counters[arity], arity, stem)
    return fmap


def _assemble(trs: Trs, kind: Kind, family: list, vstem: str, fstem: str) -> TemplateResult:
    sets = standardized_sets(trs, vstem, fstem)
    rules = tuple(iso.apply_rule(rule) for iso, rule in zip(family, trs.rules))
    sig = trs.sig if kind is Kind.V else sets.signature
    variables = trs.vars if kind is Kind.F else sets.vstd
    templated = Trs(sig, variables, tuple(dict.fromkeys(rules)), trs.permissive)
    return TemplateResult(kind, tuple(family), rules, templated, sets)


def v_template(trs: Trs, avoid: Iterable = ()) -> TemplateResult:
    """
    V-template: per rule the variables become x1, x2, ... in order of first occurrence in the lhs (then the rhs);
    the unused variables take the remaining names in declaration order. Function symbols stay fixed.

    Parameters
    ----------
    trs: Trs
    avoid: Iterable
        Further names the standardized variables must not match, e.g. the function symbols of a second TRS.
    """
    vstem, fstem = _stems(trs, Kind.V, avoid)
    identity = {name: name for name in trs.sig}
    family = [TermIso(identity, _rule_vmap(rule, trs.vars, vstem)) for rule in trs.rules]
    return _assemble(trs, Kind.V, family, vstem, fstem)


def f_template(trs: Trs, avoid: Iterable = ()) -> TemplateResult:
    """
    F-template: per rule the k-th distinct function symbol of arity l (lhs before rhs) becomes f_k_l; the unused
    symbols take the remaining names of their arity in declaration order. Variables stay fixed.

    Parameters
    ----------
    trs: Trs
    avoid: Iterable
        Further names the standardized symbols must not match, e.g. the variables of a second TRS.
    """
    vstem, fstem = _stems(trs, Kind.F, avoid)
    identity = {name: name for name in trs.vars}
    family = [TermIso(_rule_fmap(rule, trs.sig, fstem), identity) for rule in trs.rules]
    return _assemble(trs, Kind.F, family, vstem, fstem)


def full_template(trs: Trs, avoid: Iterable = ()) -> TemplateResult:
    """Composition of the F-renaming with the V-template, rule by rule; both symbol sets are replaced."""
    vstem, fstem = _stems(trs, Kind.FULL, avoid)
    family = [TermIso(_rule_fmap(rule, trs.sig, fstem), _rule_vmap(rule, trs.vars, vstem)) for rule in trs.rules]
    return _assemble(trs, Kind.FULL, family, vstem, fstem)


def template(trs: Trs, kind: Kind, avoid: Iterable = ()) -> TemplateResult:
    kind = Kind.parse(kind)
    if kind is Kind.V:
        return v_template(trs, avoid)
    if kind is Kind.F:
        return f_template(trs, avoid)
    return full_template(trs, avoid)


def template_pair(a: Trs, b: Trs, kind: Kind) -> tuple:
    """
    Kind-templates of two TRSs over the same standardized names: each side avoids the fixed symbols of both.

    Returns
    -------
    tuple
        (TemplateResult of a, TemplateResult of b)
    """
    kind = Kind.parse(kind)
    if kind is Kind.V:
        return v_template(a, b.sig), v_template(b, a.sig)
    if kind is Kind.F:
        return f_template(a, b.vars), f_template(b, a.vars)
    return full_template(a), full_template(b)


def maximal_normal_form(trs: Trs, kind: Kind) -> tuple:
    """
    Keeps the first rule of every class of rules sharing their kind-template.

    Parameters
    ----------
    trs: Trs
    kind: Kind

    Returns
    -------
    tuple
        (Trs over the representatives with unchanged symbol sets, partition as lists of 0-based rule indices ordered
        by their first member)
    """
    result = template(trs, kind)
    dict_classes = {}
    for index, rule in enumerate(result.rules):
        dict_classes.setdefault(rule, []).append(index)
    partition = list(dict_classes.values())
    logger.debug("maximal %s-normal form keeps %d of %d rules", result.kind.value, len(partition), len(trs.rules))
    return trs.with_rules(trs.rules[members[0]] for members in partition), partition


# debugging
if __name__ == "__main__":
    pass
