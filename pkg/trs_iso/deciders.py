"""
------------------------------------------------------------------------------------------------------------------------

DECIDERS
--------

Decision procedures for the renaming relations between two TRSs.

    global      GE, GVE, GFE    one isomorphism for all rules; decided by strong isomorphism of the graph encodings
    standard    SE, SVE         one common function (SE) or variable (SVE) renaming, the other part per rule
    local       LE, LVE, LFE    one isomorphism per rule; decided by comparing template sets
    generalised LE*, ... SVE*   the relations above on the minimized, padded maximal normal forms

Local and standard relations require their normal form and refuse other inputs with NormalFormViolation.
Every Iso decision carries a witness that passed verify_witness.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations, product

import pandas as pd

from .core import App, Kind, Rule, Signature, Term, TermIso, Trs, Var, compose_iso, find_equivalent_pair, \
    invert_iso, is_valid_iso
from .graphs import anchor_nodes, graph_f, graph_full, graph_v, strong_iso
from .rewriting import one_step_violations, sample_terms
from .templates import maximal_normal_form, template_pair
from ._utility._classes import CompatibilityPreconditionError, NormalFormViolation, SizeGuardExceeded, \
    TrsIsoError, WitnessShapeError
from ._utility.config_utility import settings
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)


# Relations, witnesses and decisions
# ----------------------------------------------------------------------------------------------------------------------

class Relation(Enum):
    LE = "le"
    LVE = "lve"
    LFE = "lfe"
    SE = "se"
    SVE = "sve"
    GE = "ge"
    GVE = "gve"
    GFE = "gfe"
    LE_G = "le*"
    LVE_G = "lve*"
    LFE_G = "lfe*"
    SE_G = "se*"
    SVE_G = "sve*"

    @classmethod
    def parse(cls, value) -> "Relation":
        """Accepts members and their names in any case; generalised forms end with '*' or 'g' (se*, SEg)."""
        if isinstance(value, cls):
            return value
        text = str(value).strip().lower()
        if text.endswith("g") and text[:-1] in _BASE_NAMES:
            text = text[:-1] + "*"
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown relation {value!r}; expected one of "
                             f"{', '.join(member.value for member in cls)}") from None

    @property
    def is_global(self) -> bool:
        return self in (Relation.GE, Relation.GVE, Relation.GFE)

    @property
    def is_local(self) -> bool:
        return self in (Relation.LE, Relation.LVE, Relation.LFE)

    @property
    def is_standard(self) -> bool:
        return self in (Relation.SE, Relation.SVE)

    @property
    def is_generalised(self) -> bool:
        return self.value.endswith("*")

    @property
    def base(self) -> "Relation":
        """The ungeneralised relation (the relation itself if it is not generalised)."""
        return Relation(self.value.rstrip("*"))

    @property
    def normal_form(self) -> Kind | None:
        """Normal form the ungeneralised relation requires of its inputs."""
        return _NORMAL_FORMS.get(self.base)

    @property
    def f_invariant(self) -> bool:
        return self.base in (Relation.GVE, Relation.LVE)

    @property
    def v_invariant(self) -> bool:
        return self.base in (Relation.GFE, Relation.LFE)


_BASE_NAMES = ("le", "lve", "lfe", "se", "sve")
_NORMAL_FORMS = {Relation.LE: Kind.FULL, Relation.LVE: Kind.V, Relation.LFE: Kind.F,
                 Relation.SE: Kind.V, Relation.SVE: Kind.F}
_LOCAL_TEMPLATES = {Relation.LE: Kind.FULL, Relation.LVE: Kind.V, Relation.LFE: Kind.F}
_ENCODINGS = {Relation.GE: (graph_full, "full"), Relation.GVE: (graph_v, "gv"), Relation.GFE: (graph_f, "gf")}

UNGENERALISED = tuple(relation for relation in Relation if not relation.is_generalised)
GENERALISED = tuple(relation for relation in Relation if relation.is_generalised)


@dataclass(frozen=True)
class GlobalWitness:
    iso: TermIso


@dataclass(frozen=True)
class FamilyWitness:
    """
    Attributes
    ----------
    members: tuple
        One TermIso per rule of the first TRS.
    rule_matching: tuple
        rule_matching[i] is the index of the image of rule i in the second TRS.
    """

    members: tuple
    rule_matching: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "rule_matching", tuple(self.rule_matching))
        if len(self.members) != len(self.rule_matching):
            raise WitnessShapeError(f"{len(self.members)} members but {len(self.rule_matching)} matched rules")


class Verdict(Enum):
    ISO = "iso"
    NOT_ISO = "not-iso"


@dataclass
class Decision:
    """
    Attributes
    ----------
    relation: Relation
    verdict: Verdict
    witness: GlobalWitness, FamilyWitness, None
        Present exactly for Iso verdicts.
    trail: list
        Diagnostic messages in the order they were produced.
    padded: tuple
        Generalised relations only: the minimized and padded normal forms the witness refers to.
    """

    relation: Relation
    verdict: Verdict
    witness: GlobalWitness | FamilyWitness | None = None
    trail: list = field(default_factory=list)
    padded: tuple | None = None

    @property
    def is_iso(self) -> bool:
        return self.verdict is Verdict.ISO

    def to_json(self) -> dict:
        return witness_to_json(self)


def _note(trail: list, message: str) -> None:
    logger.debug(message)
    trail.append(message)


def _not_iso(relation: Relation, trail: list, reason: str) -> Decision:
    _note(trail, f"{relation.value}: not isomorphic, {reason}")
    return Decision(relation, Verdict.NOT_ISO, None, trail)


def _iso(a: Trs, b: Trs, relation: Relation, witness, trail: list) -> Decision:
    if not verify_witness(a, b, relation, witness):
        raise TrsIsoError(f"{relation.value}: constructed witness failed verification")
    _note(trail, f"{relation.value}: isomorphic, witness verified")
    return Decision(relation, Verdict.ISO, witness, trail)


# Preconditions
# ----------------------------------------------------------------------------------------------------------------------

def _require_normal_form(trs: Trs, relation: Relation, side: str) -> None:
    kind = relation.normal_form
    if kind is None or relation.is_generalised:
        return
    pair = find_equivalent_pair(trs, kind)
    if pair is not None:
        i, j, witness = pair
        message = (f"{relation.value} needs the {side} TRS in {kind.value}-normal form, but rules {i} "
                   f"({trs.rules[i]}) and {j} ({trs.rules[j]}) are {kind.value}-equivalent")
        logger.info(message)
        raise NormalFormViolation(message, (i, j), witness)


def _symbol_sets_compatible(a: Trs, b: Trs, relation: Relation) -> str | None:
    """Reason why no witness of relation can exist on the symbol level, or None."""
    if a.sig.profile() != b.sig.profile():
        return (f"function symbols per arity differ ({dict(sorted(a.sig.profile().items()))} vs "
                f"{dict(sorted(b.sig.profile().items()))})")
    if len(a.vars) != len(b.vars):
        return f"variable counts differ ({len(a.vars)} vs {len(b.vars)})"
    if relation.f_invariant and not a.sig.same_symbols(b.sig):
        return "function-invariant renaming needs identical signatures"
    if relation.v_invariant and set(a.vars) != set(b.vars):
        return "variable-invariant renaming needs identical variable sets"
    if len(a.rules) != len(b.rules):
        return f"rule counts differ ({len(a.rules)} vs {len(b.rules)})"
    return None


# Deciders
# ----------------------------------------------------------------------------------------------------------------------

def decide_local(a: Trs, b: Trs, kind) -> Decision:
    """
    LE, LVE or LFE by comparison of the full, V- or F-template sets.

    Parameters
    ----------
    a, b: Trs
        In the normal form required by kind (full, V or F).
    kind: Relation, str

    Returns
    -------
    Decision
        Iso with the family phi_i = inverse(template_b[sigma(i)]) after template_a[i].
    """
    relation = Relation.parse(kind)
    if not relation.is_local:
        raise ValueError(f"{relation.value} is not a local relation")
    trail = []
    _require_normal_form(a, relation, "first")
    _require_normal_form(b, relation, "second")
    reason = _symbol_sets_compatible(a, b, relation)
    if reason is not None:
        return _not_iso(relation, trail, reason)

    template_a, template_b = template_pair(a, b, _LOCAL_TEMPLATES[relation])
    if template_a.sets != template_b.sets:
        return _not_iso(relation, trail, "standardized symbol sets differ")
    _note(trail, f"{relation.value}: {len(a.rules)} {template_a.kind.value}-templates per side")

    dict_index_b = {rule: j for j, rule in enumerate(template_b.rules)}
    members, matching = [], []
    for i, rule in enumerate(template_a.rules):
        j = dict_index_b.get(rule)
        if j is None:
            return _not_iso(relation, trail, f"template {rule} of rule {i} ({a.rules[i]}) has no counterpart")
        matching.append(j)
        members.append(compose_iso(invert_iso(template_b.family[j]), template_a.family[i]))
    return _iso(a, b, relation, FamilyWitness(tuple(members), tuple(matching)), trail)


def _read_off(a: Trs, b: Trs, mapping: dict, encoding: str) -> TermIso:
    """Symbol renaming induced by the anchor correspondence of a strong isomorphism."""
    funcs_a, vars_a = anchor_nodes(a, encoding)
    funcs_b, vars_b = anchor_nodes(b, encoding)
    symbol_b = {node: name for name, node in (funcs_b | vars_b).items()}

    # anchors of unused symbols are isolated and may be paired across arities, so they are paired again by arity
    used_funcs = {name for name, _ in a.used_funcs()}
    fmap = {name: name for name in a.sig} if not funcs_a else \
        {name: symbol_b[mapping[funcs_a[name]]] for name in a.sig if name in used_funcs}
    free_funcs = [name for name in b.sig if name not in set(fmap.values())]
    for name in a.sig:
        if name not in fmap:
            image = next(other for other in free_funcs if b.sig.arity(other) == a.sig.arity(name))
            free_funcs.remove(image)
            fmap[name] = image

    used_vars = set(a.used_vars())
    vmap = {name: name for name in a.vars} if not vars_a else \
        {name: symbol_b[mapping[vars_a[name]]] for name in a.vars if name in used_vars}
    free_vars = [name for name in b.vars if name not in set(vmap.values())]
    for name in a.vars:
        if name not in vmap:
            vmap[name] = free_vars.pop(0)
    return TermIso(fmap, vmap)


def decide_global(a: Trs, b: Trs, kind) -> Decision:
    """
    GE, GVE or GFE by strong isomorphism of graph_full, graph_v or graph_f; no normal form is required.
    """
    relation = Relation.parse(kind)
    if not relation.is_global:
        raise ValueError(f"{relation.value} is not a global relation")
    trail = []
    reason = _symbol_sets_compatible(a, b, relation)
    if reason is not None:
        return _not_iso(relation, trail, reason)

    encoder, encoding = _ENCODINGS[relation]
    graph_a, graph_b = encoder(a), encoder(b)
    _note(trail, f"{relation.value}: {encoding} encodings with {len(graph_a.nodes)} nodes")
    mapping = strong_iso(graph_a, graph_b)
    if mapping is None:
        return _not_iso(relation, trail, f"{encoding} encodings are not strongly isomorphic")
    return _iso(a, b, relation, GlobalWitness(_read_off(a, b, mapping, encoding)), trail)


def decide_standard(a: Trs, b: Trs, kind) -> Decision:
    """
    SE as GFE on the V-templates, SVE as GVE on the F-templates.

    The standard family is rebuilt from the global witness phi' of the templated TRSs as
    phi_i = inverse(template_b[sigma(i)]) after phi' after template_a[i].
    """
    relation = Relation.parse(kind)
    if not relation.is_standard:
        raise ValueError(f"{relation.value} is not a standard relation")
    trail = []
    _require_normal_form(a, relation, "first")
    _require_normal_form(b, relation, "second")
    reason = _symbol_sets_compatible(a, b, relation)
    if reason is not None:
        return _not_iso(relation, trail, reason)

    if relation is Relation.SE:
        (template_a, template_b), inner_relation = template_pair(a, b, Kind.V), Relation.GFE
    else:
        (template_a, template_b), inner_relation = template_pair(a, b, Kind.F), Relation.GVE
    if template_a.sets != template_b.sets:
        return _not_iso(relation, trail, "standardized symbol sets of the templates differ")

    inner = decide_global(template_a.templated, template_b.templated, inner_relation)
    trail.extend(f"templates: {message}" for message in inner.trail)
    if not inner.is_iso:
        return _not_iso(relation, trail, f"templated TRSs are not {inner_relation.value}-isomorphic")

    phi = inner.witness.iso
    dict_index_b = {rule: j for j, rule in enumerate(template_b.rules)}
    members, matching = [], []
    for i, rule in enumerate(template_a.rules):
        j = dict_index_b[phi.apply_rule(rule)]
        matching.append(j)
        members.append(compose_iso(invert_iso(template_b.family[j]), compose_iso(phi, template_a.family[i])))
    return _iso(a, b, relation, FamilyWitness(tuple(members), tuple(matching)), trail)


def _pad(a: Trs, b: Trs) -> tuple:
    profile_a, profile_b = a.sig.profile(), b.sig.profile()
    padded = []
    for trs, own_profile, other_profile in ((a, profile_a, profile_b), (b, profile_b, profile_a)):
        funcs = [(f"_pad_{k}_{arity}", arity) for arity in sorted(set(own_profile) | set(other_profile))
                 for k in range(1, other_profile[arity] - own_profile[arity] + 1)]
        other_vars = len(b.vars) if trs is a else len(a.vars)
        variables = [f"_pad_{k}" for k in range(1, other_vars - len(trs.vars) + 1)]
        padded.append(trs.extended(funcs, variables))
    return tuple(padded)


def prepare_generalised(a: Trs, b: Trs, kind) -> tuple:
    """
    Maximal normal forms of the kind the base relation requires, minimized to their occurring symbols and padded
    with _pad_k_l function symbols (k-th dummy of arity l) and _pad_k variables to a common symbol profile.

    Returns
    -------
    tuple
        (padded a, padded b)
    """
    relation = Relation.parse(kind)
    if not relation.is_generalised:
        raise ValueError(f"{relation.value} is not a generalised relation")
    normal_a, _ = maximal_normal_form(a, relation.normal_form)
    normal_b, _ = maximal_normal_form(b, relation.normal_form)
    return _pad(normal_a.minimized(), normal_b.minimized())


def decide_generalised(a: Trs, b: Trs, kind) -> Decision:
    relation = Relation.parse(kind)
    padded_a, padded_b = prepare_generalised(a, b, relation)
    trail = []
    _note(trail, f"{relation.value}: maximal {relation.normal_form.value}-normal forms keep "
                 f"{len(padded_a.rules)} of {len(a.rules)} and {len(padded_b.rules)} of {len(b.rules)} rules")
    inner = decide_any(padded_a, padded_b, relation.base)
    trail.extend(inner.trail)
    return Decision(relation, inner.verdict, inner.witness, trail, (padded_a, padded_b))


def decide_any(a: Trs, b: Trs, r) -> Decision:
    relation = Relation.parse(r)
    if relation.is_generalised:
        return decide_generalised(a, b, relation)
    if relation.is_global:
        return decide_global(a, b, relation)
    if relation.is_standard:
        return decide_standard(a, b, relation)
    return decide_local(a, b, relation)


# Witness verification
# ----------------------------------------------------------------------------------------------------------------------

def verify_witness(a: Trs, b: Trs, r, w) -> bool:
    """
    Direct check of the defining condition of r: the witness maps the rules of a exactly onto the rules of b,
    respecting the invariance and commonality constraints of r and its normal-form precondition.

    For generalised relations the witness refers to the padded normal forms of prepare_generalised.

    Raises
    ------
    WitnessShapeError
        Global witness for a non-global relation or vice versa.
    """
    relation = Relation.parse(r)
    if relation.is_generalised:
        a, b = prepare_generalised(a, b, relation)
        relation = relation.base
    if relation.is_global != isinstance(w, GlobalWitness) or not isinstance(w, (GlobalWitness, FamilyWitness)):
        raise WitnessShapeError(f"{type(w).__name__} does not fit the relation {relation.value}")
    try:
        _require_normal_form(a, relation, "first")
        _require_normal_form(b, relation, "second")
    except NormalFormViolation:
        return False
    if _symbol_sets_compatible(a, b, relation) is not None:
        return False

    members = (w.iso,) if isinstance(w, GlobalWitness) else w.members
    for iso in members:
        if not is_valid_iso(iso, a, b):
            return False
        if relation.f_invariant and not iso.is_f_invariant():
            return False
        if relation.v_invariant and not iso.is_v_invariant():
            return False

    if isinstance(w, GlobalWitness):
        return {w.iso.apply_rule(rule) for rule in a.rules} == b.rule_set()

    if len(w.members) != len(a.rules) or sorted(w.rule_matching) != list(range(len(b.rules))):
        return False
    if relation is Relation.SE and any(iso.fmap != w.members[0].fmap for iso in w.members):
        return False
    if relation is Relation.SVE and any(iso.vmap != w.members[0].vmap for iso in w.members):
        return False
    return all(iso.apply_rule(rule) == b.rules[j] for iso, rule, j in zip(w.members, a.rules, w.rule_matching))


# Brute force
# ----------------------------------------------------------------------------------------------------------------------

def _rename(t: Term, fmap: dict, vmap: dict) -> Term:
    if isinstance(t, Var):
        return Var(vmap[t.name])
    return App(fmap[t.head], tuple(_rename(arg, fmap, vmap) for arg in t.args))


def _rename_rule(rule: Rule, fmap: dict, vmap: dict) -> Rule:
    return Rule(_rename(rule.lhs, fmap, vmap), _rename(rule.rhs, fmap, vmap))


def _fmaps(a: Signature, b: Signature, invariant: bool) -> list:
    if invariant:
        return [{name: name for name in a}]
    groups_a, groups_b = a.by_arity(), b.by_arity()
    arities = sorted(groups_a)
    options = [[dict(zip(groups_a[arity], images)) for images in permutations(groups_b[arity])]
               for arity in arities]
    return [{k: v for part in combo for k, v in part.items()} for combo in product(*options)]


def _vmaps(a: tuple, b: tuple, invariant: bool) -> list:
    if invariant:
        return [{name: name for name in a}]
    return [dict(zip(a, images)) for images in permutations(b)]


def _has_matching(matrix: list) -> bool:
    n = len(matrix)
    return any(all(matrix[i][sigma[i]] for i in range(n)) for sigma in permutations(range(n)))


def brute_force_decide(a: Trs, b: Trs, r) -> bool:
    """
    Exhaustive search over all arity-respecting symbol bijections and rule matchings.

    Local relations pick an independent renaming per rule, SE shares the function renaming and SVE the variable
    renaming across the rules. Generalised relations are checked on their padded normal forms.

    Raises
    ------
    SizeGuardExceeded
        If a TRS exceeds the [guards] limits of the configuration-file.
    NormalFormViolation
        If the normal-form precondition of an ungeneralised local or standard relation fails.
    """
    relation = Relation.parse(r)
    if relation.is_generalised:
        a, b = prepare_generalised(a, b, relation)
        relation = relation.base
    dict_guards = settings("guards")
    for trs in (a, b):
        if (len(trs.sig) > dict_guards["max_funcs"] or len(trs.vars) > dict_guards["max_vars"]
                or len(trs.rules) > dict_guards["max_rules"]):
            raise SizeGuardExceeded(
                f"brute force is limited to {dict_guards['max_funcs']} function symbols, {dict_guards['max_vars']} "
                f"variables and {dict_guards['max_rules']} rules; got {len(trs.sig)}, {len(trs.vars)} and "
                f"{len(trs.rules)}")
    _require_normal_form(a, relation, "first")
    _require_normal_form(b, relation, "second")
    if _symbol_sets_compatible(a, b, relation) is not None:
        return False

    fmaps = _fmaps(a.sig, b.sig, relation.f_invariant)
    vmaps = _vmaps(a.vars, b.vars, relation.v_invariant)
    if relation.is_global:
        target = b.rule_set()
        return any({_rename_rule(rule, fmap, vmap) for rule in a.rules} == target
                   for fmap in fmaps for vmap in vmaps)

    # the outer loop enumerates the part shared by all rules, the matrix collects per-rule completions
    if relation in (Relation.SE, Relation.LVE):
        shared = [(fmap, [(fmap, vmap) for vmap in vmaps]) for fmap in fmaps]
    elif relation in (Relation.SVE, Relation.LFE):
        shared = [(vmap, [(fmap, vmap) for fmap in fmaps]) for vmap in vmaps]
    else:
        shared = [(None, [(fmap, vmap) for fmap in fmaps for vmap in vmaps])]
    for _, completions in shared:
        matrix = [[any(_rename_rule(rule_a, fmap, vmap) == rule_b for fmap, vmap in completions)
                   for rule_b in b.rules] for rule_a in a.rules]
        if _has_matching(matrix):
            return True
    return False


# Semantic compatibility
# ----------------------------------------------------------------------------------------------------------------------

SEMANTIC_RELATIONS = (Relation.GE, Relation.GVE, Relation.GFE, Relation.SE, Relation.LVE)


@dataclass(frozen=True)
class CompatibilityReport:
    """
    Attributes
    ----------
    relation: Relation
    samples: int
        Number of sample terms checked per witness member.
    violations: tuple
        Pairs (member index, StepViolation).
    """

    relation: Relation
    samples: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def check_semantic_compatibility(a: Trs, b: Trs, r, w, seed=None) -> CompatibilityReport:
    """
    Checks on seeded sample terms that every witness member carries the one-step successors under a onto the
    one-step successors under b.

    Raises
    ------
    CompatibilityPreconditionError
        If r is not one of GE, GVE, GFE, SE, LVE or w does not verify.
    """
    relation = Relation.parse(r)
    if relation not in SEMANTIC_RELATIONS:
        raise CompatibilityPreconditionError(
            f"one-step compatibility only holds for {', '.join(item.value for item in SEMANTIC_RELATIONS)}; "
            f"got {relation.value}")
    if not verify_witness(a, b, relation, w):
        raise CompatibilityPreconditionError(f"the witness does not verify for {relation.value}")
    terms = sample_terms(a, seed)
    members = (w.iso,) if isinstance(w, GlobalWitness) else w.members
    violations = tuple((index, violation) for index, iso in enumerate(members)
                       for violation in one_step_violations(a, b, iso, terms))
    if violations:
        logger.warning("%d one-step violations for %s", len(violations), relation.value)
    return CompatibilityReport(relation, len(terms), violations)


# Survey and serialization
# ----------------------------------------------------------------------------------------------------------------------

def survey(a: Trs, b: Trs, relations=None) -> pd.DataFrame:
    """
    Decides every relation (all thirteen by default) for one pair.

    Returns
    -------
    pd.DataFrame
        Columns relation, verdict ('iso', 'not-iso' or 'nf-violation') and detail (last trail message or the
        violation message).
    """
    list_rows = []
    for relation in (Relation if relations is None else [Relation.parse(item) for item in relations]):
        try:
            decision = decide_any(a, b, relation)
            list_rows.append({"relation": relation.value, "verdict": decision.verdict.value,
                              "detail": decision.trail[-1] if decision.trail else ""})
        except NormalFormViolation as err:
            list_rows.append({"relation": relation.value, "verdict": "nf-violation", "detail": str(err)})
    return pd.DataFrame(list_rows, columns=["relation", "verdict", "detail"])


def witness_to_json(decision: Decision) -> dict:
    """The witness JSON object of a decision; the witness entry is null for NotIso."""
    witness = decision.witness
    if isinstance(witness, GlobalWitness):
        dict_witness = {"kind": "global"} | witness.iso.to_dict()
    elif isinstance(witness, FamilyWitness):
        dict_witness = {"kind": "family", "members": [iso.to_dict() for iso in witness.members],
                        "rule_matching": list(witness.rule_matching)}
    else:
        dict_witness = None
    return {"relation": decision.relation.value, "verdict": decision.verdict.value, "witness": dict_witness}


def witness_from_json(data: dict) -> GlobalWitness | FamilyWitness | None:
    """Reads the witness entry of a witness JSON object (or the entry itself)."""
    entry = data.get("witness", data) if "kind" not in data else data
    if entry is None:
        return None
    try:
        if entry["kind"] == "global":
            return GlobalWitness(TermIso(entry["fmap"], entry["vmap"]))
        if entry["kind"] == "family":
            return FamilyWitness(tuple(TermIso(item["fmap"], item["vmap"]) for item in entry["members"]),
                                 tuple(int(j) for j in entry["rule_matching"]))
    except (KeyError, TypeError) as err:
        raise WitnessShapeError(f"malformed witness: {err}") from err
    raise WitnessShapeError(f"unknown witness kind {entry['kind']!r}")


# debugging
if __name__ == "__main__":
    pass
