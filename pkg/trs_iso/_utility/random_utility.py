"""
------------------------------------------------------------------------------------------------------------------------

RANDOM_UTILITY
--------------

Seeded generators for terms, TRSs, term isomorphisms, TRS pairs and directed graphs.
All randomness is drawn from a numpy Generator so every instance is reproducible from its seed.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import networkx as nx
import numpy as np

from ..core import App, Rule, Signature, Term, TermIso, Trs, Var, compose_iso, term_vars
from ._classes import TrsValidationError
from .config_utility import settings
# ______________________________________________________________________________________________________________________

FUNC_NAMES = ("f", "g", "h", "k", "p", "q", "s", "u", "w", "m", "n", "r")
CONST_NAMES = ("a", "b", "c", "d", "e", "o")
VAR_NAMES = ("x", "y", "z", "v", "t1", "t2", "t3", "t4")

SHAPES = ("independent", "mutated", "ge", "gve", "gfe", "se", "sve", "lve", "lfe", "le")


def make_rng(seed=None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(settings("defaults")["seed"] if seed is None else seed)


def _pick(rng: np.random.Generator, items):
    items = list(items)
    return items[int(rng.integers(len(items)))]


# Terms and rules
# ----------------------------------------------------------------------------------------------------------------------

def random_term(rng: np.random.Generator, funcs, variables, depth: int, leaf_prob: float = 0.3) -> Term | None:
    """
    Random term over (name, arity) pairs and variable names with height at most depth.

    Returns
    -------
    Term, None
        None if there is neither a constant nor a variable to close the term.
    """
    funcs = list(funcs)
    leaves = [App(name) for name, arity in funcs if arity == 0] + [Var(name) for name in variables]
    inner = [(name, arity) for name, arity in funcs if arity > 0]
    if not leaves:
        return None
    if depth <= 0 or not inner or rng.random() < leaf_prob:
        return _pick(rng, leaves)
    name, arity = _pick(rng, inner)
    args = [random_term(rng, funcs, variables, depth - 1, leaf_prob) for _ in range(arity)]
    return App(name, tuple(args))


def random_rule(rng: np.random.Generator, sig: Signature, variables, max_depth: int,
                max_size: int = None) -> Rule | None:
    """Random rule with a non-variable lhs and Var(rhs) contained in Var(lhs)."""
    funcs = list(sig.funcs)
    for _ in range(20):
        lhs = random_term(rng, funcs, variables, max_depth, leaf_prob=0.25)
        if lhs is None or isinstance(lhs, Var):
            heads = [(name, arity) for name, arity in funcs]
            if not heads:
                return None
            name, arity = _pick(rng, heads)
            args = [random_term(rng, funcs, variables, max_depth - 1) for _ in range(arity)]
            if any(arg is None for arg in args):
                continue
            lhs = App(name, tuple(args))
        rhs = random_term(rng, funcs, term_vars(lhs), max_depth)
        if rhs is None:
            continue
        rule = Rule(lhs, rhs)
        if max_size is None or rule.size <= max_size:
            return rule
    return None


def random_signature(rng: np.random.Generator, max_funcs: int, max_arity: int) -> Signature:
    """At least one constant; names are drawn without repetition from small pools."""
    count = int(rng.integers(1, max_funcs + 1))
    arities = [0] + [int(rng.integers(0, max_arity + 1)) for _ in range(count - 1)]
    const_pool = list(CONST_NAMES) + [f"c{i}" for i in range(max_funcs)]
    func_pool = list(FUNC_NAMES) + [f"f{i}" for i in range(max_funcs)]
    pairs = []
    for arity in arities:
        pool = const_pool if arity == 0 else func_pool
        pairs.append((pool.pop(0), arity))
    order = rng.permutation(len(pairs))
    return Signature(tuple(pairs[i] for i in order))


def random_trs(rng: np.random.Generator, max_funcs: int = None, max_vars: int = None, max_rules: int = None,
               max_depth: int = None, max_arity: int = None, minimal: bool = None) -> Trs:
    """
    Random strict TRS; parameters default to the [generator] section of the configuration-file.
    Duplicate rules are dropped, so the rule count may fall below the drawn one.
    """
    dict_cfg = settings("generator")
    max_funcs = dict_cfg["max_funcs"] if max_funcs is None else max_funcs
    max_vars = dict_cfg["max_vars"] if max_vars is None else max_vars
    max_rules = dict_cfg["max_rules"] if max_rules is None else max_rules
    max_depth = dict_cfg["max_depth"] if max_depth is None else max_depth
    max_arity = dict_cfg["max_arity"] if max_arity is None else max_arity

    sig = random_signature(rng, max_funcs, max_arity)
    variables = list(VAR_NAMES[:int(rng.integers(0, max_vars + 1))])
    rules = {}
    for _ in range(int(rng.integers(1, max_rules + 1))):
        rule = random_rule(rng, sig, variables, max_depth)
        if rule is not None:
            rules.setdefault(rule, None)
    trs = Trs(sig, tuple(variables), tuple(rules))
    if minimal is None:
        minimal = rng.random() < 0.8
    return trs.minimized() if minimal else trs


# Isomorphisms and TRS pairs
# ----------------------------------------------------------------------------------------------------------------------

def _permute_groups(rng: np.random.Generator, groups: dict, images: dict) -> dict:
    mapping = {}
    for key, names in groups.items():
        targets = images[key]
        for name, index in zip(names, rng.permutation(len(targets))):
            mapping[name] = targets[int(index)]
    return mapping


def random_iso(rng: np.random.Generator, source: Trs, funcs: bool = True, variables: bool = True,
               fresh: bool = False) -> TermIso:
    """
    Random term isomorphism on the symbols of source. Disabled symbol sets are mapped identically; with fresh=True
    the renamed sets receive primed names.
    """
    dict_groups = source.sig.by_arity()
    if funcs:
        images = {arity: [name + "'" if fresh else name for name in names] for arity, names in dict_groups.items()}
        fmap = _permute_groups(rng, dict_groups, images)
    else:
        fmap = {name: name for name in source.sig}
    if variables:
        targets = [name + "'" if fresh else name for name in source.vars]
        vmap = _permute_groups(rng, {0: list(source.vars)}, {0: targets})
    else:
        vmap = {name: name for name in source.vars}
    return TermIso(fmap, vmap)


def image_trs(iso: TermIso, source: Trs, rules=None) -> Trs:
    """Target TRS over the codomain of iso; rules default to the global image of the source rules."""
    sig = Signature(tuple((iso.fmap[name], arity) for name, arity in source.sig.funcs))
    variables = tuple(iso.vmap[name] for name in source.vars)
    if rules is None:
        rules = [iso.apply_rule(rule) for rule in source.rules]
    return Trs(sig, variables, tuple(rules), source.permissive)


def perturbed_copy(rng: np.random.Generator, source: Trs, shape: str) -> Trs:
    """
    Copy of source under a random witness of the given relation shape (ge, gve, gfe, se, sve, lve, lfe, le), with the
    rule order shuffled. Families whose images collide fall back to the global image.
    """
    keep_funcs = shape in ("gve", "lve")
    keep_vars = shape in ("gfe", "lfe")
    base = random_iso(rng, source, funcs=not keep_funcs, variables=not keep_vars, fresh=bool(rng.random() < 0.5))
    target = image_trs(base, source)
    if shape in ("se", "sve", "lve", "lfe", "le"):
        local_vars = shape in ("se", "lve", "le")
        local_funcs = shape in ("sve", "lfe", "le")
        rules = []
        for rule in source.rules:
            local = random_iso(rng, target, funcs=local_funcs, variables=local_vars)
            rules.append(compose_iso(local, base).apply_rule(rule))
        try:
            target = image_trs(base, source, rules)
        except TrsValidationError:
            pass
    order = rng.permutation(len(target.rules))
    return target.with_rules(target.rules[int(i)] for i in order)


def mutated_copy(rng: np.random.Generator, source: Trs) -> Trs:
    """Global copy with one rule replaced by a fresh random rule over the same symbols."""
    target = perturbed_copy(rng, source, "ge")
    if not target.rules:
        return target
    rules = list(target.rules)
    index = int(rng.integers(len(rules)))
    replacement = random_rule(rng, target.sig, list(target.vars), 2)
    if replacement is None or replacement in rules:
        return target
    rules[index] = replacement
    return target.with_rules(rules)


def random_pair(rng: np.random.Generator, shape: str = None, **kwargs) -> tuple:
    """
    TRS pair for the oracle suites; shape 'independent' draws two unrelated TRSs, 'mutated' a near copy, every other
    shape a perturbed copy under a witness of that relation.
    """
    shape = _pick(rng, SHAPES) if shape is None else shape
    source = random_trs(rng, **kwargs)
    if shape == "independent":
        return source, random_trs(rng, **kwargs)
    if shape == "mutated":
        return source, mutated_copy(rng, source)
    return source, perturbed_copy(rng, source, shape)


# Directed graphs
# ----------------------------------------------------------------------------------------------------------------------

def random_digraph(rng: np.random.Generator, max_nodes: int = 6) -> nx.DiGraph:
    """Random directed graph (self-loops allowed) without isolated vertices; nodes are named '1', '2', ..."""
    count = int(rng.integers(1, max_nodes + 1))
    size = int(rng.integers(1, count * count + 1))
    graph = nx.DiGraph()
    graph.add_nodes_from(str(i + 1) for i in range(count))
    for flat in sorted(int(i) for i in rng.choice(count * count, size=size, replace=False)):
        graph.add_edge(str(flat // count + 1), str(flat % count + 1))
    graph.remove_nodes_from(list(nx.isolates(graph)))
    return graph


def relabelled_digraph(rng: np.random.Generator, graph: nx.DiGraph, mutate: bool = False) -> nx.DiGraph:
    nodes = list(graph.nodes)
    order = rng.permutation(len(nodes))
    mapping = {node: nodes[int(i)] for node, i in zip(nodes, order)}
    result = nx.DiGraph()
    result.add_nodes_from(nodes)
    result.add_edges_from((mapping[u], mapping[v]) for u, v in graph.edges)
    if mutate and result.number_of_edges() > 1:
        u, v = list(result.edges)[int(rng.integers(result.number_of_edges()))]
        result.remove_edge(u, v)
        result.add_edge(v, u)
        result.remove_nodes_from(list(nx.isolates(result)))
    return result


# debugging
if __name__ == "__main__":
    pass
