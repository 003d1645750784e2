"""
------------------------------------------------------------------------------------------------------------------------

GRAPHS
------

Outgoing-ordered labelled directed graphs (OOLDG) and the encodings between TRSs and graphs.

    term_tree / rule_tree / trs_forest    trees with argument positions as edge labels
    graph_f / graph_v / graph_full        anchor encodings: symbol occurrences point to one anchor node per symbol
    strong_iso                            node bijection preserving node and edge labels exactly
    graph_to_trs_funcs / _vars            directed graph -> TRS (vertices as function symbols or as variables)

Node ids of the encodings are sequential integers assigned in pre-order, rule by rule, lhs before rhs, followed by
the anchors in declaration order. Argument edges carry the labels 1..n; the label 0 is reserved for anchor edges.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import json
import logging
from dataclasses import dataclass
from enum import IntEnum
from itertools import permutations

import networkx as nx

from .core import App, Rule, Signature, Term, Trs, Var, check_symbol, term_size
from ._utility._classes import GraphFormatError, IsolatedVertexError, SizeGuardExceeded, TrsValidationError
from ._utility.config_utility import settings
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)


# Labels
# ----------------------------------------------------------------------------------------------------------------------

class LabelKind(IntEnum):
    SYM = 0
    T = 1
    F = 2
    C = 3
    GMARK = 4
    ZMARK = 5
    NAT = 6


_KIND_NAMES = {LabelKind.SYM: "sym", LabelKind.T: "t", LabelKind.F: "f", LabelKind.C: "c",
               LabelKind.GMARK: "g", LabelKind.ZMARK: "z", LabelKind.NAT: "nat"}
_KIND_BY_NAME = {value: key for key, value in _KIND_NAMES.items()}


@dataclass(frozen=True, order=True)
class GLabel:
    """
    Node or edge label; ordered by variant first, then payload.

    Attributes
    ----------
    kind: LabelKind
    name: str
        Payload of SYM labels.
    value: int
        Payload of NAT labels.
    """

    kind: LabelKind
    name: str = ""
    value: int = 0

    @classmethod
    def sym(cls, name: str) -> "GLabel":
        return cls(LabelKind.SYM, name=name)

    @classmethod
    def nat(cls, value: int) -> "GLabel":
        if value < 0:
            raise GraphFormatError(f"natural label must be non-negative, got {value}")
        return cls(LabelKind.NAT, value=value)

    def __str__(self) -> str:
        if self.kind is LabelKind.SYM:
            return self.name
        if self.kind is LabelKind.NAT:
            return str(self.value)
        return {LabelKind.GMARK: "g", LabelKind.ZMARK: "z"}.get(self.kind, self.kind.name)

    def to_json(self) -> dict:
        dict_label = {"kind": _KIND_NAMES[self.kind]}
        if self.kind is LabelKind.SYM:
            dict_label["name"] = self.name
        elif self.kind is LabelKind.NAT:
            dict_label["value"] = self.value
        return dict_label

    @classmethod
    def from_json(cls, data: dict) -> "GLabel":
        try:
            kind = _KIND_BY_NAME[data["kind"]]
            if kind is LabelKind.SYM:
                return cls.sym(str(data["name"]))
            if kind is LabelKind.NAT:
                return cls.nat(int(data["value"]))
        except (KeyError, TypeError, ValueError) as err:
            raise GraphFormatError(f"invalid label {data!r}") from err
        return cls(kind)


T_LABEL = GLabel(LabelKind.T)
F_LABEL = GLabel(LabelKind.F)
C_LABEL = GLabel(LabelKind.C)
G_LABEL = GLabel(LabelKind.GMARK)
Z_LABEL = GLabel(LabelKind.ZMARK)
ANCHOR_EDGE = GLabel.nat(0)


# Graph model
# ----------------------------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Ooldg:
    """
    Outgoing-ordered labelled directed graph: for a fixed source node no two outgoing edges share their label.

    Attributes
    ----------
    nodes: dict
        Node id (int) to GLabel.
    edges: frozenset
        Triples (src, dst, GLabel).
    """

    nodes: dict
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "nodes", dict(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        seen = set()
        for src, dst, label in self.edges:
            if src not in self.nodes or dst not in self.nodes:
                raise GraphFormatError(f"edge ({src}, {dst}, {label}) has an endpoint outside the node set")
            if (src, label) in seen:
                raise GraphFormatError(f"node {src} has two outgoing edges labelled {label}")
            seen.add((src, label))

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=lambda edge: (edge[0], edge[2], edge[1]))

    def root(self) -> int:
        """The unique node without incoming edges."""
        targets = {dst for _, dst, _ in self.edges}
        roots = [node for node in self.nodes if node not in targets]
        if len(roots) != 1:
            raise GraphFormatError(f"expected a tree with exactly one root, found {len(roots)}")
        return roots[0]

    def union(self, *others: "Ooldg") -> "Ooldg":
        nodes = dict(self.nodes)
        edges = set(self.edges)
        for other in others:
            collision = nodes.keys() & other.nodes.keys()
            if collision:
                raise GraphFormatError(f"node-id collision on {sorted(collision)}")
            nodes.update(other.nodes)
            edges |= other.edges
        return Ooldg(nodes, frozenset(edges))

    def label_count(self, label: GLabel) -> int:
        return sum(1 for value in self.nodes.values() if value == label)


def to_networkx(graph: Ooldg) -> nx.DiGraph:
    """networkx view with 'label' attributes on nodes and edges."""
    result = nx.DiGraph()
    for node in sorted(graph.nodes):
        result.add_node(node, label=graph.nodes[node])
    for src, dst, label in graph.sorted_edges():
        if result.has_edge(src, dst):
            raise GraphFormatError(f"parallel edges between {src} and {dst} have no DiGraph view")
        result.add_edge(src, dst, label=label)
    return result


# Trees and forests
# ----------------------------------------------------------------------------------------------------------------------

def join(root_label: GLabel, subtrees: list, root_id: int = None) -> Ooldg:
    """
    Fresh root labelled root_label with an edge labelled i to the root of the i-th subtree.

    Parameters
    ----------
    root_label: GLabel
    subtrees: list
        Pairwise node-disjoint trees.
    root_id: int
        Id of the new root; defaults to one above the largest id in use.

    Returns
    -------
    Ooldg
    """
    forest = Ooldg({}, frozenset()).union(*subtrees)
    if root_id is None:
        root_id = max(forest.nodes, default=-1) + 1
    if root_id in forest.nodes:
        raise GraphFormatError(f"node-id collision on root id {root_id}")
    edges = set(forest.edges)
    edges.update((root_id, subtree.root(), GLabel.nat(i)) for i, subtree in enumerate(subtrees, start=1))
    return Ooldg({root_id: root_label, **forest.nodes}, frozenset(edges))


def _term_tree(t: Term, start: int) -> tuple:
    if isinstance(t, Var):
        return Ooldg({start: GLabel.sym(t.name)}, frozenset()), start + 1
    next_id = start + 1
    children = []
    for arg in t.args:
        child, next_id = _term_tree(arg, next_id)
        children.append(child)
    return join(GLabel.sym(t.head), children, root_id=start), next_id


def term_tree(t: Term, start: int = 0) -> Ooldg:
    """Tree(t) with |t| nodes, ids from start in pre-order."""
    return _term_tree(t, start)[0]


def rule_tree(rule: Rule, start: int = 0) -> Ooldg:
    """T-labelled root with edge 1 to Tree(lhs) and edge 2 to Tree(rhs)."""
    lhs, next_id = _term_tree(rule.lhs, start + 1)
    rhs, _ = _term_tree(rule.rhs, next_id)
    return join(T_LABEL, [lhs, rhs], root_id=start)


def trs_forest(trs: Trs) -> Ooldg:
    trees = []
    next_id = 0
    for rule in trs.rules:
        tree = rule_tree(rule, next_id)
        next_id += len(tree.nodes)
        trees.append(tree)
    return Ooldg({}, frozenset()).union(*trees)


def _anchor(forest: Ooldg, dict_anchor_labels: dict, dict_relabel: dict) -> Ooldg:
    """
    Adds one anchor node per symbol (in the given order) and points every occurrence of the symbol to it with a
    0-labelled edge; occurrences are relabelled per dict_relabel.
    """
    nodes = dict(forest.nodes)
    edges = set(forest.edges)
    next_id = max(nodes, default=-1) + 1
    anchors = {}
    for name, label in dict_anchor_labels.items():
        anchors[name] = next_id
        nodes[next_id] = label
        next_id += 1
    for node, label in forest.nodes.items():
        if label.kind is LabelKind.SYM and label.name in anchors:
            nodes[node] = dict_relabel[label.name]
            edges.add((node, anchors[label.name], ANCHOR_EDGE))
    return Ooldg(nodes, frozenset(edges))


def graph_f(trs: Trs) -> Ooldg:
    """Function symbols anchored by F-labelled nodes; variable labels kept."""
    return _anchor(trs_forest(trs), {name: F_LABEL for name in trs.sig},
                   {name: ANCHOR_EDGE for name in trs.sig})


def graph_v(trs: Trs) -> Ooldg:
    """Variables anchored by C-labelled nodes; function symbol labels kept."""
    return _anchor(trs_forest(trs), {name: C_LABEL for name in trs.vars},
                   {name: ANCHOR_EDGE for name in trs.vars})


def graph_full(trs: Trs) -> Ooldg:
    """Both anchor families; function occurrences become g, variable occurrences z."""
    dict_anchor_labels = {name: F_LABEL for name in trs.sig} | {name: C_LABEL for name in trs.vars}
    dict_relabel = {name: G_LABEL for name in trs.sig} | {name: Z_LABEL for name in trs.vars}
    return _anchor(trs_forest(trs), dict_anchor_labels, dict_relabel)


def anchor_nodes(trs: Trs, kind: str) -> tuple:
    """
    Node ids of the anchors in the gf, gv or full encoding of trs.

    Returns
    -------
    tuple
        (function symbol -> anchor id, variable -> anchor id); the dictionary of a non-anchored set is empty.
    """
    next_id = sum(term_size(rule.lhs) + term_size(rule.rhs) + 1 for rule in trs.rules)
    dict_funcs, dict_vars = {}, {}
    if kind in ("gf", "full"):
        for name in trs.sig:
            dict_funcs[name] = next_id
            next_id += 1
    if kind in ("gv", "full"):
        for name in trs.vars:
            dict_vars[name] = next_id
            next_id += 1
    return dict_funcs, dict_vars


def encode(trs: Trs, kind: str) -> Ooldg:
    """Dispatch for forest, gf, gv and full."""
    dict_encoders = {"forest": trs_forest, "gf": graph_f, "gv": graph_v, "full": graph_full}
    if kind not in dict_encoders:
        raise ValueError(f"unknown encoding {kind!r}; expected one of {', '.join(dict_encoders)}")
    return dict_encoders[kind](trs)


# Strong isomorphism
# ----------------------------------------------------------------------------------------------------------------------

class _Refiner:
    """Colour refinement on the disjoint union of two graphs; union index i < n belongs to the first graph."""

    def __init__(self, a: Ooldg, b: Ooldg):
        self.ids_a = sorted(a.nodes)
        self.ids_b = sorted(b.nodes)
        self.n = len(self.ids_a)
        labels = sorted(set(a.nodes.values()) | set(b.nodes.values())
                        | {label for *_, label in a.edges} | {label for *_, label in b.edges})
        rank = {label: i for i, label in enumerate(labels)}
        index = {("a", node): i for i, node in enumerate(self.ids_a)}
        index.update({("b", node): self.n + i for i, node in enumerate(self.ids_b)})
        self.out = [[] for _ in range(2 * self.n)]
        self.inc = [[] for _ in range(2 * self.n)]
        for side, graph in (("a", a), ("b", b)):
            for src, dst, label in graph.edges:
                self.out[index[(side, src)]].append((rank[label], index[(side, dst)]))
                self.inc[index[(side, dst)]].append((rank[label], index[(side, src)]))
        self.initial = [rank[a.nodes[node]] for node in self.ids_a] + [rank[b.nodes[node]] for node in self.ids_b]

    def refine(self, colours: list) -> list:
        count = len(set(colours))
        while True:
            signatures = [(colours[v],
                           tuple(sorted((label, colours[w]) for label, w in self.out[v])),
                           tuple(sorted((label, colours[u]) for label, u in self.inc[v])))
                          for v in range(2 * self.n)]
            dict_rank = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
            colours = [dict_rank[sig] for sig in signatures]
            if len(dict_rank) == count:
                return colours
            count = len(dict_rank)

    def balanced(self, colours: list) -> bool:
        left = sorted(colours[:self.n])
        right = sorted(colours[self.n:])
        return left == right


def _is_strong_iso(a: Ooldg, b: Ooldg, mapping: dict) -> bool:
    if any(a.nodes[node] != b.nodes[mapping[node]] for node in a.nodes):
        return False
    return {(mapping[src], mapping[dst], label) for src, dst, label in a.edges} == b.edges


def strong_iso(a: Ooldg, b: Ooldg) -> dict | None:
    """
    Node bijection from a to b preserving node labels and labelled edges exactly, or None.

    Colour refinement (initial colour = node label, refined by the multisets of (edge label, neighbour colour) over
    outgoing and incoming edges) followed by individualization-refinement backtracking: the smallest non-singleton
    cell is split by individualizing its smallest node of a against every candidate of b in id order.
    """
    if len(a.nodes) != len(b.nodes) or len(a.edges) != len(b.edges):
        return None
    if sorted(a.nodes.values()) != sorted(b.nodes.values()):
        return None
    refiner = _Refiner(a, b)
    n = refiner.n

    def search(colours: list) -> dict | None:
        colours = refiner.refine(colours)
        if not refiner.balanced(colours):
            return None
        cells = {}
        for v in range(n):
            cells.setdefault(colours[v], []).append(v)
        open_cells = [members for members in cells.values() if len(members) > 1]
        if not open_cells:
            by_colour = {colours[w]: w for w in range(n, 2 * n)}
            mapping = {refiner.ids_a[v]: refiner.ids_b[by_colour[colours[v]] - n] for v in range(n)}
            return mapping if _is_strong_iso(a, b, mapping) else None
        cell = min(open_cells, key=lambda members: (len(members), min(members)))
        v = min(cell)
        fresh = max(colours) + 1
        for w in sorted(w for w in range(n, 2 * n) if colours[w] == colours[v]):
            trial = list(colours)
            trial[v] = trial[w] = fresh
            result = search(trial)
            if result is not None:
                return result
        return None

    mapping = search(list(refiner.initial))
    logger.debug("strong isomorphism on %d nodes: %s", n, "found" if mapping is not None else "none")
    return mapping


# Directed graphs and their TRS encodings
# ----------------------------------------------------------------------------------------------------------------------

def _check_no_isolated(graph: nx.DiGraph) -> None:
    for node in graph.nodes:
        if graph.degree(node) == 0:
            raise IsolatedVertexError(node)


def _vertex_symbol(prefix: str, vertex) -> str:
    try:
        return check_symbol(f"{prefix}_{vertex}")
    except TrsValidationError:
        raise GraphFormatError(f"vertex id {vertex!r} does not yield a valid symbol name") from None


def graph_to_trs_funcs(graph: nx.DiGraph) -> Trs:
    """Vertex v becomes the unary symbol f_v, edge (v, w) the rule f_v(f_w(x)) -> c."""
    _check_no_isolated(graph)
    names = {vertex: _vertex_symbol("f", vertex) for vertex in graph.nodes}
    x = Var("x")
    rules = [Rule(App(names[v], (App(names[w], (x,)),)), App("c")) for v, w in graph.edges]
    sig = Signature(tuple((name, 1) for name in names.values()) + (("c", 0),))
    return Trs(sig, ("x",), tuple(rules))


def graph_to_trs_vars(graph: nx.DiGraph) -> Trs:
    """Vertex v becomes the variable x_v, edge (v, w) the rule f(x_v, x_w) -> c."""
    _check_no_isolated(graph)
    names = {vertex: _vertex_symbol("x", vertex) for vertex in graph.nodes}
    rules = [Rule(App("f", (Var(names[v]), Var(names[w]))), App("c")) for v, w in graph.edges]
    return Trs(Signature((("f", 2), ("c", 0))), tuple(names.values()), tuple(rules))


def digraph_iso_bruteforce(a: nx.DiGraph, b: nx.DiGraph, max_nodes: int = None) -> bool:
    """Exhaustive search for a node bijection preserving the edge relation exactly."""
    max_nodes = settings("guards")["max_digraph_nodes"] if max_nodes is None else max_nodes
    if max(a.number_of_nodes(), b.number_of_nodes()) > max_nodes:
        raise SizeGuardExceeded(f"brute-force graph isomorphism is limited to {max_nodes} nodes")
    if a.number_of_nodes() != b.number_of_nodes() or a.number_of_edges() != b.number_of_edges():
        return False
    nodes_a = list(a.nodes)
    edges_b = set(b.edges)
    for image in permutations(b.nodes):
        mapping = dict(zip(nodes_a, image))
        if all((mapping[u], mapping[v]) in edges_b for u, v in a.edges):
            return True
    return False


# Graph files
# ----------------------------------------------------------------------------------------------------------------------

def _node_key(text) -> int:
    if isinstance(text, str) and text.startswith("n") and text[1:].isdigit():
        return int(text[1:])
    raise GraphFormatError(f"OOLDG node ids have the form n<integer>, got {text!r}")


def parse_graph(text: str, kind: str = None) -> nx.DiGraph | Ooldg:
    """
    Reads graph JSON: node lists of plain ids give an unlabelled nx.DiGraph, node objects with labels an Ooldg.

    Parameters
    ----------
    text: str
    kind: str
        "digraph" or "ooldg" to force the reading of documents without nodes; detected from the nodes otherwise.
    """
    try:
        data = json.loads(text)
        list_nodes = data["nodes"]
        list_edges = data["edges"]
    except (json.JSONDecodeError, KeyError, TypeError) as err:
        raise GraphFormatError(f"not a graph JSON document: {err}") from err

    if kind not in (None, "digraph", "ooldg"):
        raise ValueError(f"unknown graph kind {kind!r}")
    if kind is None:
        kind = "digraph" if all(not isinstance(node, dict) for node in list_nodes) else "ooldg"

    if kind == "digraph":
        graph = nx.DiGraph()
        for node in list_nodes:
            if node in graph:
                raise GraphFormatError(f"vertex {node!r} listed twice")
            graph.add_node(node)
        for edge in list_edges:
            if len(edge) != 2 or edge[0] not in graph or edge[1] not in graph:
                raise GraphFormatError(f"invalid edge {edge!r}")
            if graph.has_edge(*edge):
                raise GraphFormatError(f"edge {edge!r} listed twice")
            graph.add_edge(*edge)
        return graph

    try:
        nodes = {}
        for node in list_nodes:
            key = _node_key(node["id"])
            if key in nodes:
                raise GraphFormatError(f"node {node['id']!r} listed twice")
            nodes[key] = GLabel.from_json(node["label"])
        edges = frozenset((_node_key(edge["src"]), _node_key(edge["dst"]), GLabel.from_json(edge["label"]))
                          for edge in list_edges)
    except (KeyError, TypeError) as err:
        raise GraphFormatError(f"invalid OOLDG JSON: {err}") from err
    return Ooldg(nodes, edges)


def _dot_quote(text) -> str:
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_graph(graph: nx.DiGraph | Ooldg, fmt: str = "json") -> str:
    """
    Graph JSON (parse_graph reads it back exactly) or DOT with the labels printed on nodes and edges.
    """
    if fmt not in ("json", "dot"):
        raise ValueError(f"unknown graph format {fmt!r}; expected json or dot")
    if isinstance(graph, Ooldg):
        if fmt == "json":
            return json.dumps({
                "nodes": [{"id": f"n{node}", "label": graph.nodes[node].to_json()} for node in sorted(graph.nodes)],
                "edges": [{"src": f"n{src}", "dst": f"n{dst}", "label": label.to_json()}
                          for src, dst, label in graph.sorted_edges()],
            }, indent=1)
        lines = ["digraph ooldg {"]
        lines += [f"  n{node} [label={_dot_quote(graph.nodes[node])}];" for node in sorted(graph.nodes)]
        lines += [f"  n{src} -> n{dst} [label={_dot_quote(label)}];" for src, dst, label in graph.sorted_edges()]
        return "\n".join(lines + ["}"]) + "\n"

    if fmt == "json":
        return json.dumps({"nodes": list(graph.nodes), "edges": [list(edge) for edge in graph.edges]}, indent=1)
    lines = ["digraph G {"]
    lines += [f"  {_dot_quote(node)};" for node in graph.nodes]
    lines += [f"  {_dot_quote(u)} -> {_dot_quote(v)};" for u, v in graph.edges]
    return "\n".join(lines + ["}"]) + "\n"


# debugging
if __name__ == "__main__":
    pass
