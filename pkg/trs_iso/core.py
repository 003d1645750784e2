"""
------------------------------------------------------------------------------------------------------------------------

CORE
----

Terms, signatures, rewriting rules and term rewriting systems (TRS), the .trs text format and term isomorphisms
with application, composition and inversion.
Rule equivalence (V-, F- or full renaming of a single rule) and the normal forms built on it live here as well.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import logging
import re
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

from ._utility._classes import TrsSyntaxError, TrsValidationError, IsoDomainError
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)

SYMBOL_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
RESERVED_PREFIX = "_pad"


def check_symbol(name: str) -> str:
    if not isinstance(name, str) or SYMBOL_PATTERN.fullmatch(name) is None:
        raise TrsValidationError(f"{name!r} is not a valid symbol name")
    return name


class Kind(Enum):
    """Which symbol set a renaming may touch: variables, function symbols or both."""
    V = "v"
    F = "f"
    FULL = "full"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, Kind):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown kind {value!r}; expected one of v, f, full") from None


# Terms
# ----------------------------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class App:
    head: str
    args: tuple = ()

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))

    def __str__(self) -> str:
        if not self.args:
            return self.head
        return f"{self.head}({','.join(str(arg) for arg in self.args)})"


Term = Var | App
Position = tuple


def iter_preorder(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, App):
            stack.extend(reversed(node.args))


def term_size(t: Term) -> int:
    """|t|, the number of symbol occurrences."""
    return sum(1 for _ in iter_preorder(t))


def term_vars(t: Term) -> list:
    """Variable names in order of first occurrence."""
    seen = {}
    for node in iter_preorder(t):
        if isinstance(node, Var):
            seen.setdefault(node.name, None)
    return list(seen)


def term_funcs(t: Term) -> list:
    """(name, arity) of the function symbols in order of first occurrence."""
    seen = {}
    for node in iter_preorder(t):
        if isinstance(node, App):
            seen.setdefault(node.head, len(node.args))
    return list(seen.items())


def positions(t: Term) -> list:
    """All positions of t in pre-order; the root is the empty tuple, argument indices start at 1."""
    result = []
    stack = [((), t)]
    while stack:
        pos, node = stack.pop()
        result.append(pos)
        if isinstance(node, App):
            for i in range(len(node.args), 0, -1):
                stack.append((pos + (i,), node.args[i - 1]))
    return result


def subterm_at(t: Term, pos: Position) -> Term:
    for index in pos:
        if not isinstance(t, App) or not 1 <= index <= len(t.args):
            raise IndexError(f"invalid position {pos}")
        t = t.args[index - 1]
    return t


def replace_at(t: Term, pos: Position, replacement: Term) -> Term:
    if not pos:
        return replacement
    if not isinstance(t, App) or not 1 <= pos[0] <= len(t.args):
        raise IndexError(f"invalid position {pos}")
    index = pos[0] - 1
    args = list(t.args)
    args[index] = replace_at(args[index], pos[1:], replacement)
    return App(t.head, tuple(args))


def term_sort_key(t: Term) -> tuple:
    """
    Canonical total order on terms: by length, then pre-order symbol by symbol, function symbols before variables,
    names lexicographic.
    """
    tokens = tuple((0, node.head, len(node.args)) if isinstance(node, App) else (1, node.name, 0)
                   for node in iter_preorder(t))
    return len(tokens), tokens


# Rules, signatures, TRS
# ----------------------------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Rule:
    lhs: Term
    rhs: Term

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"

    @property
    def size(self) -> int:
        return max(term_size(self.lhs), term_size(self.rhs))


def rule_sort_key(rule: Rule) -> tuple:
    return term_sort_key(rule.lhs), term_sort_key(rule.rhs)


@dataclass(frozen=True)
class Signature:
    """
    Function symbols with their arities, in declaration order.

    Attributes
    ----------
    funcs: tuple
        Pairs (name, arity); a mapping is accepted and converted.
    """

    funcs: tuple = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pairs = tuple(self.funcs.items()) if isinstance(self.funcs, Mapping) else tuple(tuple(p) for p in self.funcs)
        index = {}
        for name, arity in pairs:
            check_symbol(name)
            if not isinstance(arity, int) or arity < 0:
                raise TrsValidationError(f"arity of {name} must be a non-negative integer, got {arity!r}")
            if name in index:
                raise TrsValidationError(f"function symbol {name} declared twice")
            index[name] = arity
        object.__setattr__(self, "funcs", pairs)
        object.__setattr__(self, "_index", index)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self._index)

    def __len__(self) -> int:
        return len(self.funcs)

    def arity(self, name: str) -> int:
        return self._index[name]

    @property
    def names(self) -> tuple:
        return tuple(self._index)

    def as_dict(self) -> dict:
        return dict(self._index)

    def profile(self) -> Counter:
        """Number of symbols per arity."""
        return Counter(self._index.values())

    def by_arity(self) -> dict:
        dict_groups = defaultdict(list)
        for name, arity in self.funcs:
            dict_groups[arity].append(name)
        return dict(dict_groups)

    def same_symbols(self, other: "Signature") -> bool:
        return self._index == other._index


@dataclass(frozen=True)
class Trs:
    """
    A term rewriting system (F, V, R).

    Attributes
    ----------
    sig: Signature
    vars: tuple
        Variable names in declaration order.
    rules: tuple
        Rewriting rules in input order.
    permissive: bool
        Lifts the non-variable lhs and Var(rhs) in Var(lhs) restrictions.
    minimal: bool
        Derived; True iff the symbol sets are exactly the symbols occurring in the rules.
    """

    sig: Signature
    vars: tuple
    rules: tuple
    permissive: bool = False
    minimal: bool = field(init=False)

    def __post_init__(self):
        if not isinstance(self.sig, Signature):
            object.__setattr__(self, "sig", Signature(self.sig))
        object.__setattr__(self, "vars", tuple(self.vars))
        object.__setattr__(self, "rules", tuple(self.rules))

        seen_vars = set()
        for name in self.vars:
            check_symbol(name)
            if name in seen_vars:
                raise TrsValidationError(f"variable {name} declared twice")
            if name in self.sig:
                raise TrsValidationError(f"{name} is declared both as variable and as function symbol")
            seen_vars.add(name)

        seen_rules = {}
        for i, rule in enumerate(self.rules):
            for side in (rule.lhs, rule.rhs):
                for node in iter_preorder(side):
                    if isinstance(node, Var):
                        if node.name not in seen_vars:
                            raise TrsValidationError(f"rule {i}: undeclared variable {node.name}")
                    elif node.head not in self.sig:
                        raise TrsValidationError(f"rule {i}: undeclared function symbol {node.head}")
                    elif self.sig.arity(node.head) != len(node.args):
                        raise TrsValidationError(
                            f"rule {i}: arity conflict, {node.head} declared with arity "
                            f"{self.sig.arity(node.head)} but applied to {len(node.args)} arguments")
            if not self.permissive:
                if isinstance(rule.lhs, Var):
                    raise TrsValidationError(f"rule {i}: variable lhs in {rule}")
                unbound = set(term_vars(rule.rhs)) - set(term_vars(rule.lhs))
                if unbound:
                    raise TrsValidationError(f"rule {i}: unbound rhs variable(s) {sorted(unbound)} in {rule}")
            if rule in seen_rules:
                raise TrsValidationError(f"rule {i} duplicates rule {seen_rules[rule]}: {rule}")
            seen_rules[rule] = i

        object.__setattr__(self, "minimal", set(self.used_vars()) == seen_vars
                           and set(name for name, _ in self.used_funcs()) == set(self.sig))

    # derived information
    # -------------------
    def used_vars(self) -> list:
        seen = {}
        for rule in self.rules:
            for name in term_vars(rule.lhs) + term_vars(rule.rhs):
                seen.setdefault(name, None)
        return list(seen)

    def used_funcs(self) -> list:
        seen = {}
        for rule in self.rules:
            for name, arity in term_funcs(rule.lhs) + term_funcs(rule.rhs):
                seen.setdefault(name, arity)
        return list(seen.items())

    @property
    def size(self) -> int:
        """sz_R, the maximum length of a rule side (0 for an empty rule list)."""
        return max((rule.size for rule in self.rules), default=0)

    # constructors
    # ------------
    @classmethod
    def from_rules(cls, rules: Iterable[Rule], extra_funcs: Iterable = (), extra_vars: Iterable = (),
                   permissive: bool = False) -> "Trs":
        """
        Builds a TRS whose symbol sets are inferred from the rules (first occurrence order), followed by the extra
        symbols.
        """
        rules = tuple(rules)
        funcs = {}
        variables = {}
        for rule in rules:
            for side in (rule.lhs, rule.rhs):
                for name, arity in term_funcs(side):
                    if funcs.setdefault(name, arity) != arity:
                        raise TrsValidationError(f"arity conflict for {name}: {funcs[name]} and {arity}")
                for name in term_vars(side):
                    variables.setdefault(name, None)
        for name, arity in extra_funcs:
            funcs.setdefault(name, arity)
        for name in extra_vars:
            variables.setdefault(name, None)
        return cls(Signature(tuple(funcs.items())), tuple(variables), rules, permissive)

    def with_rules(self, rules: Iterable[Rule]) -> "Trs":
        return Trs(self.sig, self.vars, tuple(rules), self.permissive)

    def minimized(self) -> "Trs":
        """Restricts both symbol sets to the symbols occurring in the rules; declaration order is kept."""
        used_funcs = dict(self.used_funcs())
        used_vars = set(self.used_vars())
        sig = Signature(tuple((name, arity) for name, arity in self.sig.funcs if name in used_funcs))
        return Trs(sig, tuple(name for name in self.vars if name in used_vars), self.rules, self.permissive)

    def extended(self, funcs: Iterable = (), variables: Iterable = ()) -> "Trs":
        sig = Signature(self.sig.funcs + tuple(funcs))
        return Trs(sig, self.vars + tuple(variables), self.rules, self.permissive)

    def rule_set(self) -> frozenset:
        return frozenset(self.rules)

    def sorted_rules(self) -> list:
        return sorted(self.rules, key=rule_sort_key)

    def __str__(self) -> str:
        return print_trs(self)


# .trs text format
# ----------------------------------------------------------------------------------------------------------------------

_TOKEN_PATTERN = re.compile(r"""
      (?P<space>\s+)
    | (?P<comment>;[^\n]*)
    | (?P<arrow>->)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<comma>,)
    | (?P<number>\d+)
    | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        match = _TOKEN_PATTERN.match(text, pos)
        if match is None:
            raise TrsSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        if kind not in ("space", "comment"):
            tokens.append(_Token(kind, match.group(), line, pos - line_start + 1))
        chunk = match.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rfind("\n") + 1
        pos = match.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class _RawTerm:
    name: str
    args: list | None
    line: int
    column: int


class _Reader:
    """Recursive descent over the token list; terms are classified into variables and applications afterwards."""

    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: str, what: str = None) -> _Token:
        token = self.peek()
        if token.kind != kind:
            found = "end of input" if token.kind == "eof" else repr(token.text)
            raise TrsSyntaxError(f"expected {what or kind}, found {found}", token.line, token.column)
        self.pos += 1
        return token

    def blocks(self) -> dict:
        dict_blocks = {}
        while self.peek().kind != "eof":
            self.take("lparen", "'('")
            keyword = self.take("ident", "block keyword")
            if keyword.text not in ("VAR", "SIG", "RULES"):
                raise TrsSyntaxError(f"unknown block {keyword.text}", keyword.line, keyword.column)
            if keyword.text in dict_blocks:
                raise TrsSyntaxError(f"second {keyword.text} block", keyword.line, keyword.column)
            if keyword.text == "VAR":
                content = []
                while self.peek().kind == "ident":
                    content.append(self.take("ident"))
            elif keyword.text == "SIG":
                content = []
                while self.peek().kind == "lparen":
                    self.take("lparen")
                    name = self.take("ident", "function symbol")
                    arity = self.take("number", "arity")
                    self.take("rparen", "')'")
                    content.append((name, int(arity.text)))
            else:
                content = []
                while self.peek().kind == "ident":
                    lhs = self.term()
                    self.take("arrow", "'->'")
                    rhs = self.term()
                    content.append((lhs, rhs))
            self.take("rparen", "')'")
            dict_blocks[keyword.text] = (keyword, content)
        if "RULES" not in dict_blocks:
            token = self.peek()
            raise TrsSyntaxError("missing RULES block", token.line, token.column)
        return dict_blocks

    def term(self) -> _RawTerm:
        head = self.take("ident", "term")
        if self.peek().kind != "lparen":
            return _RawTerm(head.text, None, head.line, head.column)
        self.take("lparen")
        args = []
        if self.peek().kind != "rparen":
            args.append(self.term())
            while self.peek().kind == "comma":
                self.take("comma")
                args.append(self.term())
        self.take("rparen", "')' or ','")
        return _RawTerm(head.text, args, head.line, head.column)


def _check_reserved(name: str, line: int, column: int) -> None:
    if name.startswith(RESERVED_PREFIX):
        raise TrsValidationError(f"line {line}, column {column}: prefix {RESERVED_PREFIX!r} is reserved ({name})")


def parse_trs(text: str, permissive: bool = False) -> Trs:
    """
    Reads a TRS from the .trs text format.

    Parameters
    ----------
    text: str
        Optional (VAR ...) and (SIG (f n) ...) blocks and a mandatory (RULES l -> r ...) block.
    permissive: bool
        Accept variable left-hand sides and unbound right-hand side variables.

    Returns
    -------
    Trs
        Arities are inferred from the first use unless the SIG block declares them.
    """

    dict_blocks = _Reader(text).blocks()

    variables = {}
    for token in dict_blocks.get("VAR", (None, []))[1]:
        _check_reserved(token.text, token.line, token.column)
        if token.text in variables:
            raise TrsValidationError(f"line {token.line}, column {token.column}: variable {token.text} declared twice")
        variables[token.text] = None

    arities = {}
    for token, arity in dict_blocks.get("SIG", (None, []))[1]:
        _check_reserved(token.text, token.line, token.column)
        if token.text in variables:
            raise TrsValidationError(f"line {token.line}, column {token.column}: "
                                     f"{token.text} is declared both as variable and as function symbol")
        if token.text in arities:
            raise TrsValidationError(f"line {token.line}, column {token.column}: {token.text} declared twice in SIG")
        arities[token.text] = arity

    def build(raw: _RawTerm) -> Term:
        _check_reserved(raw.name, raw.line, raw.column)
        if raw.name in variables:
            if raw.args is not None:
                raise TrsValidationError(
                    f"line {raw.line}, column {raw.column}: variable {raw.name} applied to arguments")
            return Var(raw.name)
        count = len(raw.args or ())
        if arities.setdefault(raw.name, count) != count:
            raise TrsValidationError(f"line {raw.line}, column {raw.column}: arity conflict, {raw.name} has arity "
                                     f"{arities[raw.name]} but is applied to {count} arguments")
        return App(raw.name, tuple(build(arg) for arg in raw.args or ()))

    rules = []
    seen = {}
    for raw_lhs, raw_rhs in dict_blocks["RULES"][1]:
        rule = Rule(build(raw_lhs), build(raw_rhs))
        where = f"line {raw_lhs.line}, column {raw_lhs.column}"
        if not permissive:
            if isinstance(rule.lhs, Var):
                raise TrsValidationError(f"{where}: variable lhs in {rule}")
            unbound = [name for name in term_vars(rule.rhs) if name not in term_vars(rule.lhs)]
            if unbound:
                raise TrsValidationError(f"{where}: unbound rhs variable(s) {', '.join(unbound)} in {rule}")
        if rule in seen:
            raise TrsValidationError(f"{where}: duplicate rule {rule}")
        seen[rule] = len(rules)
        rules.append(rule)

    trs = Trs(Signature(tuple(arities.items())), tuple(variables), tuple(rules), permissive)
    logger.debug("parsed TRS with %d functions, %d variables, %d rules", len(trs.sig), len(trs.vars), len(rules))
    return trs


def parse_term(text: str, trs: Trs) -> Term:
    """Reads a single term over the symbols of trs; names in trs.vars are variables."""
    reader = _Reader(text)
    raw = reader.term()
    reader.take("eof", "end of input")

    def build(node: _RawTerm) -> Term:
        if node.name in trs.vars:
            if node.args is not None:
                raise TrsValidationError(f"column {node.column}: variable {node.name} applied to arguments")
            return Var(node.name)
        if node.name not in trs.sig:
            raise TrsValidationError(f"column {node.column}: undeclared function symbol {node.name}")
        if trs.sig.arity(node.name) != len(node.args or ()):
            raise TrsValidationError(f"column {node.column}: {node.name} has arity {trs.sig.arity(node.name)}")
        return App(node.name, tuple(build(arg) for arg in node.args or ()))

    return build(raw)


def print_trs(trs: Trs) -> str:
    """
    Writes a TRS in the .trs text format. The SIG block is only written when the signature differs from the one
    inferred from the rules, so parse_trs(print_trs(R)) == R.
    """
    list_blocks = []
    if trs.vars:
        list_blocks.append(f"(VAR {' '.join(trs.vars)})")
    if Signature(tuple(trs.used_funcs())) != trs.sig:
        list_blocks.append("(SIG " + " ".join(f"({name} {arity})" for name, arity in trs.sig.funcs) + ")")
    if trs.rules:
        list_blocks.append("(RULES\n" + "".join(f"  {rule}\n" for rule in trs.rules) + ")")
    else:
        list_blocks.append("(RULES )")
    return "\n".join(list_blocks) + "\n"


# Term isomorphisms
# ----------------------------------------------------------------------------------------------------------------------

@dataclass(frozen=True)
class TermIso:
    """
    A pair of bijections on function symbols and on variables.

    Attributes
    ----------
    fmap: dict
    vmap: dict
    """

    fmap: dict
    vmap: dict

    def __post_init__(self):
        object.__setattr__(self, "fmap", dict(self.fmap))
        object.__setattr__(self, "vmap", dict(self.vmap))
        for name, mapping in (("function", self.fmap), ("variable", self.vmap)):
            if len(set(mapping.values())) != len(mapping):
                raise IsoDomainError(f"{name} map is not injective: {mapping}")

    def __hash__(self) -> int:
        return hash((frozenset(self.fmap.items()), frozenset(self.vmap.items())))

    def __call__(self, t: Term) -> Term:
        return apply_term_iso(self, t)

    def is_f_invariant(self) -> bool:
        return all(k == v for k, v in self.fmap.items())

    def is_v_invariant(self) -> bool:
        return all(k == v for k, v in self.vmap.items())

    def apply_rule(self, rule: Rule) -> Rule:
        return Rule(apply_term_iso(self, rule.lhs), apply_term_iso(self, rule.rhs))

    def to_dict(self) -> dict:
        return {"fmap": dict(self.fmap), "vmap": dict(self.vmap)}


def identity_iso(trs: Trs) -> TermIso:
    return TermIso({name: name for name in trs.sig}, {name: name for name in trs.vars})


def apply_term_iso(iso: TermIso, t: Term) -> Term:
    if isinstance(t, Var):
        try:
            return Var(iso.vmap[t.name])
        except KeyError:
            raise IsoDomainError(f"variable {t.name} outside the domain of the isomorphism") from None
    try:
        head = iso.fmap[t.head]
    except KeyError:
        raise IsoDomainError(f"function symbol {t.head} outside the domain of the isomorphism") from None
    return App(head, tuple(apply_term_iso(iso, arg) for arg in t.args))


def compose_iso(outer: TermIso, inner: TermIso) -> TermIso:
    """outer after inner; the codomain of inner has to be the domain of outer."""
    if set(inner.fmap.values()) != set(outer.fmap) or set(inner.vmap.values()) != set(outer.vmap):
        raise IsoDomainError("cannot compose: codomain of the inner isomorphism differs from the outer domain")
    return TermIso({k: outer.fmap[v] for k, v in inner.fmap.items()},
                   {k: outer.vmap[v] for k, v in inner.vmap.items()})


def invert_iso(iso: TermIso) -> TermIso:
    return TermIso({v: k for k, v in iso.fmap.items()}, {v: k for k, v in iso.vmap.items()})


def validate_iso(iso: TermIso, source: Trs, target: Trs) -> None:
    """
    Raises IsoDomainError unless iso is a total, arity-respecting bijection between the symbol sets of source and
    target.
    """
    if set(iso.fmap) != set(source.sig) or set(iso.fmap.values()) != set(target.sig):
        raise IsoDomainError("function map is not a bijection between the declared signatures")
    if set(iso.vmap) != set(source.vars) or set(iso.vmap.values()) != set(target.vars):
        raise IsoDomainError("variable map is not a bijection between the declared variable sets")
    for name, image in iso.fmap.items():
        if source.sig.arity(name) != target.sig.arity(image):
            raise IsoDomainError(f"{name}/{source.sig.arity(name)} mapped to {image}/{target.sig.arity(image)}")


def is_valid_iso(iso: TermIso, source: Trs, target: Trs) -> bool:
    try:
        validate_iso(iso, source, target)
    except IsoDomainError:
        return False
    return True


# Rule equivalence and normal forms
# ----------------------------------------------------------------------------------------------------------------------

def _extend_bijection(partial: dict, domain: Iterable, key=lambda name: 0) -> dict | None:
    """
    Completes an injective partial map on `domain` to a bijection of `domain`; unmapped elements are paired with the
    unused images in declaration order, separately for every value of `key` (the arity for function symbols).
    """
    domain = list(domain)
    used_images = set(partial.values())
    free_images = defaultdict(list)
    for name in domain:
        if name not in used_images:
            free_images[key(name)].append(name)
    result = dict(partial)
    for name in domain:
        if name not in result:
            if not free_images[key(name)]:
                return None
            result[name] = free_images[key(name)].pop(0)
    return result


def rule_equivalent(a: Rule, b: Rule, kind: Kind, sig: Signature, variables: Iterable) -> TermIso | None:
    """
    Decides whether a term isomorphism on (sig, variables) maps rule a exactly onto rule b.

    Parameters
    ----------
    a, b: Rule
    kind: Kind
        V: the isomorphism is F-invariant; F: it is V-invariant; FULL: no restriction.
    sig: Signature
    variables: Iterable
        Variable names of the governing TRS.

    Returns
    -------
    TermIso, None
        The witness, or None if the rules are not kind-equivalent.
    """

    kind = Kind.parse(kind)
    variables = list(variables)
    fmap, vmap = {}, {}
    fimage, vimage = set(), set()

    # the correspondence is forced by position, so a single simultaneous walk decides
    stack = [(a.rhs, b.rhs), (a.lhs, b.lhs)]
    while stack:
        s, t = stack.pop()
        if isinstance(s, Var) != isinstance(t, Var):
            return None
        if isinstance(s, Var):
            if kind is Kind.F:
                if s.name != t.name:
                    return None
            elif s.name in vmap:
                if vmap[s.name] != t.name:
                    return None
            elif t.name in vimage:
                return None
            else:
                vmap[s.name] = t.name
                vimage.add(t.name)
            continue
        if len(s.args) != len(t.args):
            return None
        if kind is Kind.V:
            if s.head != t.head:
                return None
        elif s.head in fmap:
            if fmap[s.head] != t.head:
                return None
        elif t.head in fimage:
            return None
        else:
            fmap[s.head] = t.head
            fimage.add(t.head)
        stack.extend(reversed(list(zip(s.args, t.args))))

    full_fmap = ({name: name for name in sig} if kind is Kind.V
                 else _extend_bijection(fmap, sig, key=sig.arity))
    full_vmap = ({name: name for name in variables} if kind is Kind.F
                 else _extend_bijection(vmap, variables))
    if full_fmap is None or full_vmap is None:
        return None
    return TermIso(full_fmap, full_vmap)


def _shape_key(t: Term, kind: Kind) -> tuple:
    """Pre-order skeleton that equivalent terms share; kind-renamable symbols are blanked."""
    key = []
    for node in iter_preorder(t):
        if isinstance(node, App):
            key.append(("a", len(node.args), node.head if kind is Kind.V else None))
        else:
            key.append(("v", node.name if kind is Kind.F else None))
    return tuple(key)


def find_equivalent_pair(trs: Trs, kind: Kind) -> tuple | None:
    """
    First pair (i, j), i < j, of kind-equivalent rules together with its witness, or None if trs is in kind-normal
    form. Rules are bucketed by their skeleton before the pairwise check.
    """
    kind = Kind.parse(kind)
    dict_buckets = defaultdict(list)
    for i, rule in enumerate(trs.rules):
        dict_buckets[(_shape_key(rule.lhs, kind), _shape_key(rule.rhs, kind))].append(i)
    for list_indices in dict_buckets.values():
        for pos, i in enumerate(list_indices):
            for j in list_indices[pos + 1:]:
                witness = rule_equivalent(trs.rules[i], trs.rules[j], kind, trs.sig, trs.vars)
                if witness is not None:
                    return i, j, witness
    return None


def is_normal_form(trs: Trs, kind: Kind) -> bool:
    return find_equivalent_pair(trs, kind) is None


# debugging
if __name__ == "__main__":
    pass
