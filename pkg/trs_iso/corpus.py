"""
------------------------------------------------------------------------------------------------------------------------

CORPUS
------

Handling of the fixture corpus: example TRSs and directed graphs together with their expected verdicts.
Configuration file [trs_iso.ini] section 'corpus' handles the location of the fixtures; an empty corpus_loc selects
the corpus bundled with the package.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import logging
from pathlib import Path

import networkx as nx
import pandas as pd

from .core import Trs, parse_trs
from .graphs import Ooldg, parse_graph
from ._utility._classes import Foundation
from ._utility.corpus_utility import _get_corpus_available, best_match, corpus_root
from ._utility.print_utility import print_groups, print_list
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)


class FixtureCorpus(Foundation):
    """
    Access to a single fixture of the corpus.

    Attributes
    ----------
    fixture_name: str
        Name of the selected fixture (file stem).
    selected_group: str
        Group the fixture belongs to ('trs' or 'graphs').
    fixture_path: Path
    """

    # full dictionary with all available fixtures
    _dict_available_fixtures = _get_corpus_available("corpus")

    def __init__(self,
                 fixture_name: str = None,
                 selected_group: str = None,
                 fixture_path: Path = None):
        super().__init__()
        self.fixture_name = fixture_name
        self.selected_group = selected_group
        self.fixture_path = fixture_path
        self.class_obj = FixtureCorpus
        self.error_text = """
        ####################################################
        Class has not been initialized!
        Use FixtureCorpus.fetch(query: str, group: str) first.
        ####################################################
        """

    # General check methods before initialization
    # -------------------------------------------
    @staticmethod
    def available_fixtures(group: str = None) -> dict:
        """
        Prints the fixture names of every group as overview.

        Parameters
        ----------
        group: str
            Restricts the overview to 'trs' or 'graphs'.

        Returns
        -------
        dict
            Group name to the sorted list of fixture names.
        """
        dict_names = {key: list(subdict) for key, subdict in FixtureCorpus._dict_available_fixtures.items()}
        if group is None:
            print_groups(dict_names, "Available Fixtures")
            return dict_names
        if group not in dict_names:
            raise ValueError(f"Unknown fixture group {group!r}; available: {list(dict_names)}")
        print_list(dict_names[group], f"Available {group} fixtures")
        return {group: dict_names[group]}

    @staticmethod
    def expectations() -> pd.DataFrame:
        """
        Verdict table of the fixture pairs.

        Returns
        -------
        pd.DataFrame
            Columns source, left, right, relation and expected ('iso' or 'not-iso').
        """
        path_table = corpus_root() / "expectations.csv"
        if not path_table.exists():
            raise ValueError(f"Path {path_table} does not exist!")
        df = pd.read_csv(path_table, dtype=str, comment="#")
        return df[["source", "left", "right", "relation", "expected"]]

    # Initialization of the corpus
    ####################################################################################################################
    @classmethod
    def fetch(cls, query: str, group: str = "trs"):
        """
        The @classmethod; initializes the class with the fixture best matching the query.
        It is recommended to first check FixtureCorpus.available_fixtures() before initializing the class.

        Parameters
        ----------
        query: str
            Fixture name or a part of it; an exact name always wins.
        group: str
            'trs' or 'graphs'.

        Returns
        -------
        FixtureCorpus
            Post-initialization methods are used to access the fixture:
            get_as_path(), get_as_text(), get_as_trs(), get_as_graph()
        """

        if group not in FixtureCorpus._dict_available_fixtures:
            raise ValueError(f"Unknown fixture group {group!r}; available: "
                             f"{list(FixtureCorpus._dict_available_fixtures)}")
        dict_group = FixtureCorpus._dict_available_fixtures[group]
        fixture_name = best_match(query, list(dict_group.keys()))
        logger.debug("fixture query %r matched %r", query, fixture_name)
        return cls(fixture_name=fixture_name, selected_group=group, fixture_path=dict_group[fixture_name])

    # post-initialization
    # -------------------
    def get_as_path(self) -> Path:
        Foundation._check_loaded(self)
        return self.fixture_path

    def get_as_text(self) -> str:
        Foundation._check_loaded(self)
        return self.fixture_path.read_text()

    def get_as_trs(self, mode: str = "strict") -> Trs:
        """
        Parameters
        ----------
        mode: str
            'strict' or 'permissive'.
        """
        Foundation._check_loaded(self)
        if mode not in ("strict", "permissive"):
            raise ValueError("Attribute mode must be 'strict' or 'permissive'")
        if self.selected_group != "trs":
            raise ValueError(f"{self.fixture_name} is a {self.selected_group} fixture, not a TRS")
        return parse_trs(self.get_as_text(), permissive=mode == "permissive")

    def get_as_graph(self) -> nx.DiGraph | Ooldg:
        Foundation._check_loaded(self)
        if self.selected_group != "graphs":
            raise ValueError(f"{self.fixture_name} is a {self.selected_group} fixture, not a graph")
        return parse_graph(self.get_as_text())
    ####################################################################################################################


def _exact(name: str, group: str) -> FixtureCorpus:
    dict_group = FixtureCorpus._dict_available_fixtures[group]
    if name not in dict_group:
        raise KeyError(f"no {group} fixture named {name!r}")
    return FixtureCorpus(fixture_name=name, selected_group=group, fixture_path=dict_group[name])


def load_trs(name: str, permissive: bool = False) -> Trs:
    """Parsed TRS fixture by exact name."""
    return _exact(name, "trs").get_as_trs("permissive" if permissive else "strict")


def load_graph(name: str) -> nx.DiGraph | Ooldg:
    """Parsed graph fixture by exact name."""
    return _exact(name, "graphs").get_as_graph()


# debugging
if __name__ == "__main__":
    pass
