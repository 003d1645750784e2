from pathlib import Path

from .core import *
from .rewriting import *
from .templates import *
from .graphs import *
from .deciders import *
from .corpus import FixtureCorpus, load_graph, load_trs
from ._utility._classes import *

# callable information about trs_iso
########################################################################################################################
import importlib.metadata


def __get_txt_path(txt_name):
    return Path(__file__).parent.resolve() / "static" / txt_name


def __print_txt_line_by_line(path: str):
    """
    Proper Display of information callables in e.g. Jupyter Notebooks

    Paramters
    ---------
    path: str
        Absolute string path of .txt file.

    Returns
    -------
        Prints line by line of .txt file into the terminal.
    """
    with open(path, "r") as f:  # r for reading
        for lines in f:
            print(lines.replace("\n", ""))


try:
    __version__ = f"trs_iso {importlib.metadata.version('trs_iso')}"
except importlib.metadata.PackageNotFoundError:
    __version__ = "trs_iso (not installed)"


def quickstart():
    __print_txt_line_by_line(__get_txt_path("quickstart.txt"))
