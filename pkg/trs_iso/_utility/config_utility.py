"""
------------------------------------------------------------------------------------------------------------------------

CONFIG_UTILITY
--------------

Access to the trs_iso.ini configuration-file.
Every section is repaired with the standard parameters below before it is handed out, so a missing or partial
configuration-file still yields a complete set of values.

------------------------------------------------------------------------------------------------------------------------
"""

# imports
# ______________________________________________________________________________________________________________________
import ast
import logging
from functools import lru_cache
from pathlib import Path
import pyomics
# ______________________________________________________________________________________________________________________

logger = logging.getLogger(__name__)

path_cfg = Path(__file__).parent.parent / "config" / "trs_iso.ini"

# standard parameters of every section
dict_repair_sections = {
    "defaults": {
        "seed": "0xC0FFEE",
        "fuel": "10000",
        "samples": "32",
        "sample_depth": "4",
        "max_terms": "100000",
    },
    "guards": {
        "max_funcs": "6",
        "max_vars": "4",
        "max_rules": "4",
        "max_digraph_nodes": "8",
    },
    "generator": {
        "max_depth": "3",
        "max_arity": "2",
        "max_rules": "3",
        "max_funcs": "4",
        "max_vars": "3",
    },
    "corpus": {
        "corpus_loc": "",
        "requires": str(["trs", "graphs"]),
    },
}


def _parse_value(raw: str):
    """
    Integers may be written with a literal prefix (0x..); everything that is no Python literal stays a string.
    """
    raw = raw.strip()
    try:
        return int(raw, 0)
    except ValueError:
        pass
    try:
        return ast.literal_eval(raw)
    except (ValueError, SyntaxError):
        return raw


@lru_cache(maxsize=None)
def _raw_section(section: str) -> tuple:
    if section not in dict_repair_sections:
        raise KeyError(f"Unknown configuration section {section!r}")
    if not path_cfg.exists():
        logger.info("Configuration file 'trs_iso.ini' does not exist; creating file...")
        path_cfg.touch()  # create configuration-file if it does not exist

    # configuration file Object for handling the settings
    cfg_obj = pyomics.GetConfig.get_config(str(path_cfg))
    dict_section = cfg_obj.get_repair_config_section(section, dict_repair_sections[section])
    return tuple(dict(dict_section).items())


def settings(section: str) -> dict:
    """
    Parsed values of one configuration-file section.

    Parameters
    ----------
    section: str
        Name of the target section within the config-file.

    Returns
    -------
    dict
        Section values; integers are converted, lists are evaluated.
    """
    dict_values = {key: _parse_value(value) for key, value in _raw_section(section)}
    # repaired keys missing from an older file
    for key, value in dict_repair_sections[section].items():
        dict_values.setdefault(key, _parse_value(value))
    return dict_values


# debugging
if __name__ == "__main__":
    pass
