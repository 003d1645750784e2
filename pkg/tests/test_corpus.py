import pytest

from trs_iso import FixtureCorpus, Ooldg, Trs, load_graph, load_trs
from trs_iso._utility._classes import NotLoadedError
from trs_iso._utility.config_utility import settings
from trs_iso._utility.corpus_utility import best_match


class TestAvailable:
    def test_groups(self, capsys):
        dict_names = FixtureCorpus.available_fixtures()
        assert set(dict_names) == {"trs", "graphs"}
        assert "ski" in dict_names["trs"] and "five-nodes" in dict_names["graphs"]
        assert sum(len(names) for names in dict_names.values()) >= 50
        assert "fixtures total" in capsys.readouterr().out

    def test_single_group(self, capsys):
        assert list(FixtureCorpus.available_fixtures("graphs")) == ["graphs"]
        out = capsys.readouterr().out
        assert "Available graphs fixtures" in out and "> rule-tree" in out
        assert "> ski" not in out

    def test_unknown_group(self):
        with pytest.raises(ValueError):
            FixtureCorpus.available_fixtures("images")


class TestFetch:
    def test_exact_name(self):
        corpus = FixtureCorpus.fetch("trs-2")
        assert corpus.fixture_name == "trs-2"
        assert corpus.get_as_path().name == "trs-2.trs"
        assert isinstance(corpus.get_as_trs(), Trs)

    @pytest.mark.parametrize("query, group, expected", [("ski-ren", "trs", "ski-renamed"),
                                                        ("five-nodes-mut", "graphs", "five-nodes-mutated"),
                                                        ("transitive", "graphs", "transitive-triangle")])
    def test_fuzzy_name(self, query, group, expected):
        assert FixtureCorpus.fetch(query, group=group).fixture_name == expected

    def test_ambiguous_query(self):
        with pytest.raises(ValueError, match="ambigious"):
            FixtureCorpus.fetch("separation-i")

    def test_unknown_group(self):
        with pytest.raises(ValueError):
            FixtureCorpus.fetch("ski", group="images")

    def test_wrong_reader(self):
        with pytest.raises(ValueError):
            FixtureCorpus.fetch("rule-tree", group="graphs").get_as_trs()
        with pytest.raises(ValueError):
            FixtureCorpus.fetch("ski").get_as_graph()

    def test_permissive_mode(self):
        corpus = FixtureCorpus.fetch("permissive")
        assert corpus.get_as_trs("permissive").permissive
        with pytest.raises(ValueError):
            corpus.get_as_trs("lenient")

    def test_not_loaded(self):
        with pytest.raises(NotLoadedError):
            FixtureCorpus().get_as_path()

    def test_help(self, capsys):
        FixtureCorpus.fetch("ski").help()
        out = capsys.readouterr().out
        assert "FixtureCorpus().fetch() -> classmethod" in out
        assert "FixtureCorpus().get_as_trs() -> method" in out


class TestHelpers:
    def test_load_by_exact_name(self):
        assert load_trs("ski") == FixtureCorpus.fetch("ski").get_as_trs()
        assert isinstance(load_graph("rule-tree"), Ooldg)
        with pytest.raises(KeyError):
            load_trs("ski-ren")

    def test_expectations(self, expectations):
        assert list(expectations.columns) == ["source", "left", "right", "relation", "expected"]
        assert len(expectations) == 51
        assert set(expectations["expected"]) == {"iso", "not-iso"}
        names = set(FixtureCorpus.available_fixtures()["trs"])
        assert set(expectations["left"]) <= names and set(expectations["right"]) <= names

    def test_best_match(self):
        assert best_match("trs-1", ["trs-1", "trs-10", "trs-11"]) == "trs-1"
        assert best_match("trs-1", ["trs-1", "trs-10"], mult_match=True) == ["trs-1"]
        with pytest.raises(ValueError):
            best_match("ski", [])

    def test_settings(self):
        assert settings("defaults")["seed"] == 0xC0FFEE
        assert settings("corpus")["requires"] == ["trs", "graphs"]
