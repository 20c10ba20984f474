from importlib import resources

import pytest

from neogram import Lexicon, RebusTable, default_rules


@pytest.fixture(scope="session")
def french_lexicon() -> Lexicon:
    text = resources.files("neogram.data").joinpath("french_words.tsv").read_text("utf-8")
    return Lexicon.parse(text)


@pytest.fixture(scope="session")
def rules():
    return default_rules()


@pytest.fixture(scope="session")
def rebus_table() -> RebusTable:
    text = resources.files("neogram.data").joinpath("rebus_table.tsv").read_text("utf-8")
    return RebusTable.parse(text)
