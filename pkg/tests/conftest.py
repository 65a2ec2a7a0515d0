import pytest

from chartab import parse_corpus, verify_corpus
from chartab.cli import default_corpus_text


@pytest.fixture(scope="session")
def corpus_entries() -> list[str]:
    entries, warnings = parse_corpus(default_corpus_text())
    assert not warnings
    return entries


@pytest.fixture(scope="session")
def corpus_summary(corpus_entries):
    return verify_corpus(corpus_entries)
