import logging
import pytest
from liftmod.util import resolvePath, liftmodData, logError, parseRange


def test_parse_range():
    assert parseRange("2..12") == range(2, 13)
    assert parseRange("7") == range(7, 8)
    for bad in ("12..2", "a..b", ""):
        with pytest.raises(ValueError):
            parseRange(bad)


def test_data_files():
    assert resolvePath("data").endswith("data")
    a, b = liftmodData("chain-bc-c2b.txt", "chain-c2b-c3b.txt")
    assert "braid-bc" in a and "braid-bc" in b


def test_log_error(caplog):
    with caplog.at_level(logging.ERROR, logger="liftmod"):
        try: 1 / 0
        except ZeroDivisionError: logError()
    assert "ZeroDivisionError" in caplog.text
