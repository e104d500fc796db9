import pytest

from krcrystal.config import Settings
from krcrystal.errors import (
    BudgetExceeded,
    InvalidElement,
    KRError,
    exit_code_for,
    format_error,
)


def test_envelope_for_domain_errors():
    envelope = format_error(InvalidElement("bad rows", detail={"rows": [[1], [2]]}))
    assert envelope == {
        "ok": False,
        "status": 422,
        "title": "Invalid element",
        "message": "bad rows",
        "hint": InvalidElement.hint,
        "detail": '{"rows":[[1],[2]]}',
    }
    assert exit_code_for(InvalidElement("x")) == 1


def test_envelope_for_resource_errors():
    exc = BudgetExceeded("too big")
    assert format_error(exc)["status"] == 413
    assert exit_code_for(exc) == 2
    assert isinstance(exc, KRError)


def test_envelope_for_unexpected_errors():
    envelope = format_error(RuntimeError("boom"))
    assert envelope["status"] == 500
    assert envelope["detail"] == "RuntimeError"
    assert exit_code_for(RuntimeError()) == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        {"VERTEX_BUDGET": 0},
        {"TENSOR_BUDGET": -1},
        {"COMPONENT_CACHE": 0},
        {"LOG_LEVEL": "LOUD"},
    ],
)
def test_settings_validation(kwargs):
    with pytest.raises(ValueError):
        Settings(**kwargs)


def test_settings_defaults():
    settings = Settings()
    assert settings.VERTEX_BUDGET > 0
    assert settings.LOG_LEVEL in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
