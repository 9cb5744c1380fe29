from pydantic import BaseModel

from ..templates_core import render


def _emit(payload: BaseModel, template: str, *, as_json: bool, context_name: str = "payload") -> None:
    if as_json:
        print(payload.model_dump_json(indent=2))
    else:
        print(render(template, **{context_name: payload}), end="")


def _checks_failed(checks) -> bool:
    return any(check.status == "fail" for check in checks)
