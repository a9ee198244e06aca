"""JSON job descriptions: schema validation and conversion to typed inputs."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any

import jsonschema
from referencing import Registry, Resource

from .arith import scalar_from_json
from .gamma import CyclicGroup, LambdaVector


class JobError(ValueError):
    """Malformed job input (a usage error, never a mathematical one)."""


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("wreathsra.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


@lru_cache(maxsize=None)
def _registry() -> Registry:
    job = load_schema("job")
    return Registry().with_resource(job["$id"], Resource.from_contents(job))


def validate(obj: Any, name: str = "job") -> None:
    schema = load_schema(name)
    validator = jsonschema.Draft202012Validator(schema, registry=_registry())
    errors = sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        where = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise JobError(f"{name} schema violation at {where}: {e.message}")


@dataclass(frozen=True)
class Job:
    name: str
    group: CyclicGroup
    lam: LambdaVector
    composition: tuple
    partitions: tuple
    roots: tuple
    check_hypotheses: bool = True
    raw: Any = None

    def get(self, key: str, default=None):
        return self.raw.get(key, default) if isinstance(self.raw, dict) else default

    def scalar(self, key: str, default=None):
        v = self.get(key)
        return default if v is None else scalar_from_json(v, self.group.ell)


def parse_job(obj: Any, name: str = "") -> Job:
    validate(obj, "job")
    ell = obj["ell"]
    group = CyclicGroup(ell)
    lam = LambdaVector(ell, tuple(scalar_from_json(v, ell) for v in obj["lambda"]))
    return Job(
        name=obj.get("name", name),
        group=group,
        lam=lam,
        composition=tuple(obj["composition"]),
        partitions=tuple(tuple(p) for p in obj["partitions"]),
        roots=tuple(tuple(r) for r in obj["roots"]),
        check_hypotheses=obj.get("check_hypotheses", True),
        raw=obj,
    )


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise JobError(f"cannot read {path}: {exc.strerror}") from exc
    if not text.strip():
        raise JobError(f"{path} is empty")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc


def load_catalog(path: str) -> list[dict]:
    obj = read_json(path)
    validate(obj, "catalog")
    return obj["cases"]
