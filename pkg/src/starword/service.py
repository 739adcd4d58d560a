"""HTTP face of the package: one POST endpoint per command.

Every endpoint takes a small JSON body and returns the same report payload
the CLI prints.  Domain failures come back as HTTP errors whose detail is
the error payload: 400 for operand parse errors, 422 for validation and
location failures.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, commands
from .grammar import ParseError, parse_word
from .motzkin import MotzkinError
from .placements import Location, LocationError

# enumeration is exponential in length; the service refuses jobs whose
# token-string universe is larger than this (the CLI has no such cap)
ENUMERATION_CAP = 5_000_000

_STATUS = {
    commands.EXIT_PARSE: 400,
    commands.EXIT_INVALID: 422,
    commands.EXIT_LOCATION: 422,
}


class WordBody(BaseModel):
    word: str


class OccurrencesBody(BaseModel):
    subword: str
    host: str
    bracketed: bool = False


class Span(BaseModel):
    start: int
    end: int


class ClassifyBody(BaseModel):
    host: str
    first: Span
    second: Span
    bracketed: bool = False
    context: bool = False


class OracleBody(BaseModel):
    host: str
    first: Span
    second: Span
    bracketed: bool = False


class EnumerateBody(BaseModel):
    length: int = Field(ge=0)
    alphabet: str


class Report(BaseModel):
    schema_version: int
    command: str
    inputs: dict[str, str]
    result: dict


app = FastAPI(
    title="starword",
    version=__version__,
    description="Subword placements, their three-way relation, and the "
                "bracketed words behind Motzkin token strings.",
)


def _run(command: str, fn):
    try:
        return fn()
    except (ParseError, MotzkinError, LocationError, ValueError) as exc:
        report, exit_code = commands.error_report(command, exc)
        raise HTTPException(status_code=_STATUS[exit_code], detail=report)


@app.get("/")
def index() -> dict:
    return {
        "name": "starword",
        "version": __version__,
        "endpoints": ["/validate-motzkin", "/encode", "/decode", "/depth",
                      "/path", "/occurrences", "/classify", "/oracle-check",
                      "/enumerate-motzkin"],
    }


@app.post("/validate-motzkin", response_model=Report)
def validate_motzkin(body: WordBody):
    return _run("validate-motzkin", lambda: commands.validate_motzkin(body.word))


@app.post("/encode", response_model=Report)
def encode(body: WordBody):
    return _run("encode", lambda: commands.encode_word(body.word))


@app.post("/decode", response_model=Report)
def decode(body: WordBody):
    return _run("decode", lambda: commands.decode_word(body.word))


@app.post("/depth", response_model=Report)
def depth(body: WordBody):
    return _run("depth", lambda: commands.depth_of(body.word))


@app.post("/path", response_model=Report)
def path(body: WordBody):
    return _run("path", lambda: commands.path_of(body.word))


@app.post("/occurrences", response_model=Report)
def occurrences(body: OccurrencesBody):
    return _run("occurrences", lambda: commands.occurrences(
        body.subword, body.host, bracketed=body.bracketed))


@app.post("/classify", response_model=Report)
def classify(body: ClassifyBody):
    def go():
        first = Location(body.first.start, body.first.end)
        second = Location(body.second.start, body.second.end)
        return commands.classify(body.host, first, second,
                                 bracketed=body.bracketed,
                                 include_contexts=body.context)
    return _run("classify", go)


@app.post("/oracle-check", response_model=Report)
def oracle_check(body: OracleBody):
    def go():
        first = Location(body.first.start, body.first.end)
        second = Location(body.second.start, body.second.end)
        return commands.oracle_check(body.host, first, second,
                                     bracketed=body.bracketed)
    return _run("oracle-check", go)


@app.post("/enumerate-motzkin", response_model=Report)
def enumerate_motzkin(body: EnumerateBody):
    def go():
        size = len(set(parse_word(body.alphabet)))
        if (size + 2) ** body.length > ENUMERATION_CAP:
            raise ValueError("enumeration too large for the service; "
                             "run it through the CLI instead")
        return commands.enumerate_words(body.length, body.alphabet)
    return _run("enumerate-motzkin", go)
