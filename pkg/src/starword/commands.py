"""Command handlers shared by the CLI and the HTTP service.

Each handler parses text operands, runs the corresponding library call and
returns the full report payload: schema_version, command, the operands
echoed back in canonical text, and a result object.  Domain failures
escape as the library's own exceptions; :func:`error_report` turns any of
them into the error payload plus the process exit code the CLI should end
with.
"""

from __future__ import annotations

from typing import Optional

from .bracketed import depth as bracketed_depth
from .bracketed_placements import (bracketed_location_of,
                                   bracketed_placement_from_location,
                                   bracketed_placements_of,
                                   classify_bracketed_placements,
                                   verify_bracketed_witness)
from .grammar import (ParseError, parse_bracketed, parse_motzkin, parse_word,
                      render, render_bracketed, render_path)
from .motzkin import (MotzkinError, decode, encode, enumerate_motzkin,
                      motzkin_violation, to_path)
from .oracles import oracle_bracketed_relation, oracle_word_relation
from .placements import (Intersecting, Location, LocationError, Nested,
                         RelationKind, Separated, classify_word_placements,
                         location_of, placement_from_location, placements_of,
                         verify_word_witness)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_LOCATION = 3

# exit code keyed by the error code strings that appear in payloads
EXIT_BY_CODE = {
    "parse-error": EXIT_PARSE,
    "invalid-motzkin": EXIT_INVALID,
    "invalid-input": EXIT_INVALID,
    "invalid-location": EXIT_LOCATION,
}


def error_details(exc: Exception) -> tuple[str, int, Optional[int]]:
    """Error code, exit code and offending position for a domain failure."""
    if isinstance(exc, ParseError):
        return "parse-error", EXIT_PARSE, exc.position
    if isinstance(exc, MotzkinError):
        return "invalid-motzkin", EXIT_INVALID, exc.position
    if isinstance(exc, LocationError):
        return "invalid-location", EXIT_LOCATION, None
    return "invalid-input", EXIT_INVALID, None


def error_report(command: str, exc: Exception) -> tuple[dict, int]:
    """The error payload printed on stdout, plus the exit code."""
    code, exit_code, position = error_details(exc)
    err: dict = {"code": code, "message": str(exc)}
    if position is not None:
        err["position"] = position
    report = {"schema_version": SCHEMA_VERSION, "command": command, "error": err}
    return report, exit_code


def _report(command: str, inputs: dict, result: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "inputs": inputs, "result": result}


def validate_motzkin(text: str) -> dict:
    tokens = parse_motzkin(text)
    bad = motzkin_violation(tokens)
    if bad is None:
        result: dict = {"valid": True}
    else:
        result = {"valid": False, "reason": bad[0], "position": bad[1]}
    return _report("validate-motzkin", {"word": render(tokens)}, result)


def encode_word(text: str) -> dict:
    f = parse_bracketed(text)
    return _report("encode", {"word": render_bracketed(f)},
                   {"motzkin": render(encode(f))})


def decode_word(text: str) -> dict:
    tokens = parse_motzkin(text)
    f = decode(tokens)
    return _report("decode", {"word": render(tokens)},
                   {"bracketed": render_bracketed(f)})


def depth_of(text: str) -> dict:
    f = parse_bracketed(text)
    return _report("depth", {"word": render_bracketed(f)},
                   {"depth": bracketed_depth(f)})


def path_of(text: str) -> dict:
    tokens = parse_motzkin(text)
    bad = motzkin_violation(tokens)
    if bad is not None:
        raise MotzkinError(*bad)
    return _report("path", {"word": render(tokens)},
                   {"path": render_path(to_path(tokens))})


def occurrences(subword_text: str, host_text: str, *,
                bracketed: bool = False) -> dict:
    if bracketed:
        s, f = parse_bracketed(subword_text), parse_bracketed(host_text)
        pls = bracketed_placements_of(s, f)
        pairs = [(bracketed_location_of(pl), render_bracketed(pl.context))
                 for pl in pls]
        inputs = {"subword": render_bracketed(s), "host": render_bracketed(f),
                  "mode": "bracketed"}
    else:
        u, w = parse_word(subword_text), parse_word(host_text)
        pls = placements_of(u, w)
        pairs = [(location_of(pl), render(pl.context)) for pl in pls]
        inputs = {"subword": render(u), "host": render(w), "mode": "word"}
    entries = [{"location": {"start": loc.start, "end": loc.end},
                "context": ctx} for loc, ctx in pairs]
    return _report("occurrences", inputs,
                   {"count": len(entries), "placements": entries})


def _relation_payload(rel, bracketed: bool) -> dict:
    text = render_bracketed if bracketed else render
    if isinstance(rel, Separated):
        return {"relation": rel.kind.value, "context": text(rel.context),
                "order": rel.order}
    if isinstance(rel, Nested):
        return {"relation": rel.kind.value, "connector": text(rel.connector),
                "direction": rel.direction}
    return {"relation": rel.kind.value, "context": text(rel.context),
            "a": text(rel.a), "b": text(rel.b), "c": text(rel.c),
            "orientation": rel.orientation}


def _placement_pair(host_text: str, first: Location, second: Location,
                    bracketed: bool):
    if bracketed:
        f = parse_bracketed(host_text)
        pl1 = bracketed_placement_from_location(f, first)
        pl2 = bracketed_placement_from_location(f, second)
        return render_bracketed(f), pl1, pl2
    w = parse_word(host_text)
    return render(w), placement_from_location(w, first), \
        placement_from_location(w, second)


def classify(host_text: str, first: Location, second: Location, *,
             bracketed: bool = False, include_contexts: bool = False) -> dict:
    host, pl1, pl2 = _placement_pair(host_text, first, second, bracketed)
    if bracketed:
        rel = classify_bracketed_placements(pl1, pl2)
    else:
        rel = classify_word_placements(pl1, pl2)
    result = _relation_payload(rel, bracketed)
    if include_contexts:
        text = render_bracketed if bracketed else render
        result["first_context"] = text(pl1.context)
        result["second_context"] = text(pl2.context)
    inputs = {"host": host, "first": str(first), "second": str(second),
              "mode": "bracketed" if bracketed else "word"}
    return _report("classify", inputs, result)


def oracle_check(host_text: str, first: Location, second: Location, *,
                 bracketed: bool = False) -> dict:
    host, pl1, pl2 = _placement_pair(host_text, first, second, bracketed)
    if bracketed:
        tags = oracle_bracketed_relation(pl1, pl2)
        fast = classify_bracketed_placements(pl1, pl2)
        sound = verify_bracketed_witness(pl1, pl2, fast)
    else:
        tags = oracle_word_relation(pl1, pl2)
        fast = classify_word_placements(pl1, pl2)
        sound = verify_word_witness(pl1, pl2, fast)
    result = {"oracle": [k.value for k in RelationKind if k in tags],
              "fast": fast.kind.value,
              "agree": set(tags) == {fast.kind} and sound}
    inputs = {"host": host, "first": str(first), "second": str(second),
              "mode": "bracketed" if bracketed else "word"}
    return _report("oracle-check", inputs, result)


def enumerate_words(length: int, alphabet_text: str) -> dict:
    if length < 0:
        raise ValueError("length must be at least 0")
    letters = parse_word(alphabet_text)
    if not letters:
        raise ValueError("alphabet must not be empty")
    words = enumerate_motzkin(length, letters)
    inputs = {"length": str(length), "alphabet": render(letters)}
    return _report("enumerate-motzkin", inputs,
                   {"count": len(words), "words": [render(m) for m in words]})
