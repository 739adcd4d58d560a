"""Subword placements in plain and bracketed words.

The package tracks where a subword sits inside a host word (a placement:
the subword plus the one-hole context around it), classifies any two
placements as separated, nested or intersecting, and produces the witness
that proves the classification.  The same machinery runs one level up on
bracketed words, which correspond to Motzkin token strings through the
encode/decode pair.  Brute-force oracles re-derive every classification
from the defining equations alone.
"""

from .bracketed import (BracketedWord, bracket, depth, is_plain_bracketed,
                        is_star_bracketed, product, splice_bracketed,
                        star_counts_bracketed, substitute_bracketed, width)
from .bracketed_placements import (BracketedPlacement, bracketed_location_of,
                                   bracketed_placement_from_location,
                                   bracketed_placements_of,
                                   classify_bracketed_placements,
                                   verify_bracketed_witness)
from .grammar import (ParseError, parse_bracketed, parse_location,
                      parse_motzkin, parse_star_bracketed, parse_star_word,
                      parse_word, render, render_bracketed, render_path,
                      tokenize)
from .motzkin import (CLOSE, OPEN, Bracket, Level, MotzkinError, Slope,
                      decode, decode_star, encode, encode_star,
                      enumerate_motzkin, flatten, from_path, is_motzkin,
                      is_star_motzkin, motzkin_violation, substitute_motzkin,
                      to_path)
from .oracles import (Violation, exhaustive_trichotomy_check,
                      oracle_bracketed_relation, oracle_word_relation)
from .placements import (Intersecting, Location, LocationError, Nested,
                         Relation, RelationKind, Separated, WordPlacement,
                         classify_intervals, classify_word_placements,
                         location_of, placement_from_location, placements_of,
                         verify_word_witness)
from .words import (EMPTY, Star, Symbol, Word, concat, is_star_word, is_word,
                    splice, star_counts, substitute, word)

__version__ = "0.1.0"

__all__ = [
    "BracketedPlacement", "BracketedWord", "Bracket", "CLOSE", "EMPTY",
    "Intersecting", "Level", "Location", "LocationError", "MotzkinError",
    "Nested", "OPEN", "ParseError", "Relation", "RelationKind", "Separated",
    "Slope", "Star", "Symbol", "Violation", "Word", "WordPlacement",
    "bracket", "bracketed_location_of", "bracketed_placement_from_location",
    "bracketed_placements_of", "classify_bracketed_placements",
    "classify_intervals", "classify_word_placements", "concat", "decode",
    "decode_star", "depth", "encode", "encode_star", "enumerate_motzkin",
    "exhaustive_trichotomy_check", "flatten", "from_path",
    "is_motzkin", "is_plain_bracketed", "is_star_bracketed",
    "is_star_motzkin", "is_star_word", "is_word", "location_of",
    "motzkin_violation", "oracle_bracketed_relation", "oracle_word_relation",
    "parse_bracketed", "parse_location", "parse_motzkin",
    "parse_star_bracketed", "parse_star_word", "parse_word",
    "placement_from_location", "placements_of", "product", "render",
    "render_bracketed", "render_path", "splice", "splice_bracketed",
    "star_counts", "star_counts_bracketed", "substitute",
    "substitute_bracketed", "substitute_motzkin", "to_path", "tokenize",
    "verify_bracketed_witness", "verify_word_witness", "width", "word",
]
