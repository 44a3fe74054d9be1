"""Lenient Japanese ASR evaluation over respelling lattices."""

from lenicer._core import (
    DuplicateSpellingError,
    EditResult,
    EmptyCorpusError,
    EmptyLatticeError,
    EmptyReferenceError,
    Evaluator,
    Lattice,
    LexWeight,
    MalformedLineError,
    NgramModel,
    NotConvertibleError,
    NoValidRecordsError,
    ReadingDictionary,
    Token,
    VariantLexicon,
    edit_distance,
    fold_widths,
    hira_to_kata,
    kata_to_hira,
    lenient_cer,
    naive_cer,
    nfc,
    serialize_tagged,
    shortest_distance,
    string_lattice,
    trim,
)

__all__ = [
    "DuplicateSpellingError",
    "EditResult",
    "EmptyCorpusError",
    "EmptyLatticeError",
    "EmptyReferenceError",
    "Evaluator",
    "Lattice",
    "LexWeight",
    "MalformedLineError",
    "NgramModel",
    "NotConvertibleError",
    "NoValidRecordsError",
    "ReadingDictionary",
    "Token",
    "VariantLexicon",
    "edit_distance",
    "fold_widths",
    "hira_to_kata",
    "kata_to_hira",
    "lenient_cer",
    "naive_cer",
    "nfc",
    "serialize_tagged",
    "shortest_distance",
    "string_lattice",
    "trim",
]

__version__ = "0.1.0"
