"""Self-complementary graph enumeration, exact counting and deck verification."""

from .canon import CanonicalCertificate, are_isomorphic, canonical_form, refine
from .deck import (
    ClassKey,
    Deck,
    DuplicateGraphError,
    VerificationReport,
    build_deck,
    deck_signature,
    decks_isomorphic_pairwise,
    level1_key,
    partition_classes,
    verify_all,
)
from .graph import (
    INFINITE,
    CharPoly,
    Graph,
    char_poly,
    complement,
    degree_sequence,
    delete_vertex,
    diameter,
)
from .graph6 import Graph6Error, g6_decode, g6_encode, read_g6, write_g6
from .sc_count import counts_table, sc_count
from .sc_enum import enumerate_sc, is_self_complementary

__version__ = "0.1.0"
