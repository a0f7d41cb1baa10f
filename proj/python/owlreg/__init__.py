"""Syntactic regularities of OWL ontologies."""

import json as _json

from ._owlreg import (
    AxiomTree,
    ClassFrame,
    Document,
    ParseError,
    Regularity,
    StructureMultiset,
    axiom_contains,
    canonical_encoding,
    classify,
    deduplicate,
    extract_frames,
    frame_contains,
    ground_generalisation,
    internal_tree_structure,
    lift,
    node_count,
    parse_document,
    parse_file,
    partition_axioms,
    partition_frames,
    coverage_count,
    render_structure,
    tree_depth,
    tree_embeds,
)
from . import _owlreg


def analyze(doc, id="ontology", budget=60.0, k=3):
    """Report on one parsed document as a dict."""
    return _json.loads(_owlreg._analyze_json(doc, id, budget, k))


def survey_corpus(directory, budget=60.0, k=3):
    """Report on every .ofn file of a directory as a dict."""
    return _json.loads(_owlreg._survey_json(str(directory), budget, k))


def poset(doc, budget=60.0):
    """Hasse diagrams of the axiom and frame posets of a document."""
    return _owlreg._posets(doc, budget)


__all__ = [name for name in dir() if not name.startswith("_")]
