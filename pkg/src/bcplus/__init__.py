"""Compiler and model finder for the action language BC+."""

from .action import ActionDescription, CausalLaw, ConstantDecl, Form, Kind, classify
from .errors import BcplusError
from .formula import Atom
from .grounder import load, load_text
from .query import QuerySpec, solve
from .stable import StableQuery, is_stable_model, stable_models
from .transition import paths, states, transitions
from .translate import translate

__all__ = [
    "ActionDescription",
    "Atom",
    "BcplusError",
    "CausalLaw",
    "ConstantDecl",
    "Form",
    "Kind",
    "QuerySpec",
    "StableQuery",
    "classify",
    "is_stable_model",
    "load",
    "load_text",
    "paths",
    "solve",
    "stable_models",
    "states",
    "transitions",
    "translate",
]
