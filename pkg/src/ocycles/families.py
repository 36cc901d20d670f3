"""Named object families, shared by the harness and the command line."""

from __future__ import annotations

from .core import (
    MultisetSpec,
    ParameterError,
    Word,
    enumerate_juggling_sequences,
    enumerate_k_permutations,
    enumerate_multiset_permutations,
    enumerate_surjective_strings,
)

FAMILIES = ("perms", "msetperms", "kperms", "surjections", "juggling")


def objects_for(family: str, params: dict) -> tuple[list[Word], int]:
    """Return the object list and the word length for a family."""
    try:
        if family == "perms":
            n = params["n"]
            return list(enumerate_multiset_permutations(MultisetSpec.distinct(n))), n
        if family == "msetperms":
            spec = MultisetSpec.from_symbols(params["multiset"])
            return list(enumerate_multiset_permutations(spec)), spec.n
        if family == "kperms":
            return list(enumerate_k_permutations(params["n"], params["k"])), params["k"]
        if family == "surjections":
            return list(enumerate_surjective_strings(params["n"], params["h"])), params["n"]
        if family == "juggling":
            return list(enumerate_juggling_sequences(params["n"], params["b"])), params["n"]
    except KeyError as exc:
        raise ParameterError(f"family {family!r} needs parameter {exc.args[0]!r}") from None
    except TypeError:
        raise ParameterError(f"missing or malformed parameters for {family!r}: {params}") from None
    raise ParameterError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def has_gcd_criterion(family: str) -> bool:
    return family in ("perms", "msetperms", "juggling")
