"""Formal object expressions used to type family components.

An expression is a nested tuple over four node kinds:

* ``("v", i)``            -- the i-th argument object,
* ``("k", obj, idmor)``   -- a fixed object with its identity morphism,
* ``("op", sym, l, r)``   -- a named binary operation applied to two subterms,
* ``("ap", sym, e)``      -- a named unary map (a functor) applied to a subterm.

Symbols are resolved against an environment mapping each symbol to an
``(object_table, morphism_table)`` pair, so one family type can describe
associators, distributors, absorbers and functor monoidality families alike.
Evaluating an expression at the object level yields the expected endpoint of
a component; evaluating it at the morphism level yields the functorial action
used by naturality squares (constants act as their identity morphism).
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

from .errors import MalformedTable

Expr = tuple
Env = dict[str, tuple[dict, dict]]


def var(i: int) -> Expr:
    return ("v", i)


def const(obj: str, idmor: str) -> Expr:
    return ("k", obj, idmor)


def op(sym: str, left: Expr, right: Expr) -> Expr:
    return ("op", sym, left, right)


def app(sym: str, inner: Expr) -> Expr:
    return ("ap", sym, inner)


def arity(expr: Expr) -> int:
    """Number of argument slots the expression reads (max index + 1)."""
    tag = expr[0]
    if tag == "v":
        return expr[1] + 1
    if tag == "k":
        return 0
    if tag == "op":
        return max(arity(expr[2]), arity(expr[3]))
    return arity(expr[2])


def eval_obj(expr: Expr, env: Env, args: Sequence[str]) -> str:
    tag = expr[0]
    if tag == "v":
        return args[expr[1]]
    if tag == "k":
        return expr[1]
    try:
        if tag == "op":
            table = env[expr[1]][0]
            return table[(eval_obj(expr[2], env, args), eval_obj(expr[3], env, args))]
        table = env[expr[1]][0]
        return table[eval_obj(expr[2], env, args)]
    except KeyError as exc:
        raise MalformedTable(f"object table {expr[1]!r} undefined at {exc}") from exc


def eval_mor(expr: Expr, env: Env, args: Sequence[str]) -> str:
    tag = expr[0]
    if tag == "v":
        return args[expr[1]]
    if tag == "k":
        return expr[2]
    try:
        if tag == "op":
            table = env[expr[1]][1]
            return table[(eval_mor(expr[2], env, args), eval_mor(expr[3], env, args))]
        table = env[expr[1]][1]
        return table[eval_mor(expr[2], env, args)]
    except KeyError as exc:
        raise MalformedTable(f"morphism table {expr[1]!r} undefined at {exc}") from exc


def mor_action(expr: Expr, env: Env) -> Callable[[Sequence[str]], str]:
    """Functorial action on morphism tuples described by ``expr``."""

    def act(mors: Sequence[str]) -> str:
        return eval_mor(expr, env, mors)

    return act
