"""Stack-safe recursion via generator trampolining.

A recursive function is written as a generator that ``yield``s a sub-generator
whenever it would recurse; the value of the ``yield`` expression is the
sub-generator's return value.  :func:`run` drives the whole computation with
an explicit list as the stack, so tree depth is bounded only by memory.
"""
from types import GeneratorType


def run(gen):
    stack = [gen]
    value = None
    while stack:
        try:
            sub = stack[-1].send(value)
        except StopIteration as stop:
            stack.pop()
            value = stop.value
            continue
        if type(sub) is not GeneratorType:
            raise TypeError(f"trampolined function yielded {type(sub).__name__}, expected a generator")
        stack.append(sub)
        value = None
    return value


def done(value):
    """A generator that immediately returns ``value``."""
    return value
    yield  # pragma: no cover


def lift(f):
    """Turn a plain function into a generator function usable as a leaf step."""
    def step(v):
        return f(v)
        yield  # pragma: no cover
    return step
