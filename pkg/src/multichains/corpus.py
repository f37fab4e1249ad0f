"""Small named posets used by the test suite and the CLI."""
from .poset import Poset


def diamond() -> Poset:
    return Poset.from_covers(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def bowtie() -> Poset:
    """Two minima and two maxima joined through a middle element."""
    return Poset.from_covers(["a", "b", "m", "c", "d"],
                             [("a", "m"), ("b", "m"), ("m", "c"), ("m", "d")])


def crown() -> Poset:
    """Two minima below two maxima; its order complex is a circle."""
    return Poset.from_covers(["a", "b", "c", "d"],
                             [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


CORPUS = {
    "chain2": lambda: Poset.chain(2),
    "chain3": lambda: Poset.chain(3),
    "chain4": lambda: Poset.chain(4),
    "antichain2": lambda: Poset.antichain(2),
    "antichain3": lambda: Poset.antichain(3),
    "diamond": diamond,
    "bowtie": bowtie,
}

EXTRA = {
    "crown": crown,
}


def get(name: str) -> Poset:
    try:
        return {**CORPUS, **EXTRA}[name]()
    except KeyError:
        raise KeyError(f"unknown corpus poset {name!r}; choose from {sorted({**CORPUS, **EXTRA})}") from None


def corpus(extra: bool = False) -> dict:
    table = {**CORPUS, **EXTRA} if extra else CORPUS
    return {name: make() for name, make in table.items()}
