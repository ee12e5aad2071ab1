from functools import lru_cache
from hypothesis.strategies import composite, integers, lists, sampled_from, tuples
from liftmod import TwistWord
from liftmod.sl2 import Sl2Word
from liftmod.liftable import generatingSet

signs = sampled_from((1, -1))


def words(letters="abci", max_size=20, min_size=0):
    "Random twist words built from unit letters"
    return lists(tuples(sampled_from(letters), signs), min_size=min_size, max_size=max_size).map(TwistWord)


def sl2Words(max_size=20):
    return lists(tuples(sampled_from(("SA", "SB")), signs), max_size=max_size).map(Sl2Word)


def moduli(lo=2, hi=12):
    return integers(min_value=lo, max_value=hi)


@lru_cache(maxsize=None)
def _generators(k): return tuple(generatingSet(k).words)


@composite
def liftableWords(draw, k, max_size=6):
    "Random products of the generators of the liftable subgroup for p_k"
    gens = _generators(k)
    picks = draw(lists(tuples(sampled_from(gens), signs), max_size=max_size))
    w = TwistWord()
    for g, e in picks: w = w * g ** e
    return w
