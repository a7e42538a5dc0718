"""Collatz-Weyl pseudorandom generators and their verification toolkit."""

from .analysis import (BirthdayEnsemble, BirthdayReport, BudgetExhausted,
                       CycleReport, GraphCensus, InsufficientSamples,
                       TheoryPrediction, TooFewSamples, WidthTooLarge,
                       birthday_exhaustive_cwg16, birthday_ideal_ensemble,
                       birthday_test, brent_probe, build_interleaved,
                       chi_square_uniformity, expected_repeats, graph_census,
                       ks_uniform, theory_predict)
from .experimental import CollatzBit, Cwg64Rot2, Cwg128_2, rotr64
from .generators import Cwg64, Cwg128, Cwg128_64, EvenIncrement
from .scaled import CwgA, CwgB
from .seeding import (ALGOS, GAMMA, Splitmix, SplitmixStream, StreamFamily,
                      increment, seed_simple, seed_splitmix, warmup)

__version__ = "0.1.0"

__all__ = [
    "ALGOS", "BirthdayEnsemble", "BirthdayReport", "BudgetExhausted",
    "CollatzBit", "Cwg128", "Cwg128_2", "Cwg128_64", "Cwg64", "Cwg64Rot2",
    "CwgA", "CwgB", "CycleReport", "EvenIncrement", "GAMMA", "GraphCensus",
    "InsufficientSamples", "Splitmix", "SplitmixStream", "StreamFamily",
    "TheoryPrediction", "TooFewSamples", "WidthTooLarge",
    "birthday_exhaustive_cwg16", "birthday_ideal_ensemble", "birthday_test",
    "brent_probe", "build_interleaved", "chi_square_uniformity",
    "expected_repeats", "graph_census", "increment", "ks_uniform",
    "rotr64", "seed_simple", "seed_splitmix", "theory_predict", "warmup",
]
