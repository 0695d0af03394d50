"""Decoder registry: each decoder maps a syndrome to a correction whose
syndrome cancels the input."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..codegraph import COLOR666, SURFACE, CodeGraph
from ..noise import ErrorConfig
from ..syndrome import Syndrome
from .clustering import Cluster, decode_gcc, decode_hdrg, find_clusters
from .matching import (
    Matching,
    decode_greedy,
    decode_mwpm,
    greedy_matching,
    minimum_weight_matching,
)
from .projection import decode_dsp

__all__ = [
    "Cluster",
    "Matching",
    "DECODERS",
    "DecoderSpec",
    "decode",
    "decode_dsp",
    "decode_gcc",
    "decode_greedy",
    "decode_hdrg",
    "decode_mwpm",
    "find_clusters",
    "greedy_matching",
    "minimum_weight_matching",
]


@dataclass(frozen=True)
class DecoderSpec:
    name: str
    fn: Callable[[CodeGraph, Syndrome, int], ErrorConfig]
    code_kind: str
    qubit_only: bool

    def compatible(self, code: CodeGraph, dim: int) -> bool:
        return code.kind == self.code_kind and (not self.qubit_only or dim == 2)


DECODERS: dict[str, DecoderSpec] = {
    "greedy": DecoderSpec("greedy", decode_greedy, SURFACE, qubit_only=True),
    "mwpm": DecoderSpec("mwpm", decode_mwpm, SURFACE, qubit_only=True),
    "hdrg": DecoderSpec("hdrg", decode_hdrg, SURFACE, qubit_only=False),
    "dsp": DecoderSpec("dsp", decode_dsp, COLOR666, qubit_only=True),
    "gcc": DecoderSpec("gcc", decode_gcc, COLOR666, qubit_only=False),
}


def decode(name: str, code: CodeGraph, syndrome: Syndrome, dim: int) -> ErrorConfig:
    spec = DECODERS[name]
    if not spec.compatible(code, dim):
        raise ValueError(
            f"decoder {name!r} is incompatible with code {code.kind!r} at D={dim}"
        )
    return spec.fn(code, syndrome, dim)
