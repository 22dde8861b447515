"""Label store: canonical classes get unique integer labels."""

from __future__ import annotations

import zlib
from typing import Generic, Hashable, Protocol, TypeVar


class Encodable(Protocol):
    def encode(self) -> str: ...


C = TypeVar("C", bound=Encodable)


class ClassDB(Generic[C]):
    """Bijection between canonical class encodings and integer labels.

    Labels are allocated densely in first-seen order, so two classes share a
    label exactly when their canonical encodings are byte-identical. With
    ``compress=True`` the stored encodings are zlib-compressed; this only
    trades memory for time and does not affect labeling.
    """

    def __init__(self, compress: bool = False):
        self._labels: dict[str, int] = {}
        self._classes: list[C] = []
        self._encodings: list[bytes | str] = []
        self._compress = compress

    def add(self, cls: C) -> int:
        enc = cls.encode()
        label = self._labels.get(enc)
        if label is None:
            label = len(self._classes)
            self._labels[enc] = label
            self._classes.append(cls)
            self._encodings.append(
                zlib.compress(enc.encode("utf-8")) if self._compress else enc
            )
        return label

    def get(self, label: int) -> C:
        return self._classes[label]

    def encoding(self, label: int) -> str:
        stored = self._encodings[label]
        if isinstance(stored, bytes):
            return zlib.decompress(stored).decode("utf-8")
        return stored

    def __len__(self) -> int:
        return len(self._classes)

    def __contains__(self, cls: Hashable) -> bool:
        return getattr(cls, "encode")() in self._labels
