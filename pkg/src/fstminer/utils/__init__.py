import hashlib
from pathlib import Path
from typing import Iterator, Union

CHUNK_SIZE = 1 << 16


def encode_varint(number: int, destination: bytearray) -> int:
    """Append `number` to `destination` as a variable-length byte code.

    Seven payload bits per byte, least significant group first; the high bit is set
    on every byte except the last one. Returns the number of bytes written.
    """
    assert number >= 0, number
    written = 1
    while number > 0x7F:
        destination.append((number & 0x7F) | 0x80)
        number >>= 7
        written += 1
    destination.append(number)
    return written


def decode_varint(source: Union[bytes, bytearray], start: int) -> tuple[int, int]:
    """Decode the number starting at `start`.

    Returns the number and the offset of the first byte after it.
    """
    number = 0
    shift = 0
    while True:
        byte = source[start]
        start += 1
        number |= (byte & 0x7F) << shift
        if byte < 0x80:
            return number, start
        shift += 7


def iter_varints(source: Union[bytes, bytearray]) -> Iterator[int]:
    offset = 0
    end = len(source)
    while offset < end:
        number, offset = decode_varint(source, offset)
        yield number


def sha256_files(*paths: Union[str, Path, None]) -> str:
    """Hex digest over the contents of the given files in order, skipping `None`s."""
    digest = hashlib.sha256()
    for path in paths:
        if path is None:
            continue
        with open(path, "rb") as f:
            while chunk := f.read(CHUNK_SIZE):
                digest.update(chunk)
    return digest.hexdigest()
