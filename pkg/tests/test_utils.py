import hashlib

import pytest
from fstminer.utils import decode_varint, encode_varint, iter_varints, sha256_files


@pytest.mark.parametrize(
    "number,encoded",
    [
        (0, b"\x00"),
        (1, b"\x01"),
        (127, b"\x7f"),
        (128, b"\x80\x01"),
        (300, b"\xac\x02"),
        (16384, b"\x80\x80\x01"),
    ],
)
def test_varint_encoding(number, encoded):
    buffer = bytearray()
    assert encode_varint(number, buffer) == len(encoded)
    assert bytes(buffer) == encoded
    assert decode_varint(buffer, 0) == (number, len(encoded))


def test_varint_stream():
    numbers = [5, 0, 70000, 128, 2**40]
    buffer = bytearray(b"\xff")
    for number in numbers:
        encode_varint(number, buffer)
    # decoding starts behind the leading garbage byte
    offset = 1
    for number in numbers:
        decoded, offset = decode_varint(buffer, offset)
        assert decoded == number
    assert offset == len(buffer)
    assert list(iter_varints(buffer[1:])) == numbers


def test_negative_numbers_are_rejected():
    with pytest.raises(AssertionError):
        encode_varint(-1, bytearray())


def test_sha256_files(tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    first.write_bytes(b"c a1 b12 e\n")
    second.write_bytes(b"a1\tA\n")
    expected = hashlib.sha256(b"c a1 b12 e\na1\tA\n").hexdigest()
    assert sha256_files(first, second) == expected
    assert sha256_files(first, None, second) == expected
    assert sha256_files(second, first) != expected
